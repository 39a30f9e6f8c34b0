//! Hilbert series of S/I from the leading-term ideal.

use serde::{Deserialize, Serialize};

/// `numerator(t) / (1 - t)^denominator_exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Coefficient of `t^k` at index `k`; no trailing zeros.
    pub numerator: Vec<i64>,
    pub denominator_exp: usize,
}

impl HilbertSeries {
    pub fn numerator_at_one(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Cancels every factor `1 - t` shared by numerator and denominator.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut den = self.denominator_exp;
        while den > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            // N(t) = (1 - t) Q(t) with Q_k = N_0 + ... + N_k
            let mut q = Vec::with_capacity(num.len());
            let mut acc = 0;
            for &c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            trim(&mut q);
            num = q;
            den -= 1;
        }
        HilbertSeries { numerator: num, denominator_exp: den }
    }

    /// Multiplicity: the reduced numerator evaluated at `t = 1`.
    pub fn multiplicity(&self) -> i64 {
        self.reduced().numerator_at_one()
    }

    /// Dimension of the degree-`k` piece.
    pub fn coefficient(&self, k: usize) -> i64 {
        // coefficient of t^j in (1-t)^{-m} is C(j + m - 1, m - 1)
        let m = self.denominator_exp;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(i, _)| *i <= k)
            .map(|(i, &c)| c * binom_series(k - i, m))
            .sum()
    }
}

fn binom_series(j: usize, m: usize) -> i64 {
    if m == 0 {
        return i64::from(j == 0);
    }
    let (n, r) = ((j + m - 1) as i128, (m - 1) as i128);
    let mut acc: i128 = 1;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc as i64
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(&mut out);
    out
}

fn one_minus_t_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] += 1;
    v[d] -= 1;
    trim(&mut v);
    v
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u64).sum::<u64>());
    let mut out: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S / (gens)` over `(1 - t)^n`, by pivot splitting:
/// `N(I) = N(I + (x^e)) + t^e N(I : x^e)`.
pub(crate) fn monomial_numerator(gens: &[Vec<u32>]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    let n = gens[0].len();
    // pairwise coprime generators: the quotient is a complete intersection
    let pivot_var = (0..n).find(|&v| gens.iter().filter(|g| g[v] > 0).count() >= 2);
    let Some(v) = pivot_var else {
        return gens.iter().fold(vec![1], |acc, g| {
            poly_mul(&acc, &one_minus_t_pow(g.iter().map(|&e| e as usize).sum()))
        });
    };
    let e = gens.iter().map(|g| g[v]).filter(|&e| e > 0).min().unwrap();
    let mut pivot = vec![0u32; n];
    pivot[v] = e;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[v] = h[v].saturating_sub(e);
            h
        })
        .collect();
    let mut shifted = vec![0i64; e as usize];
    shifted.extend(monomial_numerator(&colon));
    trim(&mut shifted);
    poly_add(&monomial_numerator(&with_pivot), &shifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(gens: &[Vec<u32>], n: usize) -> HilbertSeries {
        HilbertSeries { numerator: monomial_numerator(gens), denominator_exp: n }
    }

    #[test]
    fn principal_and_trivial_ideals() {
        assert_eq!(hs(&[vec![2, 0]], 2).numerator, vec![1, 0, -1]);
        assert_eq!(hs(&[], 3).numerator, vec![1]);
        let s = hs(&[vec![1, 1, 0]], 3).reduced();
        assert_eq!((s.numerator.clone(), s.denominator_exp), (vec![1, 1], 2));
        assert_eq!(s.multiplicity(), 2);
    }

    #[test]
    fn pivot_recursion_matches_counts() {
        // (x^2, xy, y^3): standard monomials 1, x, y, y^2
        let s = hs(&[vec![2, 0], vec![1, 1], vec![0, 3]], 2).reduced();
        assert_eq!(s.denominator_exp, 0);
        assert_eq!(s.numerator, vec![1, 2, 1]);
        // (xy, xz) in 3 variables: dimension 2
        let s = hs(&[vec![1, 1, 0], vec![1, 0, 1]], 3).reduced();
        assert_eq!(s.denominator_exp, 2);
    }

    #[test]
    fn coefficients_expand_series() {
        let s = hs(&[vec![1, 1, 0]], 3);
        // k[x,y,z]/(xy): degree 2 monomials except xy
        assert_eq!(s.coefficient(2), 5);
        assert_eq!(s.coefficient(0), 1);
    }
}
