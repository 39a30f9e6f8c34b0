//! Independent oracles. Nothing here calls the Gröbner engine.

#![allow(dead_code)]

use std::collections::HashMap;

/// Number of lattice points in the box `[0, max)^m` not dominated by any generator.
/// The box is given by the pure powers, which must be present.
pub fn lattice_colength(gens: &[Vec<u32>]) -> u64 {
    let m = gens[0].len();
    let bounds: Vec<u32> = (0..m)
        .map(|k| {
            gens.iter()
                .filter(|g| g.iter().enumerate().all(|(j, &e)| (j == k) == (e > 0)))
                .map(|g| g[k])
                .min()
                .expect("pure power present")
        })
        .collect();
    let mut count = 0;
    let mut point = vec![0u32; m];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&point).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == m {
                return count;
            }
            point[k] += 1;
            if point[k] < bounds[k] {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}

pub fn bracket(gens: &[Vec<u32>], q: u32) -> Vec<Vec<u32>> {
    gens.iter().map(|g| g.iter().map(|e| e * q).collect()).collect()
}

/// Rank of a dense matrix over F_p.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] % p != 0 {
                let f = row[col];
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a = (*a + p * p - f * b % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// A sparse polynomial as exponent vector -> coefficient in `0..p`.
pub type Poly = HashMap<Vec<u32>, u64>;

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// `dim_k (S/I)` for a homogeneous ideal of finite colength, computed degree
/// by degree as `dim S_t - rank(span of monomial multiples of generators)`.
pub fn degreewise_colength(nvars: usize, p: u64, gens: &[Poly]) -> u64 {
    let mut total = 0;
    for t in 0.. {
        let basis = monomials_of_degree(nvars, t);
        let index: HashMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in gens {
            let deg = g.keys().next().map(|m| m.iter().sum::<u32>()).unwrap();
            if deg > t {
                continue;
            }
            for m in monomials_of_degree(nvars, t - deg) {
                let mut row = vec![0u64; basis.len()];
                for (e, c) in g {
                    let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                    row[index[&prod]] = (row[index[&prod]] + c) % p;
                }
                rows.push(row);
            }
        }
        let dim = basis.len() as u64 - rank_mod_p(rows, p) as u64;
        if dim == 0 {
            return total;
        }
        total += dim;
    }
    unreachable!()
}

/// Parses `c*x^a*y^b + ...` over variables named in `vars`. Only for test input.
pub fn poly(vars: &[&str], p: u64, text: &str) -> Poly {
    let mut out = Poly::new();
    let text = text.replace(' ', "");
    let text = text.replace('-', "+-");
    for term in text.split('+').filter(|s| !s.is_empty()) {
        let (neg, body) = term.strip_prefix('-').map_or((false, term), |b| (true, b));
        let mut coeff = 1u64;
        let mut exps = vec![0u32; vars.len()];
        for factor in body.split('*') {
            if let Ok(c) = factor.parse::<u64>() {
                coeff = coeff * c % p;
                continue;
            }
            let (name, e) = factor.split_once('^').map_or((factor, 1), |(n, e)| (n, e.parse().unwrap()));
            exps[vars.iter().position(|v| *v == name).unwrap()] += e;
        }
        if neg {
            coeff = (p - coeff % p) % p;
        }
        let entry = out.entry(exps).or_insert(0);
        *entry = (*entry + coeff) % p;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn frobenius(f: &Poly, q: u32, p: u64) -> Poly {
    let mut out = Poly::new();
    for (e, c) in f {
        let e: Vec<u32> = e.iter().map(|a| a * q).collect();
        let c = pow_mod(*c, q as u64, p);
        *out.entry(e).or_insert(0) += c;
    }
    out.retain(|_, c| *c % p != 0);
    out
}

/// The A_1 singularity `F_p[x,y,z]/(xy - z^2)` realized as the even-degree
/// part of `F_p[s,t]` via `x = s^2, y = t^2, z = st`. A monomial `x^a y^b z^c`
/// becomes `s^{2a+c} t^{2b+c}`; the degree-`d` piece has basis
/// `s^i t^{2d-i}`, `0 <= i <= 2d`.
pub mod a1 {
    use super::rank_mod_p;

    /// ℓ(R/m^[q]) by counting monomials `s^a t^b`, `a + b` even, outside
    /// `(s^{2q}, t^{2q}, s^q t^q)`.
    pub fn bracket_colength(q: u32) -> u64 {
        let mut count = 0;
        for a in 0..2 * q {
            for b in 0..2 * q {
                if (a + b) % 2 == 0 && !(a >= q && b >= q) {
                    count += 1;
                }
            }
        }
        count
    }

    /// s-exponent shift and coefficient of a signed monomial `± x^a y^b z^c`.
    #[derive(Clone, Copy)]
    pub struct Entry {
        pub s_shift: u32,
        pub degree: u32,
        pub coeff: u64,
    }

    fn entry(a: u32, b: u32, c: u32, coeff: u64) -> Entry {
        Entry { s_shift: 2 * a + c, degree: a + b + c, coeff }
    }

    /// Matrix of a map `⊕ R(-src_deg_j) -> ⊕ R(-dst_deg_i)` in degree `t`,
    /// with rows indexed by target basis vectors.
    fn degree_matrix(
        entries: &[Vec<Option<Entry>>],
        dst_deg: &[u32],
        src_deg: &[u32],
        t: u32,
    ) -> (Vec<Vec<u64>>, usize, usize) {
        let dim = |d: i64| if d < 0 { 0 } else { (2 * d + 1) as usize };
        let dst_offsets: Vec<usize> = dst_deg
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += dim(t as i64 - d as i64);
                Some(o)
            })
            .collect();
        let ndst: usize = dst_deg.iter().map(|&d| dim(t as i64 - d as i64)).sum();
        let mut cols = Vec::new();
        for (j, &sd) in src_deg.iter().enumerate() {
            let deg = t as i64 - sd as i64;
            for i in 0..dim(deg) {
                let mut col = vec![0u64; ndst];
                for (r, row) in entries.iter().enumerate() {
                    if let Some(e) = row[j] {
                        let target = t as i64 - dst_deg[r] as i64;
                        if target < 0 {
                            continue;
                        }
                        col[dst_offsets[r] + i + e.s_shift as usize] += e.coeff;
                    }
                }
                cols.push(col);
            }
        }
        let ncols = cols.len();
        let rows = (0..ndst).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        (rows, ndst, ncols)
    }

    fn rank(m: (Vec<Vec<u64>>, usize, usize), p: u64) -> (usize, usize, usize) {
        let (rows, nr, nc) = m;
        if nr == 0 || nc == 0 {
            return (0, nr, nc);
        }
        (rank_mod_p(rows, p), nr, nc)
    }

    /// `d_1 = [x y z]` and its four linear syzygies over R, twisted by `q`.
    type Map = Vec<Vec<Option<Entry>>>;

    fn maps(q: u32, p: u64) -> (Map, Map) {
        // Frobenius fixes -1 in F_p.
        let sign = p - 1;
        let x = |c| Some(entry(q, 0, 0, c));
        let y = |c| Some(entry(0, q, 0, c));
        let z = |c| Some(entry(0, 0, q, c));
        let d1 = vec![vec![x(1), y(1), z(1)]];
        // Columns: (y, -x, 0), (z, 0, -x), (0, z, -y), (y, 0, -z).
        let d2 = vec![
            vec![y(1), z(1), None, y(1)],
            vec![x(sign), None, z(1), None],
            vec![None, x(sign), y(sign), z(sign)],
        ];
        (d1, d2)
    }

    /// ℓ(H_1(F^n(F_•))) for the resolution `F_•` of the residue field, `q = p^n`,
    /// summing `dim ker - dim im` over degrees `t <= 4q`. Also checks that the last `q` degrees vanish and
    /// that the untwisted `d_2` spans `ker d_1` in low degrees.
    pub fn twisted_h1(p: u64, q: u32) -> u64 {
        let (d1, d2) = maps(1, p);
        for t in 2..12 {
            let (r1, _, n1) = rank(degree_matrix(&d1, &[0], &[1, 1, 1], t), p);
            let (r2, _, _) = rank(degree_matrix(&d2, &[1, 1, 1], &[2, 2, 2, 2], t), p);
            assert_eq!(n1 - r1, r2, "d_2 does not span the syzygies in degree {t}");
        }
        let (d1, d2) = maps(q, p);
        let top = 4 * q;
        let mut total = 0u64;
        let mut tail = 0u64;
        for t in 0..=top {
            let (r1, _, n1) = rank(degree_matrix(&d1, &[0], &[q, q, q], t), p);
            let (r2, _, _) = rank(degree_matrix(&d2, &[q, q, q], &[2 * q; 4], t), p);
            let h = (n1 - r1 - r2) as u64;
            total += h;
            if t + q > top {
                tail += h;
            }
        }
        assert_eq!(tail, 0, "homology does not vanish in the top degrees");
        total
    }
}
