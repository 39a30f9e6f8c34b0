use super::ring::QuotientRing;
use crate::algebra::{PolyMatrix, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::column_degrees;

/// A bounded complex of finite free R-modules
/// `0 ← R^{b_0} ←d_1− R^{b_1} ← ... ←d_s− R^{b_s} ← 0`.
///
/// Entries of every differential are kept as normal forms modulo J.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeComplex {
    ring: QuotientRing,
    ranks: Vec<usize>,
    differentials: Vec<PolyMatrix>,
}

impl FreeComplex {
    /// Validates shapes and the composition-zero condition.
    pub fn new(ring: &QuotientRing, b0: usize, differentials: Vec<PolyMatrix>) -> Result<Self> {
        let c = Self::new_unchecked(ring, b0, differentials)?;
        c.verify_composition()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(ring: &QuotientRing, b0: usize, differentials: Vec<PolyMatrix>) -> Result<Self> {
        let mut ranks = vec![b0];
        let mut reduced = Vec::with_capacity(differentials.len());
        for (i, d) in differentials.into_iter().enumerate() {
            if d.rows() != *ranks.last().unwrap() {
                return Err(Error::DimensionMismatch(format!(
                    "d_{} has {} rows but b_{} = {}",
                    i + 1,
                    d.rows(),
                    i,
                    ranks.last().unwrap()
                )));
            }
            ranks.push(d.cols());
            reduced.push(d.map(|f| Ok(ring.reduce(f)))?);
        }
        Ok(FreeComplex { ring: ring.clone(), ranks, differentials: reduced })
    }

    pub fn verify_composition(&self) -> Result<()> {
        let s = self.ring.poly_ring();
        for (i, w) in self.differentials.windows(2).enumerate() {
            let prod = w[0].mul(s, &w[1])?;
            if prod.entries().iter().any(|f| !self.ring.reduce(f).is_zero()) {
                return Err(Error::Precondition(format!("d_{} * d_{} is not zero modulo J", i + 1, i + 2)));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// `d_i` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.differentials[i - 1]
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    /// Degrees of the basis vectors of each `C_i`, with `C_0` generated in degree 0.
    pub fn basis_degrees(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ranks[0]]];
        for d in &self.differentials {
            let next = column_degrees(d, out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn has_unit_entry(&self) -> bool {
        self.differentials.iter().any(|d| d.entries().iter().any(|f| f.constant_coeff() != 0))
    }

    /// The first `stages` differentials.
    pub fn truncate(&self, stages: usize) -> FreeComplex {
        let k = stages.min(self.differentials.len());
        FreeComplex {
            ring: self.ring.clone(),
            ranks: self.ranks[..=k].to_vec(),
            differentials: self.differentials[..k].to_vec(),
        }
    }

    pub fn format(&self) -> String {
        let s = self.ring.poly_ring();
        self.differentials
            .iter()
            .enumerate()
            .map(|(i, d)| format!("d_{}:\n{}", i + 1, d.format(s)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// A finitely presented R-module: the cokernel of `matrix: R^c → R^rank`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation {
    ring: QuotientRing,
    matrix: PolyMatrix,
}

impl ModulePresentation {
    pub fn new(ring: &QuotientRing, matrix: PolyMatrix) -> Result<Self> {
        let matrix = matrix.map(|f| Ok(ring.reduce(f)))?;
        Ok(ModulePresentation { ring: ring.clone(), matrix })
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }
}

/// Koszul complex on `elems`: `C_i = Λ^i R^n` with basis the `i`-subsets in
/// lexicographic order and `d(e_S) = Σ_k (-1)^k f_{s_k} e_{S \ s_k}`.
pub fn koszul_complex(ring: &QuotientRing, elems: &[Polynomial]) -> Result<FreeComplex> {
    let s = ring.poly_ring();
    let elems: Vec<Polynomial> = elems.iter().map(|f| ring.reduce(f)).collect();
    let n = elems.len();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets_of_size(n, k)).collect();
    let mut diffs = Vec::with_capacity(n);
    for k in 1..=n {
        let (src, dst) = (&subsets[k], &subsets[k - 1]);
        let mut d = PolyMatrix::zeros(dst.len(), src.len());
        for (j, set) in src.iter().enumerate() {
            for (pos, &v) in set.iter().enumerate() {
                let face: Vec<usize> = set.iter().copied().filter(|&w| w != v).collect();
                let row = dst.binary_search(&face).expect("face is a subset");
                let entry = if pos % 2 == 0 { elems[v].clone() } else { s.neg(&elems[v]) };
                d.set(row, j, entry);
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(ring, 1, diffs)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Applies the Frobenius functor `F^e` with `q = p^e`: every entry is raised
/// to the `q`-th power and reduced modulo J.
pub fn frobenius_twist(c: &FreeComplex, q: u64) -> Result<FreeComplex> {
    let ring = c.ring();
    ring.check_power_of_p(q)?;
    let s = ring.poly_ring();
    let diffs = c
        .differentials()
        .iter()
        .map(|d| d.map(|f| Ok(ring.reduce(&s.frobenius(f, q)?))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeComplex { ring: ring.clone(), ranks: c.ranks().to_vec(), differentials: diffs })
}
