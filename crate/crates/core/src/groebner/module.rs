//! Submodules of S^r modulo an ideal J, and syzygies over S/J.

use super::engine::{groebner_basis, Reducer};
use super::ideal::Ideal;
use super::staircase::count_standard;
use super::vector::{ModVec, VecArith};
use crate::algebra::{PolyMatrix, PolyRing};
use crate::error::{Error, Result};

/// Reduced Gröbner basis of a submodule of S^rank (position-over-term).
#[derive(Clone, Debug)]
pub struct ModuleGB {
    ring: PolyRing,
    rank: usize,
    basis: Vec<ModVec>,
}

impl ModuleGB {
    /// Gröbner basis of the submodule generated by `gens` plus `J e_c` for every component `c`.
    pub fn new(ring: &PolyRing, rank: usize, gens: Vec<ModVec>, relations: &Ideal, shifts: &[i64]) -> Result<Self> {
        let ar = VecArith::new(ring);
        let mut all = gens;
        for c in 0..rank {
            all.extend(relations.basis().iter().map(|g| ModVec::from_poly(g, c)));
        }
        let basis = groebner_basis(&ar, rank, all, shifts)?;
        Ok(ModuleGB { ring: ring.clone(), rank, basis })
    }

    /// Submodule generated by the columns of `m` (plus `J` in every component).
    pub fn from_columns(ring: &PolyRing, m: &PolyMatrix, relations: &Ideal) -> Result<Self> {
        let gens = m.columns().iter().map(|c| ModVec::from_column(c, 0)).collect();
        Self::new(ring, m.rows(), gens, relations, &vec![0; m.rows()])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis(&self) -> &[ModVec] {
        &self.basis
    }

    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        let ar = VecArith::new(&self.ring);
        Reducer::new(self.basis.clone()).reduce(&ar, v.clone(), None, None)
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// `dim_k` of `S^{range} / (submodule ∩ S^{range})` summed over components in `comps`.
    ///
    /// With a position-over-term order, basis elements whose leading term
    /// lies in a trailing block of components generate the intersection of
    /// the submodule with that block.
    pub fn standard_count(&self, comps: std::ops::Range<usize>) -> Result<u64> {
        let mut total = 0;
        for c in comps.clone() {
            let lts: Vec<Vec<u32>> = self
                .basis
                .iter()
                .filter_map(|v| v.lead())
                .filter(|t| t.comp as usize == c)
                .map(|t| t.mon.exps().to_vec())
                .collect();
            total += count_standard(&lts, self.ring.nvars()).map_err(|v| Error::InfiniteLength {
                component: c - comps.start,
                var: self.ring.names()[v].clone(),
            })?;
        }
        Ok(total)
    }
}

/// Degrees of the source basis vectors of `m` given the degrees of the target basis.
///
/// A zero column gets the largest row degree.
pub fn column_degrees(m: &PolyMatrix, row_degrees: &[i64]) -> Vec<i64> {
    let fallback = row_degrees.iter().copied().max().unwrap_or(0);
    (0..m.cols())
        .map(|j| {
            (0..m.rows())
                .find_map(|i| m.get(i, j).degree().map(|d| row_degrees[i] + d as i64))
                .unwrap_or(fallback)
        })
        .collect()
}

/// Vectors `v` with `M v ≡ 0` modulo `J` in every component, as the columns
/// of a `cols(M) × s` matrix with entries reduced modulo `J`.
///
/// Computed by elimination: the module generated by `(M e_j, e_j)` and `J`
/// in `S^{rows + cols}` is intersected with the trailing block.
pub fn syzygies(ring: &PolyRing, m: &PolyMatrix, relations: &Ideal) -> Result<PolyMatrix> {
    syzygies_graded(ring, m, relations, &vec![0; m.rows()])
}

/// [`syzygies`] with known degrees of the target basis, which lets pair
/// selection proceed degree by degree.
pub fn syzygies_graded(ring: &PolyRing, m: &PolyMatrix, relations: &Ideal, row_degrees: &[i64]) -> Result<PolyMatrix> {
    let (r, k) = (m.rows(), m.cols());
    let mut shifts = row_degrees.to_vec();
    shifts.extend(column_degrees(m, row_degrees));
    let gens = m
        .columns()
        .iter()
        .enumerate()
        .map(|(j, col)| ModVec::concat(vec![ModVec::from_column(col, 0), ModVec::from_poly(&ring.one(), r + j)]))
        .collect();
    let gb = ModuleGB::new(ring, r + k, gens, relations, &shifts)?;
    let mut out = Vec::new();
    for v in gb.basis() {
        if (v.lead().unwrap().comp as usize) < r {
            continue;
        }
        let col = relations.normal_forms(&v.to_column(r, k));
        if col.iter().any(|f| !f.is_zero()) && !out.contains(&col) {
            out.push(col);
        }
    }
    PolyMatrix::from_columns(k, out)
}
