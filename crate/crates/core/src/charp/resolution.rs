use super::complex::{FreeComplex, ModulePresentation};
use super::ring::QuotientRing;
use crate::algebra::{PolyMatrix, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{column_degrees, limits, syzygies_graded, Ideal};

/// Splits off trivial summands `R --u--> R` until no differential has a
/// nonzero constant entry. Scan order: differentials in order, then rows,
/// then columns.
pub(crate) fn prune(ring: &QuotientRing, diffs: &mut [PolyMatrix]) -> Result<()> {
    let s = ring.poly_ring();
    let k = s.field();
    loop {
        limits::check()?;
        let Some((idx, r, c, u)) = find_unit(diffs) else { return Ok(()) };
        let d = &diffs[idx];
        let uinv = k.inv(u);
        let mut next = PolyMatrix::zeros(d.rows() - 1, d.cols() - 1);
        for (ii, i) in (0..d.rows()).filter(|&i| i != r).enumerate() {
            let dic = d.get(i, c);
            for (jj, j) in (0..d.cols()).filter(|&j| j != c).enumerate() {
                let mut e = d.get(i, j).clone();
                if !dic.is_zero() && !d.get(r, j).is_zero() {
                    let prod = s.mul(dic, d.get(r, j))?;
                    e = s.sub(&e, &s.scale(&prod, uinv));
                }
                next.set(ii, jj, ring.reduce(&e));
            }
        }
        diffs[idx] = next;
        if idx > 0 {
            diffs[idx - 1] = diffs[idx - 1].without(None, Some(r));
        }
        if idx + 1 < diffs.len() {
            diffs[idx + 1] = diffs[idx + 1].without(Some(c), None);
        }
    }
}

fn find_unit(diffs: &[PolyMatrix]) -> Option<(usize, usize, usize, u32)> {
    for (idx, d) in diffs.iter().enumerate() {
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                let u = d.get(r, c).constant_coeff();
                if u != 0 {
                    return Some((idx, r, c, u));
                }
            }
        }
    }
    None
}

pub(crate) fn kernel(ring: &QuotientRing, d: &PolyMatrix, row_degrees: &[i64]) -> Result<PolyMatrix> {
    if d.cols() == 0 {
        return Ok(PolyMatrix::zeros(0, 0));
    }
    if d.rows() == 0 {
        return Ok(PolyMatrix::identity(ring.poly_ring(), d.cols()));
    }
    syzygies_graded(ring.poly_ring(), d, ring.relations(), row_degrees)
}

/// Extends `d_1` to a minimal resolution with `stages` differentials.
///
/// One stage beyond the requested length is computed and discarded so that
/// redundant generators of the last kept module are detected.
fn extend(ring: &QuotientRing, d1: PolyMatrix, stages: usize) -> Result<FreeComplex> {
    if stages == 0 {
        return Err(Error::Precondition("stages must be at least 1".into()));
    }
    let mut diffs = vec![d1];
    prune(ring, &mut diffs)?;
    while diffs.len() < stages + 1 {
        let mut degrees = vec![0i64; diffs[0].rows()];
        for d in &diffs {
            degrees = column_degrees(d, &degrees);
        }
        let last = diffs.last().unwrap();
        let next = kernel(ring, last, &degrees)?;
        let done = next.cols() == 0;
        diffs.push(next);
        prune(ring, &mut diffs)?;
        if done {
            break;
        }
    }
    Ok(FreeComplex::new_unchecked(ring, diffs[0].rows(), diffs)?.truncate(stages))
}

/// Minimal free resolution of `R/I` over `R` with `stages` differentials.
pub fn resolve_ideal(ring: &QuotientRing, ideal: &Ideal, stages: usize) -> Result<FreeComplex> {
    resolve_generators(ring, ideal.generators(), stages)
}

/// [`resolve_ideal`] from a list of generators.
pub fn resolve_generators(ring: &QuotientRing, gens: &[Polynomial], stages: usize) -> Result<FreeComplex> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(ring.format(g)));
    }
    let row: Vec<Polynomial> = gens.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
    extend(ring, PolyMatrix::row(row), stages)
}

/// Minimal free resolution of the cokernel of a presentation matrix.
pub fn resolve_module(m: &ModulePresentation, stages: usize) -> Result<FreeComplex> {
    extend(m.ring(), m.matrix().clone(), stages)
}
