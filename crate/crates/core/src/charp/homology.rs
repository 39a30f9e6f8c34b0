use super::complex::{frobenius_twist, FreeComplex, ModulePresentation};
use super::resolution::{kernel, resolve_ideal, resolve_module};
use super::ring::QuotientRing;
use crate::error::{Error, Result};
use crate::groebner::{column_degrees, Ideal, ModVec, ModuleGB};

/// ℓ(H_i(C)) = ℓ(ker d_i / im d_{i+1}).
///
/// For `i >= 1` the homology is presented as `R^m / {a : K a ∈ im d_{i+1}}`
/// where the columns of `K` generate `ker d_i`. That submodule is obtained in
/// one elimination: the module generated by `(K_j, e_j)`, `(d_{i+1} e_l, 0)`
/// and `J` in every component, intersected with the trailing block.
pub fn homology_length(c: &FreeComplex, i: usize) -> Result<u64> {
    if i > c.length() {
        return Err(Error::Precondition(format!("homological degree {i} exceeds complex length {}", c.length())));
    }
    let ring = c.ring();
    let s = ring.poly_ring();
    let j = ring.relations();
    let degrees = c.basis_degrees();
    let bi = c.ranks()[i];
    if bi == 0 {
        return Ok(0);
    }
    let image: Vec<ModVec> = if i < c.length() {
        c.differential(i + 1).columns().iter().map(|col| ModVec::from_column(col, 0)).collect()
    } else {
        Vec::new()
    };
    if i == 0 {
        let gb = ModuleGB::new(s, bi, image, j, &degrees[0])?;
        return gb.standard_count(0..bi);
    }
    let k = kernel(ring, c.differential(i), &degrees[i - 1])?;
    let m = k.cols();
    if m == 0 {
        return Ok(0);
    }
    let mut gens: Vec<ModVec> = k
        .columns()
        .iter()
        .enumerate()
        .map(|(l, col)| ModVec::concat(vec![ModVec::from_column(col, 0), ModVec::from_poly(&s.one(), bi + l)]))
        .collect();
    gens.extend(image);
    let mut shifts = degrees[i].clone();
    shifts.extend(column_degrees(&k, &degrees[i]));
    let gb = ModuleGB::new(s, bi + m, gens, j, &shifts)?;
    gb.standard_count(bi..bi + m)
}

/// Checks that `J + I` has finite colength.
pub fn check_primary(ring: &QuotientRing, ideal: &Ideal) -> Result<()> {
    let lifted = ring.lift_ideal(ideal.generators())?;
    if lifted.is_zero_dimensional() {
        Ok(())
    } else {
        Err(Error::NotFiniteLength("the ideal is not primary to the maximal ideal".into()))
    }
}

/// ℓ(Tor_i(R/I, F^n R)) as the homology of the `p^n`-twisted resolution of `R/I`.
pub fn tor_length(ring: &QuotientRing, ideal: &Ideal, i: usize, n: u32) -> Result<u64> {
    check_primary(ring, ideal)?;
    let res = resolve_ideal(ring, ideal, i + 1)?;
    twisted_homology(&res, i, ring.p_pow(n)?)
}

/// ℓ(H_i(F^e C)) with `q = p^e`. Lengths shorter than `i` give 0.
pub fn twisted_homology(c: &FreeComplex, i: usize, q: u64) -> Result<u64> {
    if i > c.length() {
        return Ok(0);
    }
    homology_length(&frobenius_twist(c, q)?, i)
}

/// `(ℓ(H_1(F^n C)), ℓ(Tor_1(H_0(C), F^n R)))`. The first entry bounds the second.
pub fn bi_surjection_bound(c: &FreeComplex, n: u32) -> Result<(u64, u64)> {
    for i in 1..=c.length() {
        homology_length(c, i).map_err(|e| match e {
            Error::InfiniteLength { .. } => Error::NotFiniteLength(format!("H_{i} of the complex has infinite length")),
            e => e,
        })?;
    }
    if c.length() == 0 {
        return Ok((0, 0));
    }
    let ring = c.ring();
    let q = ring.p_pow(n)?;
    let h1 = homology_length(&frobenius_twist(c, q)?, 1)?;
    let h0 = ModulePresentation::new(ring, c.differential(1).clone())?;
    let res = resolve_module(&h0, 2)?;
    let tor1 = twisted_homology(&res, 1, q)?;
    Ok((h1, tor1))
}
