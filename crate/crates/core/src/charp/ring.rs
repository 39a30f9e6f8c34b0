use std::collections::HashSet;
use std::sync::Arc;

use crate::algebra::{is_valid_var_name, MonomialOrder, PolyRing, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

#[derive(Debug)]
struct Inner {
    ring: PolyRing,
    relations: Ideal,
    dim: usize,
}

/// A standard graded quotient R = S/J of a polynomial ring over F_p.
///
/// Cheap to clone; the Gröbner basis of J is computed once at construction.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    inner: Arc<Inner>,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.ring == other.inner.ring && self.inner.relations.basis() == other.inner.relations.basis())
    }
}

impl QuotientRing {
    /// Builds `F_p[vars] / (relations)` from relation strings.
    pub fn parse(p: u64, vars: &[&str], relations: &[&str]) -> Result<Self> {
        let ring = polynomial_ring(p, vars)?;
        let rels = relations.iter().map(|r| ring.parse(r)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, rels)
    }

    pub fn new(ring: PolyRing, relations: Vec<Polynomial>) -> Result<Self> {
        if ring.order() != MonomialOrder::DegRevLex {
            return Err(Error::OrderMismatch);
        }
        if let Some(g) = relations.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(ring.format(g)));
        }
        let relations = Ideal::new(&ring, relations)?;
        if relations.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let dim = relations.krull_dimension();
        Ok(QuotientRing { inner: Arc::new(Inner { ring, relations, dim }) })
    }

    /// The ambient polynomial ring S.
    pub fn poly_ring(&self) -> &PolyRing {
        &self.inner.ring
    }

    pub fn relations(&self) -> &Ideal {
        &self.inner.relations
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.ring.characteristic()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn nvars(&self) -> usize {
        self.inner.ring.nvars()
    }

    /// Always true: only homogeneous relations are accepted.
    pub fn is_graded(&self) -> bool {
        true
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.inner.relations.basis().is_empty()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.inner.relations.normal_form(f)
    }

    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.inner.ring.var(i)).collect()
    }

    /// The homogeneous maximal ideal, as an ideal of S.
    pub fn maximal_ideal(&self) -> Result<Ideal> {
        Ideal::maximal(&self.inner.ring)
    }

    /// `J + (gens)` in S.
    pub fn lift_ideal(&self, gens: &[Polynomial]) -> Result<Ideal> {
        self.inner.relations.extend(gens)
    }

    /// ℓ(R / (gens)) computed as the colength of `J + (gens)` in S.
    pub fn colength(&self, gens: &[Polynomial]) -> Result<u64> {
        self.lift_ideal(gens)?.colength()
    }

    /// ℓ(R / (gens)^[q]).
    pub fn bracket_colength(&self, gens: &[Polynomial], q: u64) -> Result<u64> {
        let ring = &self.inner.ring;
        let powered = gens.iter().map(|g| ring.frobenius(g, q)).collect::<Result<Vec<_>>>()?;
        self.colength(&powered)
    }

    pub fn check_power_of_p(&self, q: u64) -> Result<()> {
        self.inner.ring.check_power_of_p(q)
    }

    pub fn p_pow(&self, n: u32) -> Result<u64> {
        self.characteristic().checked_pow(n).ok_or(Error::ExponentOverflow)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        self.inner.ring.format(f)
    }
}

/// `F_p[vars]` with the default degree reverse lexicographic order.
pub fn polynomial_ring(p: u64, vars: &[&str]) -> Result<PolyRing> {
    let field = PrimeField::new(p)?;
    let mut seen = HashSet::new();
    for v in vars {
        if !is_valid_var_name(v) {
            return Err(Error::Parse(format!("invalid variable name `{v}`")));
        }
        if !seen.insert(*v) {
            return Err(Error::Parse(format!("duplicate variable `{v}`")));
        }
    }
    if vars.is_empty() {
        return Err(Error::Parse("no variables declared".into()));
    }
    Ok(PolyRing::new(field, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex))
}

/// Shorthand for [`QuotientRing::parse`].
pub fn quotient_ring(p: u64, vars: &[&str], relations: &[&str]) -> Result<QuotientRing> {
    QuotientRing::parse(p, vars, relations)
}
