//! Sparse multivariate polynomials over F_p with sorted term lists.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mon: Monomial,
    pub coeff: u32,
}

/// A polynomial as a strictly descending list of nonzero terms.
///
/// The order is the one of the [`PolyRing`] that built it; polynomials do not
/// carry a ring pointer, so every operation goes through the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    /// True for nonzero constants.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> u32 {
        self.terms.last().filter(|t| t.mon.is_one()).map_or(0, |t| t.coeff)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mon.degree() == t.mon.degree()),
        }
    }

    /// Wraps an already sorted, reduced term list. The caller guarantees the invariants.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }
}

/// The ambient ring S = F_p[x_1, ..., x_m] together with its monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Arc<[String]>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, names: names.into(), order }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { field: self.field, names: self.names.clone(), order }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic() as u64
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.monomial(Monomial::one(self.nvars()), c)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), i, 1), 1)
    }

    pub fn monomial(&self, mon: Monomial, c: i64) -> Polynomial {
        let coeff = self.field.from_i64(c);
        if coeff == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { mon, coeff }] }
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(&self, pairs: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Polynomial> {
        let mut terms = Vec::new();
        for (mon, c) in pairs {
            if mon.arity() != self.nvars() {
                return Err(Error::ArityMismatch { expected: self.nvars(), found: mon.arity() });
            }
            terms.push(Term { mon, coeff: self.field.from_i64(c) });
        }
        Ok(self.normalize(terms))
    }

    /// Sorts, merges duplicate monomials and drops zero coefficients.
    pub(crate) fn normalize(&self, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| self.order.cmp(&b.mon, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon => last.coeff = self.field.add(last.coeff, t.coeff),
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff == 0 {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff == 0) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// `f + c * m * g`, merging two sorted term lists.
    pub fn add_scaled(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let k = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|t| Term { mon: t.mon.mul(m), coeff: k.mul(t.coeff, c) }).peekable();
        while i < f.terms.len() || gi.peek().is_some() {
            let ord = match (f.terms.get(i), gi.peek()) {
                (Some(a), Some(b)) => self.order.cmp(&a.mon, &b.mon),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let b = gi.next().unwrap();
                    let s = k.add(f.terms[i].coeff, b.coeff);
                    if s != 0 {
                        out.push(Term { mon: b.mon, coeff: s });
                    }
                    i += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, 1, &Monomial::one(self.nvars()), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, self.field.neg(1), &Monomial::one(self.nvars()), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f.terms.iter().map(|t| Term { mon: t.mon.clone(), coeff: self.field.mul(t.coeff, c) }).collect(),
        }
    }

    /// Multiplies every term by `c * m`; the order is multiplicative so no resort is needed.
    pub fn mul_term(&self, f: &Polynomial, c: u32, m: &Monomial) -> Result<Polynomial> {
        if c == 0 {
            return Ok(Polynomial::zero());
        }
        let mut terms = Vec::with_capacity(f.len());
        for t in &f.terms {
            terms.push(Term { mon: t.mon.checked_mul(m)?, coeff: self.field.mul(t.coeff, c) });
        }
        Ok(Polynomial { terms })
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut terms = Vec::with_capacity(f.len() * g.len());
        for s in &small.terms {
            for l in &large.terms {
                terms.push(Term { mon: s.mon.checked_mul(&l.mon)?, coeff: self.field.mul(s.coeff, l.coeff) });
            }
        }
        Ok(self.normalize(terms))
    }

    pub fn pow(&self, f: &Polynomial, mut e: u64) -> Result<Polynomial> {
        let mut base = f.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// `f^q` for `q` a power of the characteristic.
    ///
    /// Frobenius is additive and fixes F_p, so this maps each term `c m` to
    /// `c m^q`. Monomial orders are multiplicative, so the term order is kept.
    pub fn frobenius(&self, f: &Polynomial, q: u64) -> Result<Polynomial> {
        self.check_power_of_p(q)?;
        let mut terms = Vec::with_capacity(f.len());
        for t in &f.terms {
            terms.push(Term { mon: t.mon.checked_pow(q)?, coeff: t.coeff });
        }
        Ok(Polynomial { terms })
    }

    pub fn check_power_of_p(&self, q: u64) -> Result<()> {
        let p = self.characteristic();
        let mut r = q;
        while r > 1 && r.is_multiple_of(p) {
            r /= p;
        }
        if q == 0 || r != 1 {
            return Err(Error::NotPowerOfP { q, p });
        }
        Ok(())
    }

    /// Renders `f` with signed coefficients, e.g. `x*y - z^2`.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, t) in f.terms.iter().enumerate() {
            let c = self.field.signed(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (idx, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mon = self.format_monomial(&t.mon);
            if mon.is_empty() {
                write!(s, "{abs}").unwrap();
            } else if abs == 1 {
                s.push_str(&mon);
            } else {
                write!(s, "{abs}*{mon}").unwrap();
            }
        }
        s
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.names.iter().zip(m.exps()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}
