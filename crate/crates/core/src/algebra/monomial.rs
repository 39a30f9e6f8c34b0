//! Dense exponent vectors and the two supported monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in a fixed number of variables.
///
/// The total degree is cached because every graded order compares it first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
    degree: u64,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps), degree: exps.iter().map(|&e| e as u64).sum() }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u64;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: other.arity() });
        }
        let mut exps = SmallVec::with_capacity(self.arity());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    /// Product for internal use where operands are known to be small.
    ///
    /// Panics instead of wrapping if an exponent leaves `u32`.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn checked_pow(&self, q: u64) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.arity());
        for &a in self.exps.iter() {
            let e = (a as u64).checked_mul(q).ok_or(Error::ExponentOverflow)?;
            exps.push(u32::try_from(e).map_err(|_| Error::ExponentOverflow)?);
        }
        let degree = self.degree.checked_mul(q).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| b - a).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 4]> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables with positive exponent (first 64 variables).
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << (i % 64)))
    }

    /// Index of the single variable if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Global monomial orders on a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(b.exps.iter()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
        }
    }
}
