use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// What a length sequence measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// ℓ(R/I^[p^n]).
    Colength,
    /// ℓ(Tor_i(R/I, F^n R)).
    Tor(usize),
    /// ℓ(H_1(K(f^[p^n]); R)) for a system of parameters f.
    KoszulH1,
}

impl SequenceKind {
    pub fn name(&self) -> String {
        match self {
            SequenceKind::Colength => "colength".into(),
            SequenceKind::Tor(i) => format!("tor_{i}"),
            SequenceKind::KoszulH1 => "koszul_h1".into(),
        }
    }
}

/// Lengths `ℓ_1, ..., ℓ_N` together with their normalizations `ℓ_n / p^{nd}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LengthSequence {
    pub kind: SequenceKind,
    pub ring: String,
    pub ideal: String,
    pub p: u64,
    pub d: usize,
    pub values: Vec<u64>,
}

impl LengthSequence {
    pub fn new(kind: SequenceKind, p: u64, d: usize, values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Precondition("a length sequence needs at least one term".into()));
        }
        Ok(LengthSequence { kind, ring: String::new(), ideal: String::new(), p, d, values })
    }

    pub fn with_labels(mut self, ring: impl Into<String>, ideal: impl Into<String>) -> Self {
        self.ring = ring.into();
        self.ideal = ideal.into();
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `q = p^n` for the `n`-th term (1-based).
    pub fn q(&self, n: usize) -> BigInt {
        num_traits::pow(BigInt::from(self.p), n)
    }

    pub fn normalized(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &l)| BigRational::new(BigInt::from(l), num_traits::pow(self.q(k + 1), self.d)))
            .collect()
    }

    pub fn all_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Estimate of `lim ℓ_n / p^{nd}` from the tail of a sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitEstimate {
    pub raw_last: BigRational,
    pub richardson: BigRational,
    pub error_indicator: BigRational,
    pub n_used: usize,
}

fn rpow(base: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// Solves `ℓ_n = α p^{nd} + β p^{n(d-1)}` exactly from the last two terms.
pub fn extrapolate(s: &LengthSequence) -> LimitEstimate {
    let a = s.normalized();
    let n = a.len();
    let raw_last = a[n - 1].clone();
    if n == 1 {
        return LimitEstimate { raw_last: raw_last.clone(), richardson: raw_last, error_indicator: BigRational::zero(), n_used: 1 };
    }
    let p = BigRational::from_integer(BigInt::from(s.p));
    let d = s.d as i64;
    let nn = n as i64;
    let l_n = BigRational::from_integer(BigInt::from(s.values[n - 1]));
    let l_prev = BigRational::from_integer(BigInt::from(s.values[n - 2]));
    let num = l_n - rpow(&p, d - 1) * l_prev;
    let den = rpow(&p, nn * d) - rpow(&p, nn * d - 1);
    LimitEstimate {
        richardson: num / den,
        error_indicator: (&a[n - 1] - &a[n - 2]).abs(),
        raw_last,
        n_used: n,
    }
}

/// Indices `n` with `|a_{n+1} - a_n| > |a_n - a_{n-1}|`.
pub fn non_shrinking_differences(s: &LengthSequence) -> Vec<usize> {
    let a = s.normalized();
    let diffs: Vec<BigRational> = a.windows(2).map(|w| (&w[1] - &w[0]).abs()).collect();
    diffs.windows(2).enumerate().filter(|(_, w)| w[1] > w[0]).map(|(k, _)| k + 2).collect()
}
