use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure modes shared by every layer of the engine.
///
/// The CLI maps these onto exit codes through [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u64),
    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("monomial order mismatch")]
    OrderMismatch,
    #[error("relation `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("the relations generate the unit ideal")]
    UnitIdeal,
    #[error("{q} is not a power of the characteristic {p}")]
    NotPowerOfP { q: u64, p: u64 },
    #[error("not finite length: variable `{0}` has no pure power among the leading terms")]
    NotFiniteLength(String),
    #[error("infinite length: homology component {component} is missing a pure power of `{var}`")]
    InfiniteLength { component: usize, var: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("computation exceeded its time limit")]
    Timeout,
}

/// Coarse classification used for CLI exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Timeout,
    Math,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::NotPrime(_) | Error::NotHomogeneous(_) | Error::ArityMismatch { .. } => {
                ErrorKind::Input
            }
            Error::Timeout => ErrorKind::Timeout,
            _ => ErrorKind::Math,
        }
    }
}
