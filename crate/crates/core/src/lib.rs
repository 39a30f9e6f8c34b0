//! Exact computation of Hilbert–Kunz multiplicities, Frobenius-twisted Tor
//! lengths and regularity criteria for standard graded rings over F_p.

pub mod algebra;
pub mod charp;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod invariants;

pub use error::{Error, ErrorKind, Result};
