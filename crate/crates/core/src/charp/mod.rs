//! Quotient rings over F_p, free complexes, Frobenius twists and homology lengths.

mod complex;
mod homology;
mod resolution;
mod ring;

pub use complex::{frobenius_twist, koszul_complex, FreeComplex, ModulePresentation};
pub use homology::{bi_surjection_bound, check_primary, homology_length, tor_length, twisted_homology};
pub use resolution::{resolve_generators, resolve_ideal, resolve_module};
pub use ring::{polynomial_ring, quotient_ring, QuotientRing};
