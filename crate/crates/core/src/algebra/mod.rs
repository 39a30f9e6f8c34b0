//! Exact arithmetic: F_p scalars, monomials, polynomials and polynomial matrices.

mod field;
mod matrix;
mod monomial;
mod parse;
mod poly;

pub use field::{is_prime, Fp, PrimeField, MAX_CHARACTERISTIC};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::is_valid_var_name;
pub use poly::{PolyRing, Polynomial, Term};
