//! Gröbner bases of ideals and submodules over F_p[x_1, ..., x_m].

pub mod cache;
mod engine;
mod hilbert;
mod ideal;
pub mod limits;
mod module;
mod staircase;
mod vector;

pub use hilbert::HilbertSeries;
pub use ideal::{buchberger, is_groebner_basis, Ideal};
pub use module::{column_degrees, syzygies, syzygies_graded, ModuleGB};
pub use staircase::count_standard;
pub use vector::{ModTerm, ModVec, ModuleOrder};

/// Alias matching the handle name used throughout the docs.
pub type IdealHandle = Ideal;

/// Multiplicity of a Hilbert series: numerator at `t = 1` after cancelling `(1 - t)` factors.
pub fn hs_multiplicity(h: &HilbertSeries) -> i64 {
    h.multiplicity()
}
