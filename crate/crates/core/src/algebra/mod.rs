//! Exact and floating-point composition algebras: scalar backends, the
//! table-defined octonions, and the Cayley-Dickson tower.

mod cayley_dickson;
mod octonion;
mod scalar;

pub use cayley_dickson::{AlgebraLevel, CdElement};
pub use octonion::{mul_table, MulTable, Octonion};
pub use scalar::{display_scalar, Backend, Scalar};
