//! Exact computational kernel for the octonion algebra and the octonionic
//! hyperbolic plane in its incidence-geometric coordinatization.
//!
//! The crate is organised in layers:
//!
//! * [`algebra`]: scalar backends (exact rationals and `f64`), the
//!   table-defined octonions, and the Cayley-Dickson tower with its
//!   embedding.
//! * [`triality`]: bireflection words `x -> axa` together with their left
//!   and right companion rotations.
//! * [`geometry`]: the projective plane over a composition algebra, its
//!   polarity, and the ball model of the hyperbolic plane it carves out.
//! * [`iwasawa`]: the upper-triangular coordinates of the isometry group
//!   acting on the ball, with exact actions where the formulas are
//!   rational.
//! * [`verify`]: randomized self-check suites with deterministic seeds.
//!
//! Everything is generic over the scalar backend; computations that stay
//! inside the field of fractions are bit-exact under the rational backend.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod iwasawa;
pub(crate) mod text;
pub mod triality;
pub mod verify;

pub use error::{Error, Result};
