//! Exact noncommutative cross-ratios over division rings.
//!
//! Scalars are rationals or rational quaternions. Tuples of vectors in the
//! right module `D²` are compared through quasideterminants of 2×2 blocks,
//! quasi-Plücker coordinates built from them, and the cross-ratio κ built
//! from those. Everything is exact; irregular inputs are reported as errors
//! naming the factor that could not be inverted.

pub mod commoracle;
pub mod crossratio;
pub mod error;
pub mod linalg;
pub mod qplucker;
pub mod quasidet;
pub mod randgen;
pub mod scalars;
pub mod verify;

pub use crossratio::{cross_ratio, cross_ratio_via_system, normalized_kappa, FourTuple};
pub use error::{Blame, Error, Result};
pub use linalg::{Mat2, Mat2xN, Vec2};
pub use qplucker::{qp, QPIndex};
pub use quasidet::{quasidet, BoxPosition};
pub use scalars::{DivisionRing, Quaternion, Rational};
