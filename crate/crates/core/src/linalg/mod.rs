//! Exact dense linear algebra over ℚ.
//!
//! Every check in the crate bottoms out here; there is no floating point.

mod matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::{
    column_space, kernel, rref, subspace_contains, subspace_equal, subspace_sum, EchelonBuilder,
    Subspace,
};
