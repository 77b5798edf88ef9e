//! Numerical laboratory for quasi-convex subsets of curved model spaces.
//!
//! The crate provides exact trigonometry in constant-curvature comparison
//! planes, a zoo of model spaces with closed-form distances and geodesics,
//! computations in spaces of directions, discrete gradient and radial curves
//! of distance functions, and a family of falsification checkers for
//! quasi-convexity and extremality of subsets, cross-validated against each
//! other.

pub mod error;
pub mod exec;
pub mod sample;
pub mod spaceform;

pub use error::{GeomError, Result};
