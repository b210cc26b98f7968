//! Exact-arithmetic verification of relativistic wave operators.
//!
//! Everything is computed over Gaussian rationals: matrix algebra,
//! fraction-free elimination, kernels of wave operators in momentum
//! space, Casimir and helicity diagnostics, and bilinear identities.
//! No floating point is used anywhere; every reported value is exact.

// Tensor contractions index several structures through one summation
// variable; iterator rewrites would hide the index pattern.
#![allow(clippy::needless_range_loop)]

pub mod identities;
pub mod kernel;
pub mod matrix;
pub mod minkowski;
pub mod pl;
pub mod report;
pub mod reps;
pub mod scalar;
pub mod suites;
pub mod systems;
