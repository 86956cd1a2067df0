//! Certified machine unlearning for small feed-forward networks.
//!
//! The toolkit trains norm-constrained multilayer perceptrons with projected
//! gradient descent, removes the influence of selected training samples with
//! a noisy Newton step whose inverse Hessian is estimated stochastically,
//! evaluates closed-form approximation-error bounds, calibrates Gaussian
//! noise against an `(epsilon, delta)` certification budget, and verifies
//! the whole pipeline against exact dense oracles.

pub mod data;
pub mod error;
pub mod evaluation;
pub mod model;
pub mod numerics;
pub mod training;
pub mod unlearning;

pub use error::{Error, Result};
