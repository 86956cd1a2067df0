//! Finite `f64` vectors with fixed-order reductions.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

use super::{pairwise_dot, pairwise_sum, SeededRng};

/// Relative slack accepted when testing membership of the `C` ball. Covers
/// the rounding of the projection scale and of the pairwise norm itself, so
/// projecting twice is a bitwise no-op.
pub(crate) const BALL_TOL: f64 = 64.0 * f64::EPSILON;

/// A dense real vector. Entries are finite; dimension is at least one.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec64(Vec<f64>);

impl Vec64 {
    /// Validating constructor: rejects empty and nonfinite input.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("vector dimension must be >= 1"));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!(
                "nonfinite entry at index {i}: {}",
                values[i]
            )));
        }
        Ok(Vec64(values))
    }

    /// Constructor for internal values already known to be finite.
    pub(crate) fn from_raw(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty());
        Vec64(values)
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "vector dimension must be >= 1");
        Vec64(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn dot(&self, other: &Vec64) -> f64 {
        pairwise_dot(&self.0, &other.0)
    }

    pub fn norm2(&self) -> f64 {
        pairwise_dot(&self.0, &self.0).sqrt()
    }

    pub fn sum(&self) -> f64 {
        pairwise_sum(&self.0)
    }

    pub fn scale(&self, factor: f64) -> Vec64 {
        Vec64(self.0.iter().map(|v| v * factor).collect())
    }

    pub fn add(&self, other: &Vec64) -> Vec64 {
        assert_eq!(self.dim(), other.dim());
        Vec64(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vec64) -> Vec64 {
        assert_eq!(self.dim(), other.dim());
        Vec64(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self += factor * other`, in place.
    pub fn axpy(&mut self, factor: f64, other: &Vec64) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += factor * b;
        }
    }

    pub fn distance(&self, other: &Vec64) -> f64 {
        assert_eq!(self.dim(), other.dim());
        let diffs: Vec<f64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        pairwise_dot(&diffs, &diffs).sqrt()
    }
}

impl std::ops::Index<usize> for Vec64 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Draws `dim` i.i.d. samples from `N(0, sigma^2)`.
///
/// `sigma = 0` returns the zero vector without consuming the stream, so a
/// zero-noise certificate is still replayable.
pub fn sample_gaussian_vector(dim: usize, sigma: f64, rng: &mut SeededRng) -> Result<Vec64> {
    if dim == 0 {
        return Err(Error::invalid("gaussian sample dimension must be >= 1"));
    }
    if !(sigma >= 0.0) {
        return Err(Error::invalid(format!("sigma must be >= 0, got {sigma}")));
    }
    if sigma == 0.0 {
        return Ok(Vec64::zeros(dim));
    }
    let values = (0..dim)
        .map(|_| sigma * rng.sample::<f64, _>(StandardNormal))
        .collect();
    Ok(Vec64::from_raw(values))
}

/// Projects `w` onto the Euclidean ball of radius `c`.
///
/// Interior points (within [`BALL_TOL`] relative slack) are returned
/// unchanged, which makes the projection idempotent bit-for-bit.
pub fn project_to_l2_ball(w: &Vec64, c: f64) -> Result<Vec64> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::invalid(format!("ball radius must be positive, got {c}")));
    }
    if !w.is_finite() {
        return Err(Error::invalid("cannot project a nonfinite vector"));
    }
    let norm = w.norm2();
    if norm <= c * (1.0 + BALL_TOL) {
        Ok(w.clone())
    } else {
        Ok(w.scale(c / norm))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gaussian_zero_sigma_is_zero_vector() {
        let mut rng = SeededRng::new(1, "noise");
        let v = sample_gaussian_vector(3, 0.0, &mut rng).unwrap();
        assert_eq!(v.as_slice(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn gaussian_zero_dim_rejected() {
        let mut rng = SeededRng::new(1, "noise");
        assert!(sample_gaussian_vector(0, 1.0, &mut rng).is_err());
    }

    #[test]
    fn gaussian_is_deterministic_per_label() {
        let mut a = SeededRng::new(7, "noise");
        let mut b = SeededRng::new(7, "noise");
        let x = sample_gaussian_vector(64, 2.0, &mut a).unwrap();
        let y = sample_gaussian_vector(64, 2.0, &mut b).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn gaussian_sample_variance_within_chi_square_interval() {
        // n = 1e4 draws at sigma = 2: the 99.9% chi-square interval for the
        // sample variance is roughly [3.81, 4.19]; the contract states the
        // looser [3.6, 4.4].
        let mut rng = SeededRng::new(7, "noise");
        let v = sample_gaussian_vector(10_000, 2.0, &mut rng).unwrap();
        let n = v.dim() as f64;
        let mean = v.sum() / n;
        let centered: Vec<f64> = v.as_slice().iter().map(|x| x - mean).collect();
        let var = crate::numerics::pairwise_dot(&centered, &centered) / (n - 1.0);
        assert!(mean.abs() < 5.0 * 2.0 / n.sqrt(), "mean {mean}");
        assert!((3.6..=4.4).contains(&var), "variance {var}");
    }

    #[test]
    fn projection_scales_boundary_case_exactly() {
        // norm 20 = sqrt(12^2 + 16^2), radius 10: scale is exactly 1/2.
        let w = Vec64::new(vec![12.0, 16.0]).unwrap();
        let p = project_to_l2_ball(&w, 10.0).unwrap();
        assert_eq!(p.as_slice(), &[6.0, 8.0]);
    }

    #[test]
    fn projection_keeps_interior_points() {
        let w = Vec64::new(vec![3.0, 0.0]).unwrap();
        let p = project_to_l2_ball(&w, 10.0).unwrap();
        assert_eq!(p, w);
    }

    #[test]
    fn projection_rejects_nonfinite() {
        let w = Vec64::from_raw(vec![1.0, f64::NAN]);
        assert!(project_to_l2_ball(&w, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn projection_is_feasible_and_idempotent(
            entries in proptest::collection::vec(-1e6f64..1e6, 1..64),
            c in 1e-3f64..1e3,
        ) {
            let w = Vec64::new(entries).unwrap();
            let p = project_to_l2_ball(&w, c).unwrap();
            prop_assert!(p.norm2() <= c * (1.0 + BALL_TOL));
            let pp = project_to_l2_ball(&p, c).unwrap();
            prop_assert_eq!(
                p.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                pp.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>()
            );
            // Direction is preserved: p is a nonnegative multiple of w.
            let wn = w.norm2();
            if wn > 0.0 {
                let cos = w.dot(&p) / (wn * p.norm2().max(f64::MIN_POSITIVE));
                prop_assert!(p.norm2() == 0.0 || cos > 1.0 - 1e-9);
            }
        }
    }
}
