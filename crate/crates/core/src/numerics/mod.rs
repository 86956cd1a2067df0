//! Deterministic dense linear algebra, seeded random sampling, and scalar
//! special functions.
//!
//! Everything here is a pure function of its inputs. Reductions use a fixed
//! pairwise summation order so results are bit-identical across runs; that
//! determinism is part of the certification audit trail, so parallel
//! implementations must preserve the same order.

mod matrix;
mod rng;
mod special;
mod vector;

pub use matrix::{power_iteration_opnorm, smallest_eigenvalue_estimate, Mat64};
pub use rng::SeededRng;
pub use special::std_normal_cdf;
pub use vector::{project_to_l2_ball, sample_gaussian_vector, Vec64};

/// Sums a slice in a fixed pairwise order.
///
/// Blocks of up to 32 elements are accumulated sequentially, longer slices
/// are split in half and combined. The split points depend only on the
/// length, so the rounding pattern is reproducible.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 32 {
        let mut acc = 0.0;
        for &v in values {
            acc += v;
        }
        acc
    } else {
        let mid = values.len() / 2;
        pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
    }
}

/// Dot product with the same fixed pairwise reduction order as
/// [`pairwise_sum`].
pub fn pairwise_dot(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "dot of mismatched lengths");
    if a.len() <= 32 {
        let mut acc = 0.0;
        for (x, y) in a.iter().zip(b) {
            acc += x * y;
        }
        acc
    } else {
        let mid = a.len() / 2;
        pairwise_dot(&a[..mid], &b[..mid]) + pairwise_dot(&a[mid..], &b[mid..])
    }
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// Incremental 64-bit FNV-1a hasher over little-endian byte streams.
///
/// Used for dataset content hashes, split hashes, and model spec
/// fingerprints so that identical content always maps to identical ids.
#[derive(Debug, Clone)]
pub struct Fnv1a(u64);

impl Fnv1a {
    pub fn new() -> Self {
        Fnv1a(FNV_OFFSET)
    }

    pub fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(FNV_PRIME);
        }
    }

    pub fn write_u64(&mut self, v: u64) {
        self.write(&v.to_le_bytes());
    }

    pub fn write_f64(&mut self, v: f64) {
        self.write(&v.to_le_bytes());
    }

    pub fn finish(&self) -> u64 {
        self.0
    }
}

impl Default for Fnv1a {
    fn default() -> Self {
        Self::new()
    }
}

/// One-shot FNV-1a of a byte slice.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = Fnv1a::new();
    h.write(bytes);
    h.finish()
}
