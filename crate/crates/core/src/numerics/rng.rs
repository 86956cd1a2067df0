//! Labeled, splittable random streams.
//!
//! All randomness in the toolkit flows from one root seed split into named
//! streams ("init", "batching", "hessian", "noise", ...). Identical
//! (seed, label) pairs always reproduce the same sequence; distinct labels
//! give statistically independent streams. This lets a test freeze the
//! estimate while varying the noise, and lets a certificate manifest replay
//! a run bit-for-bit.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use super::fnv1a;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A deterministic random stream identified by `(seed, label)`.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    label: String,
    inner: ChaCha12Rng,
}

impl SeededRng {
    /// Creates the stream for `(seed, label)`. The ChaCha key is expanded
    /// from `seed ^ fnv1a(label)` with splitmix64, so distinct labels land
    /// on unrelated keys.
    pub fn new(seed: u64, label: &str) -> Self {
        let mut state = seed ^ fnv1a(label.as_bytes());
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        SeededRng {
            seed,
            label: label.to_string(),
            inner: ChaCha12Rng::from_seed(key),
        }
    }

    /// Derives a child stream with `label = "{parent}/{sublabel}"`.
    pub fn derive(&self, sublabel: &str) -> Self {
        SeededRng::new(self.seed, &format!("{}/{}", self.label, sublabel))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}
