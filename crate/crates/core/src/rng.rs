//! Seeded counter-based randomness.
//!
//! Every random decision in the crate draws from [`StreamRng`], a ChaCha8
//! keystream. The 256-bit key is the little-endian `u64` seed followed by 24
//! zero bytes; the ChaCha stream id selects independent sub-streams from the
//! same seed. Each draw consumes one `u64` from the keystream, so results are
//! reproducible by any ChaCha8 implementation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::weight::Rational;

#[derive(Clone, Debug)]
pub struct StreamRng {
    inner: ChaCha8Rng,
}

impl StreamRng {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(stream);
        Self { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// One draw; true with probability exactly `p` (clamped to `[0, 1]`).
    ///
    /// The draw `x` is uniform on `[0, 2^64)` and the outcome is
    /// `x < p * 2^64`, compared in exact integer arithmetic.
    pub fn bernoulli(&mut self, p: &Rational) -> bool {
        let x = self.next_u64();
        if p.is_negative() || p.is_zero() {
            return false;
        }
        if *p >= Rational::one() {
            return true;
        }
        let lhs = BigInt::from(x) * p.denom();
        let rhs = p.numer() << 64;
        lhs < rhs
    }

    /// Uniform integer in `0..bound` by rejection sampling on `u64` draws.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform float in `[0, 1)` from the top 53 bits of one draw.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fisher-Yates, from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
