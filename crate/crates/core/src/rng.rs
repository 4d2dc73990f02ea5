//! Small deterministic generator for reproducible randomized checks.

use crate::scalar::Scalar;

/// SplitMix64. Deterministic, seedable, good enough for drawing test data.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Rational with numerator in `-bound..=bound` and denominator in
    /// `1..=bound`.
    pub fn small_ratio<S: Scalar>(&mut self, bound: i64) -> S {
        let num = self.below((2 * bound + 1) as u64) as i64 - bound;
        let den = self.below(bound as u64) as i64 + 1;
        S::ratio(num, den)
    }
}
