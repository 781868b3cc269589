//! Fixed 64-bit mixing primitives shared by the clique digest and the graph
//! generators.
//!
//! Both are built on the SplitMix64 finalizer (Steele, Lea & Flood 2014;
//! the same constants appear in `java.util.SplittableRandom`). The exact
//! bit stream is part of the output contract: digests and generated graphs
//! must be reproducible across runs, platforms, and reimplementations.

/// SplitMix64 avalanche finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Golden-ratio increment of the SplitMix64 stream.
pub const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// The SplitMix64 sequential generator.
///
/// `next_u64` advances the state by `GOLDEN_GAMMA` and finalizes with
/// `mix64`, exactly as published.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform draw from `0..bound` by rejection, so the distribution is
    /// exact and the stream consumption is platform-independent.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
