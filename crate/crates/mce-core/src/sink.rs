//! Output contract shared by every engine.
//!
//! A [`CliqueSink`] receives each maximal clique exactly once. It always
//! maintains a running count and an order-independent digest; list mode
//! additionally stores the cliques themselves (vertices ascending).
//!
//! Digest scheme, fixed for cross-implementation reproducibility: each
//! clique hashes to a 64-bit value by folding its ascending vertex ids
//! through the SplitMix64 finalizer, and the graph digest is the wrapping
//! sum of the per-clique values. Summation commutes, so engines may emit
//! in any order.

use crate::mix::{mix64, GOLDEN_GAMMA};

/// 64-bit hash of one clique, over ascending vertex ids.
pub fn clique_hash(clique_ascending: &[u32]) -> u64 {
    debug_assert!(clique_ascending.windows(2).all(|w| w[0] < w[1]));
    let mut h = mix64(GOLDEN_GAMMA ^ clique_ascending.len() as u64);
    for &v in clique_ascending {
        h = mix64(h ^ (v as u64 + 1));
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SinkMode {
    Count,
    Digest,
    List,
}

#[derive(Debug, Clone)]
pub struct CliqueSink {
    mode: SinkMode,
    count: u64,
    digest: u64,
    cliques: Vec<Vec<u32>>,
    scratch: Vec<u32>,
}

impl CliqueSink {
    pub fn new(mode: SinkMode) -> Self {
        CliqueSink {
            mode,
            count: 0,
            digest: 0,
            cliques: Vec::new(),
            scratch: Vec::new(),
        }
    }

    pub fn counting() -> Self {
        Self::new(SinkMode::Count)
    }

    pub fn listing() -> Self {
        Self::new(SinkMode::List)
    }

    /// Receives one maximal clique; `clique` need not be sorted.
    pub fn emit(&mut self, clique: &[u32]) {
        self.scratch.clear();
        self.scratch.extend_from_slice(clique);
        self.scratch.sort_unstable();
        debug_assert!(self.scratch.windows(2).all(|w| w[0] < w[1]));
        self.count += 1;
        self.digest = self.digest.wrapping_add(clique_hash(&self.scratch));
        if self.mode == SinkMode::List {
            self.cliques.push(self.scratch.clone());
        }
    }

    pub fn mode(&self) -> SinkMode {
        self.mode
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn digest(&self) -> u64 {
        self.digest
    }

    /// Stored cliques; empty unless the sink is in list mode.
    pub fn cliques(&self) -> &[Vec<u32>] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Vec<u32>> {
        self.cliques
    }
}

/// Per-run instrumentation reported by every engine.
///
/// `et_eligible[t-1]` counts visited branches that qualified for t-plex
/// early termination (cumulatively: a 1-plex branch is eligible at t = 1,
/// 2 and 3), independent of whether the run's threshold let it fire.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineCounters {
    pub recursive_calls: u64,
    pub et_eligible: [u64; 3],
    pub et_fired: u64,
}

impl EngineCounters {
    /// Branches eligible at the loosest threshold tracked.
    pub fn eligible_at(&self, t: usize) -> u64 {
        assert!((1..=3).contains(&t));
        self.et_eligible[t - 1]
    }
}
