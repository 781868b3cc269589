//! Deterministic Erdős–Rényi and Barabási–Albert graph generators.
//!
//! Both models are parameterized by the vertex count `n` and the edge
//! density `rho = m/n`, matching the synthetic-experiment setup. The
//! pseudo-random stream is SplitMix64 (see [`crate::mix`]) so a `GenSpec`
//! reproduces the same graph on every platform.

use std::collections::HashSet;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::mix::SplitMix64;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("ER needs m = round(n*rho) <= n(n-1)/2, got m = {m} for n = {n}")]
    TooManyEdges { n: usize, m: usize },
    #[error("BA needs n > k = round(rho) >= 1, got n = {n}, k = {k}")]
    BadAttachment { n: usize, k: usize },
    #[error("generator spec {0:?} is malformed; expected e.g. er:n=1000,rho=5,seed=3")]
    BadSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenModel {
    Er,
    Ba,
}

/// Parameters of one synthetic graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub model: GenModel,
    pub n: usize,
    pub rho: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn er(n: usize, rho: f64, seed: u64) -> Self {
        GenSpec {
            model: GenModel::Er,
            n,
            rho,
            seed,
        }
    }

    pub fn ba(n: usize, rho: f64, seed: u64) -> Self {
        GenSpec {
            model: GenModel::Ba,
            n,
            rho,
            seed,
        }
    }

    pub fn generate(&self) -> Result<Graph, GenError> {
        match self.model {
            GenModel::Er => gen_er(self),
            GenModel::Ba => gen_ba(self),
        }
    }

    /// Short label used in reports, e.g. `er:n=1000,rho=5,seed=3`.
    pub fn label(&self) -> String {
        let model = match self.model {
            GenModel::Er => "er",
            GenModel::Ba => "ba",
        };
        format!("{model}:n={},rho={},seed={}", self.n, self.rho, self.seed)
    }
}

impl FromStr for GenSpec {
    type Err = GenError;

    /// Parses `er:n=1000,rho=5,seed=3` (seed optional, default 0).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::BadSpec(s.to_string());
        let (model_str, rest) = s.split_once(':').ok_or_else(bad)?;
        let model = match model_str.trim().to_ascii_lowercase().as_str() {
            "er" => GenModel::Er,
            "ba" => GenModel::Ba,
            _ => return Err(bad()),
        };
        let mut n = None;
        let mut rho = None;
        let mut seed = 0u64;
        for part in rest.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "n" => n = Some(value.trim().parse().map_err(|_| bad())?),
                "rho" => rho = Some(value.trim().parse().map_err(|_| bad())?),
                "seed" => seed = value.trim().parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            }
        }
        Ok(GenSpec {
            model,
            n: n.ok_or_else(bad)?,
            rho: rho.ok_or_else(bad)?,
            seed,
        })
    }
}

/// ER model: exactly `m = round(n*rho)` distinct edges drawn uniformly
/// without replacement.
pub fn gen_er(spec: &GenSpec) -> Result<Graph, GenError> {
    let n = spec.n;
    let m = (spec.n as f64 * spec.rho).round() as usize;
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max_edges {
        return Err(GenError::TooManyEdges { n, m });
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut edges: HashSet<(u32, u32)> = HashSet::with_capacity(m * 2);
    // dense requests enumerate the complement instead of rejection
    // sampling near saturation
    if m * 2 > max_edges && max_edges > 0 {
        let mut all: Vec<(u32, u32)> = Vec::with_capacity(max_edges);
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                all.push((u, v));
            }
        }
        // partial Fisher-Yates: the first m entries are the sample
        for i in 0..m {
            let j = i + rng.next_below((max_edges - i) as u64) as usize;
            all.swap(i, j);
        }
        edges.extend(all.into_iter().take(m));
    } else {
        while edges.len() < m {
            let u = rng.next_below(n as u64) as u32;
            let v = rng.next_below(n as u64) as u32;
            if u == v {
                continue;
            }
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// BA model: a (k+1)-clique seed, then each arriving vertex attaches to
/// `k = round(rho)` distinct existing vertices chosen proportionally to
/// their current degree; duplicate targets are resampled.
pub fn gen_ba(spec: &GenSpec) -> Result<Graph, GenError> {
    let n = spec.n;
    let k = spec.rho.round() as usize;
    if k < 1 || n <= k {
        return Err(GenError::BadAttachment { n, k });
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(k * (k + 1) / 2 + (n - k - 1) * k);
    // endpoint pool: each edge contributes both endpoints, so sampling a
    // uniform pool slot is degree-proportional sampling
    let mut pool: Vec<u32> = Vec::with_capacity(2 * (k * (k + 1) / 2 + (n - k - 1) * k));
    for u in 0..=(k as u32) {
        for v in (u + 1)..=(k as u32) {
            edges.push((u, v));
            pool.push(u);
            pool.push(v);
        }
    }
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    for v in (k as u32 + 1)..(n as u32) {
        chosen.clear();
        while chosen.len() < k {
            let target = pool[rng.next_below(pool.len() as u64) as usize];
            if !chosen.contains(&target) {
                chosen.push(target);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            pool.push(t);
            pool.push(v);
        }
    }
    Ok(Graph::from_edges(n, edges))
}
