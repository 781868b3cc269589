//! Degeneracy ordering, truss-based edge ordering, triangle counting, and
//! graph statistics.
//!
//! Both orderings come from min-first peeling with a bucket queue and are
//! deterministic: ties break on the smallest vertex id (degeneracy) or the
//! smallest edge id (truss). Edge ranks are assigned so that rank 0 is the
//! first edge removed; branching in ascending rank then keeps every
//! candidate graph inside the rank-suffix of surviving edges, which is
//! what bounds its size by tau.

use std::collections::BTreeSet;

use crate::graph::{count_intersection, Graph};

/// Min-degree peeling order of the vertices.
#[derive(Debug, Clone)]
pub struct DegeneracyOrder {
    /// `position[v]` = step at which `v` was removed.
    pub position: Vec<u32>,
    /// Vertices in removal order; inverse of `position`.
    pub sequence: Vec<u32>,
    /// Maximum residual degree seen at any removal.
    pub degeneracy: u32,
}

impl DegeneracyOrder {
    /// Neighbors of `v` removed after `v` ("later" neighbors).
    pub fn later_neighbors(&self, g: &Graph, v: u32) -> Vec<u32> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.position[w as usize] > self.position[v as usize])
            .collect()
    }
}

/// Min-support peeling order of the edges.
#[derive(Debug, Clone)]
pub struct TrussEdgeOrder {
    /// `rank[e]` = step at which edge id `e` was removed; a permutation of
    /// `0..m`.
    pub rank: Vec<u32>,
    /// Edge ids in removal order; inverse of `rank`.
    pub sequence: Vec<u32>,
    /// Maximum residual support seen at any removal.
    pub tau: u32,
}

/// Statistics block for one graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub delta: u32,
    pub tau: u32,
    /// Edge density m/n.
    pub rho: f64,
    /// Whether delta >= max(3, tau + 3 ln(rho) / ln 3).
    pub condition: bool,
}

/// Computes the degeneracy ordering by bucketed min-degree peeling.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); max_deg + 1];
    for v in 0..n {
        buckets[degree[v]].insert(v as u32);
    }
    let mut removed = vec![false; n];
    let mut position = vec![0u32; n];
    let mut sequence = Vec::with_capacity(n);
    let mut degeneracy = 0u32;
    let mut cur = 0usize;
    for step in 0..n {
        while cur <= max_deg && buckets[cur].is_empty() {
            cur += 1;
        }
        let v = *buckets[cur].iter().next().expect("peeling ran dry");
        buckets[cur].remove(&v);
        removed[v as usize] = true;
        position[v as usize] = step as u32;
        sequence.push(v);
        degeneracy = degeneracy.max(degree[v as usize] as u32);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !removed[w] {
                let d = degree[w];
                buckets[d].remove(&(w as u32));
                buckets[d - 1].insert(w as u32);
                degree[w] = d - 1;
            }
        }
        cur = cur.saturating_sub(1);
    }
    DegeneracyOrder {
        position,
        sequence,
        degeneracy,
    }
}

/// Computes the truss-based edge ordering by bucketed min-support peeling.
///
/// The support of an edge is the number of common neighbors of its
/// endpoints within the still-alive edges (a triangle counts only while
/// both of its other edges are alive).
pub fn truss_edge_order(g: &Graph) -> TrussEdgeOrder {
    let m = g.edge_count();
    let mut support = vec![0usize; m];
    for e in 0..m as u32 {
        let (u, v) = g.endpoints(e);
        support[e as usize] = count_intersection(g.neighbors(u), g.neighbors(v));
    }
    let max_sup = support.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); max_sup + 1];
    for e in 0..m {
        buckets[support[e]].insert(e as u32);
    }
    let mut alive = vec![true; m];
    let mut rank = vec![0u32; m];
    let mut sequence = Vec::with_capacity(m);
    let mut tau = 0u32;
    let mut cur = 0usize;
    for step in 0..m {
        while cur <= max_sup && buckets[cur].is_empty() {
            cur += 1;
        }
        let e = *buckets[cur].iter().next().expect("peeling ran dry");
        buckets[cur].remove(&e);
        alive[e as usize] = false;
        rank[e as usize] = step as u32;
        sequence.push(e);
        tau = tau.max(support[e as usize] as u32);
        // every alive triangle through e loses its witness: decrement the
        // two partner edges
        let (u, v) = g.endpoints(e);
        let (au, eu) = (g.neighbors(u), g.neighbor_edge_ids(u));
        let (av, ev) = (g.neighbors(v), g.neighbor_edge_ids(v));
        let (mut i, mut j) = (0, 0);
        while i < au.len() && j < av.len() {
            match au[i].cmp(&av[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let (e1, e2) = (eu[i], ev[j]);
                    if alive[e1 as usize] && alive[e2 as usize] {
                        for partner in [e1, e2] {
                            let s = support[partner as usize];
                            buckets[s].remove(&partner);
                            buckets[s - 1].insert(partner);
                            support[partner as usize] = s - 1;
                        }
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        if cur > 0 {
            cur -= 1;
        }
    }
    TrussEdgeOrder {
        rank,
        sequence,
        tau,
    }
}

/// Exact triangle count via degeneracy-oriented neighbor intersections.
pub fn triangle_count(g: &Graph) -> u64 {
    let order = degeneracy_order(g);
    let n = g.vertex_count();
    let mut later: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in 0..n as u32 {
        let mut lv = order.later_neighbors(g, v);
        lv.sort_unstable();
        later.push(lv);
    }
    let mut triangles = 0u64;
    for v in 0..n as u32 {
        let lv = &later[v as usize];
        for &w in lv {
            triangles += count_intersection(lv, &later[w as usize]) as u64;
        }
    }
    triangles
}

/// Evaluates delta >= max(3, tau + 3 ln(rho) / ln 3).
///
/// The comparison against 3 is exact integer arithmetic; only the log term
/// is floating point.
pub fn condition_holds(delta: u32, tau: u32, rho: f64) -> bool {
    if delta < 3 {
        return false;
    }
    delta as f64 >= tau as f64 + 3.0 * rho.ln() / 3.0_f64.ln()
}

/// Computes the full statistics block for `g`.
pub fn compute_stats(g: &Graph) -> GraphStats {
    let n = g.vertex_count();
    let m = g.edge_count();
    let delta = degeneracy_order(g).degeneracy;
    let tau = truss_edge_order(g).tau;
    let rho = if n > 0 { m as f64 / n as f64 } else { 0.0 };
    let condition = n > 0 && condition_holds(delta, tau, rho);
    GraphStats {
        n,
        m,
        delta,
        tau,
        rho,
        condition,
    }
}
