//! HBBMC: truss-ordered edge branching at the initial branch, pivot-based
//! vertex branching below it.
//!
//! Each initial branch fixes an edge e and enumerates the maximal cliques
//! whose lowest-ranked edge is e. Below that, adjacency between two
//! candidates only counts when their edge ranks after e; candidates that
//! are graph-adjacent to the branching vertex but fail the rank filter
//! migrate to the exclusion side, which keeps C ∪ X equal to the common
//! neighborhood of S and makes the maximality test exact. Without the
//! migration, a clique whose earliest edge precedes the branch edge would
//! be emitted from more than one initial branch.

use crate::graph::Graph;
use crate::order::{truss_edge_order, TrussEdgeOrder};
use crate::plex::{detect_plex, run_early_termination};
use crate::sink::{CliqueSink, EngineCounters};

/// Per-initial-edge candidate sizes plus the total call count, for
/// inspecting the branch-size bound.
#[derive(Debug, Clone)]
pub struct BranchProfile {
    /// `level1_sizes[r]` = |Vplus(e)| of the edge with truss rank `r`.
    pub level1_sizes: Vec<u32>,
    pub recursive_calls: u64,
}

impl BranchProfile {
    pub fn max_level1_size(&self) -> u32 {
        self.level1_sizes.iter().copied().max().unwrap_or(0)
    }
}

/// Enumerates every maximal clique of `g` into `sink`.
pub fn hbbmc_enumerate(g: &Graph, sink: &mut CliqueSink, et_threshold: u8) -> EngineCounters {
    enumerate_impl(g, sink, et_threshold, true, None)
}

/// Test-only switch: identical traversal with the candidate-edge rank
/// filter disabled, to demonstrate that the filter is what prevents
/// duplicate emissions.
#[cfg(test)]
pub(crate) fn hbbmc_enumerate_unfiltered(
    g: &Graph,
    sink: &mut CliqueSink,
    et_threshold: u8,
) -> EngineCounters {
    enumerate_impl(g, sink, et_threshold, false, None)
}

fn enumerate_impl(
    g: &Graph,
    sink: &mut CliqueSink,
    et_threshold: u8,
    filtered: bool,
    mut profile_sizes: Option<&mut Vec<u32>>,
) -> EngineCounters {
    debug_assert!(et_threshold <= 3);
    let ord = truss_edge_order(g);
    let mut counters = EngineCounters::default();
    let mut s = Vec::with_capacity(8);
    for &e in &ord.sequence {
        let (u, v) = g.endpoints(e);
        let rank_e = ord.rank[e as usize];
        let (c, x) = level_one_split(g, &ord, e);
        if let Some(sizes) = profile_sizes.as_deref_mut() {
            sizes[rank_e as usize] = c.len() as u32;
        }
        let threshold = if filtered { rank_e as i64 } else { -1 };
        s.clear();
        s.push(u);
        s.push(v);
        recurse(
            g,
            &ord.rank,
            threshold,
            &mut s,
            c,
            x,
            et_threshold,
            sink,
            &mut counters,
        );
    }
    // zero-degree branches of the initial branch: isolated vertices are
    // maximal 1-cliques
    for v in 0..g.vertex_count() as u32 {
        if g.degree(v) == 0 {
            sink.emit(&[v]);
        }
    }
    counters
}

/// Splits the common neighborhood of edge `e` into candidates (both
/// incident edges rank after `e`) and exclusion (the rest).
fn level_one_split(g: &Graph, ord: &TrussEdgeOrder, e: u32) -> (Vec<u32>, Vec<u32>) {
    let (u, v) = g.endpoints(e);
    let re = ord.rank[e as usize];
    let (au, eu) = (g.neighbors(u), g.neighbor_edge_ids(u));
    let (av, ev) = (g.neighbors(v), g.neighbor_edge_ids(v));
    let mut c = Vec::new();
    let mut x = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < au.len() && j < av.len() {
        match au[i].cmp(&av[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let w = au[i];
                if ord.rank[eu[i] as usize] > re && ord.rank[ev[j] as usize] > re {
                    c.push(w);
                } else {
                    x.push(w);
                }
                i += 1;
                j += 1;
            }
        }
    }
    (c, x)
}

/// Runs the pivot recursion below an initial edge branch.
///
/// `threshold` is the truss rank of the initial edge: two candidates are
/// adjacent for branching purposes iff their edge ranks after it.
pub fn hybrid_recurse(
    g: &Graph,
    ord: &TrussEdgeOrder,
    threshold: u32,
    s: &[u32],
    c: &[u32],
    x: &[u32],
    et_threshold: u8,
    sink: &mut CliqueSink,
) -> EngineCounters {
    let mut counters = EngineCounters::default();
    let mut s = s.to_vec();
    recurse(
        g,
        &ord.rank,
        threshold as i64,
        &mut s,
        c.to_vec(),
        x.to_vec(),
        et_threshold,
        sink,
        &mut counters,
    );
    counters
}

/// Walks `adj(v) ∩ set`, splitting by the rank filter. Returns
/// (surviving candidates, graph-adjacent vertices failing the filter).
fn split_neighbors(
    g: &Graph,
    rank: &[u32],
    threshold: i64,
    set: &[u32],
    v: u32,
) -> (Vec<u32>, Vec<u32>) {
    let (adj, eids) = (g.neighbors(v), g.neighbor_edge_ids(v));
    let mut keep = Vec::new();
    let mut fail = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < set.len() && j < adj.len() {
        match set[i].cmp(&adj[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if rank[eids[j] as usize] as i64 > threshold {
                    keep.push(set[i]);
                } else {
                    fail.push(set[i]);
                }
                i += 1;
                j += 1;
            }
        }
    }
    (keep, fail)
}

/// Counts `adj(v) ∩ set` under the filter and raw. Returns
/// (filtered count, raw count).
fn count_neighbors(g: &Graph, rank: &[u32], threshold: i64, set: &[u32], v: u32) -> (usize, usize) {
    let (adj, eids) = (g.neighbors(v), g.neighbor_edge_ids(v));
    let (mut i, mut j) = (0, 0);
    let (mut filt, mut raw) = (0usize, 0usize);
    while i < set.len() && j < adj.len() {
        match set[i].cmp(&adj[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                raw += 1;
                if rank[eids[j] as usize] as i64 > threshold {
                    filt += 1;
                }
                i += 1;
                j += 1;
            }
        }
    }
    (filt, raw)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    g: &Graph,
    rank: &[u32],
    threshold: i64,
    s: &mut Vec<u32>,
    mut c: Vec<u32>,
    mut x: Vec<u32>,
    et_threshold: u8,
    sink: &mut CliqueSink,
    counters: &mut EngineCounters,
) {
    counters.recursive_calls += 1;
    if c.is_empty() {
        if x.is_empty() {
            sink.emit(s);
        }
        return;
    }
    // pivot scan; candidate degrees use filtered adjacency for C members
    // and plain graph adjacency for X members
    let mut pivot = u32::MAX;
    let mut pivot_degree = usize::MAX;
    let mut pivot_in_c = false;
    let mut min_degree = usize::MAX;
    let mut filt_sum = 0usize;
    let mut raw_sum = 0usize;
    for &v in &c {
        let (filt, raw) = count_neighbors(g, rank, threshold, &c, v);
        filt_sum += filt;
        raw_sum += raw;
        min_degree = min_degree.min(filt);
        if pivot_degree == usize::MAX || filt > pivot_degree || (filt == pivot_degree && v < pivot)
        {
            pivot = v;
            pivot_degree = filt;
            pivot_in_c = true;
        }
    }
    for &v in &x {
        let deg = crate::graph::count_intersection(g.neighbors(v), &c);
        if pivot_degree == usize::MAX || deg > pivot_degree || (deg == pivot_degree && v < pivot) {
            pivot = v;
            pivot_degree = deg;
            pivot_in_c = false;
        }
    }
    if et_threshold >= 1 && x.is_empty() {
        if let Some(t) = detect_plex(c.len(), min_degree, true, filt_sum / 2, raw_sum / 2) {
            for k in t..=3 {
                counters.et_eligible[k as usize - 1] += 1;
            }
            if t <= et_threshold {
                counters.et_fired += 1;
                run_early_termination(
                    s,
                    &c,
                    t,
                    |a, b| {
                        g.edge_id(a, b)
                            .is_some_and(|id| rank[id as usize] as i64 > threshold)
                    },
                    sink,
                );
                return;
            }
        }
    }
    let branch_verts: Vec<u32> = if pivot_in_c {
        let (keep, _) = split_neighbors(g, rank, threshold, &c, pivot);
        crate::graph::difference_sorted(&c, &keep)
    } else {
        crate::graph::difference_sorted(&c, g.neighbors(pivot))
    };
    for v in branch_verts {
        s.push(v);
        let (sub_c, migrants) = split_neighbors(g, rank, threshold, &c, v);
        let kept_x = crate::graph::intersect_sorted(&x, g.neighbors(v));
        let sub_x = crate::graph::union_sorted(&kept_x, &migrants);
        recurse(
            g, rank, threshold, s, sub_c, sub_x, et_threshold, sink, counters,
        );
        s.pop();
        let pos = c.binary_search(&v).expect("branch vertex left C");
        c.remove(pos);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
}

/// Runs the hybrid engine in counting mode and reports the level-1
/// candidate sizes alongside the call count.
pub fn branch_size_profile(g: &Graph) -> BranchProfile {
    let mut sizes = vec![0u32; g.edge_count()];
    let mut sink = CliqueSink::counting();
    let counters = enumerate_impl(g, &mut sink, 3, true, Some(&mut sizes));
    BranchProfile {
        level1_sizes: sizes,
        recursive_calls: counters.recursive_calls,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::graph::Graph;
    use crate::mix::SplitMix64;
    use crate::oracle::exhaustive_mce;
    use crate::vertex::vbbmc_enumerate;

    fn run(g: &Graph, et: u8) -> Vec<Vec<u32>> {
        let mut sink = CliqueSink::listing();
        hbbmc_enumerate(g, &mut sink, et);
        let mut cliques = sink.into_cliques();
        cliques.sort();
        cliques
    }

    /// K4 core {0,1,2,3} with a private triangle gadget glued onto each of
    /// the four cross pairs. Truss peeling removes (0,1) first and (2,3)
    /// second while every cross edge survives, so the branch of (2,3) sees
    /// candidates {0,1} whose connecting edge ranks earlier: exactly the
    /// situation the rank filter exists for.
    fn rank_inversion_witness() -> Graph {
        let mut edges = Vec::new();
        for a in 0..4u32 {
            for b in (a + 1)..4 {
                edges.push((a, b));
            }
        }
        for (k, (a, b)) in [(0u32, 2u32), (0, 3), (1, 2), (1, 3)].into_iter().enumerate() {
            let o = 4 + 3 * k as u32;
            let trio = [o, o + 1, o + 2];
            for i in 0..3 {
                for j in (i + 1)..3 {
                    edges.push((trio[i], trio[j]));
                }
                edges.push((a, trio[i]));
                edges.push((b, trio[i]));
            }
        }
        Graph::from_edges(16, edges)
    }

    #[test]
    fn enumerates_tiny_graphs() {
        assert_eq!(run(&construct::complete(3), 0), vec![vec![0, 1, 2]]);
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(run(&two_edges, 0), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            run(&Graph::from_edges(3, [(1, 2)]), 3),
            vec![vec![0], vec![1, 2]]
        );
    }

    #[test]
    fn moon_moser_9_matches_vbbmc() {
        let g = construct::moon_moser(3);
        let expected = {
            let mut sink = CliqueSink::listing();
            vbbmc_enumerate(&g, &mut sink, 0);
            let mut c = sink.into_cliques();
            c.sort();
            c
        };
        assert_eq!(expected.len(), 27);
        for et in 0..=3 {
            assert_eq!(run(&g, et), expected, "et {et}");
        }
    }

    #[test]
    fn matches_oracle_on_random_graphs() {
        let mut rng = SplitMix64::new(0x4b1d);
        for trial in 0..150 {
            let n = 4 + (trial % 11) as usize;
            let density = [20, 50, 80][trial % 3];
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in (u + 1)..n as u32 {
                    if rng.next_below(100) < density {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges);
            let expected = exhaustive_mce(&g).unwrap();
            for et in 0..=3 {
                assert_eq!(run(&g, et), expected, "trial {trial} et {et}");
            }
        }
    }

    #[test]
    fn vacuous_filter_reduces_to_vertex_recursion() {
        // triangle: every candidate edge survives the filter, so the
        // branch below (0,1) behaves like plain pivot recursion
        let g = construct::complete(3);
        let ord = truss_edge_order(&g);
        let e = ord.sequence[0];
        assert_eq!(g.endpoints(e), (0, 1));
        let mut sink = CliqueSink::listing();
        hybrid_recurse(&g, &ord, ord.rank[e as usize], &[0, 1], &[2], &[], 0, &mut sink);
        assert_eq!(sink.cliques(), &[vec![0, 1, 2]]);

        let mut sink = CliqueSink::listing();
        hybrid_recurse(&g, &ord, 0, &[0, 1], &[], &[], 0, &mut sink);
        assert_eq!(sink.cliques(), &[vec![0, 1]]);
    }

    #[test]
    fn rank_filter_blocks_foreign_cliques() {
        let g = rank_inversion_witness();
        let ord = truss_edge_order(&g);
        let e = g.edge_id(2, 3).unwrap();
        // the witness construction relies on this peeling order
        assert_eq!(ord.rank[g.edge_id(0, 1).unwrap() as usize], 0);
        assert_eq!(ord.rank[e as usize], 1);
        let (c, x) = level_one_split(&g, &ord, e);
        assert_eq!(c, vec![0, 1]);
        assert!(x.is_empty());
        // the branch of (2,3) must emit nothing: {0,1,2,3} belongs to the
        // branch of (0,1), and {2,3,0}, {2,3,1} are not maximal
        let mut sink = CliqueSink::listing();
        hybrid_recurse(&g, &ord, ord.rank[e as usize], &[2, 3], &c, &x, 3, &mut sink);
        assert_eq!(sink.count(), 0);
        // the full run emits {0,1,2,3} exactly once
        let cliques = run(&g, 3);
        assert_eq!(cliques, exhaustive_mce(&g).unwrap());
        assert_eq!(
            cliques.iter().filter(|c| *c == &vec![0, 1, 2, 3]).count(),
            1
        );
    }

    #[test]
    fn disabling_the_filter_creates_duplicates() {
        let g = rank_inversion_witness();
        let mut sink = CliqueSink::listing();
        hbbmc_enumerate_unfiltered(&g, &mut sink, 0);
        let mut cliques = sink.into_cliques();
        cliques.sort();
        let dup_count = cliques.iter().filter(|c| *c == &vec![0, 1, 2, 3]).count();
        assert!(
            dup_count > 1,
            "unfiltered traversal should double-count the core clique, saw {dup_count}"
        );
    }

    #[test]
    fn branch_size_profile_respects_tau() {
        let k5 = construct::complete(5);
        let profile = branch_size_profile(&k5);
        let tau = truss_edge_order(&k5).tau;
        assert_eq!(tau, 3);
        assert!(profile.max_level1_size() <= tau);
        assert!(profile.recursive_calls >= k5.edge_count() as u64);

        let c5 = construct::cycle(5);
        let profile = branch_size_profile(&c5);
        assert_eq!(profile.max_level1_size(), 0);
        assert!(profile.level1_sizes.iter().all(|&s| s == 0));
    }

    #[test]
    fn exactly_once_on_clique_rich_graphs() {
        for et in [0, 3] {
            let cliques = run(&construct::moon_moser(4), et);
            assert_eq!(cliques.len(), 81);
            let mut dedup = cliques.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), cliques.len());
        }
    }

    #[test]
    fn eligibility_counters_are_monotone() {
        let mut sink = CliqueSink::counting();
        let counters = hbbmc_enumerate(&construct::moon_moser(4), &mut sink, 3);
        assert!(counters.eligible_at(3) >= counters.eligible_at(2));
        assert!(counters.eligible_at(2) >= counters.eligible_at(1));
        assert!(counters.et_fired <= counters.eligible_at(3));
    }
}
