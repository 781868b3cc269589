//! VBBMC: Bron–Kerbosch with Tomita pivoting and a degeneracy-ordered
//! initial branch.
//!
//! This is the baseline engine and the recursion core reused below the
//! edge-oriented initial branch of the hybrid engine. A branch is the
//! triplet (S, C, X): partial clique, candidates, exclusion. The candidate
//! adjacency here is plain graph adjacency restricted to C, so the
//! candidate edge set is always ghost-free.

use crate::graph::{difference_sorted, intersect_sorted, Graph};
use crate::order::degeneracy_order;
use crate::plex::{detect_plex, run_early_termination};
use crate::sink::{CliqueSink, EngineCounters};

/// Result of one pivot scan over C ∪ X.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotScan {
    /// Vertex of C ∪ X with the most candidate neighbors; smallest id on
    /// ties.
    pub pivot: u32,
    /// Its candidate-neighbor count.
    pub pivot_degree: usize,
    /// Minimum candidate degree over C, the early-termination side
    /// product. 0 when C is empty.
    pub min_candidate_degree: usize,
    /// Number of candidate edges (edges of the candidate adjacency with
    /// both endpoints in C).
    pub candidate_edges: usize,
}

/// Scans C ∪ X for the pivot under plain graph adjacency.
///
/// Panics if both sets are empty.
pub fn select_pivot(g: &Graph, c: &[u32], x: &[u32]) -> PivotScan {
    assert!(
        !c.is_empty() || !x.is_empty(),
        "select_pivot requires a nonempty branch"
    );
    let mut pivot = u32::MAX;
    let mut pivot_degree = usize::MAX;
    let mut min_candidate_degree = usize::MAX;
    let mut degree_sum = 0usize;
    for &v in c.iter().chain(x.iter()) {
        let deg = crate::graph::count_intersection(g.neighbors(v), c);
        if pivot_degree == usize::MAX || deg > pivot_degree || (deg == pivot_degree && v < pivot) {
            pivot = v;
            pivot_degree = deg;
        }
        if c.binary_search(&v).is_ok() {
            min_candidate_degree = min_candidate_degree.min(deg);
            degree_sum += deg;
        }
    }
    PivotScan {
        pivot,
        pivot_degree,
        min_candidate_degree: if c.is_empty() { 0 } else { min_candidate_degree },
        candidate_edges: degree_sum / 2,
    }
}

/// Enumerates every maximal clique of `g` into `sink`.
///
/// `et_threshold` 0 disables early termination; 1..=3 terminates branches
/// whose candidate graph is a t-plex up to that t.
pub fn vbbmc_enumerate(g: &Graph, sink: &mut CliqueSink, et_threshold: u8) -> EngineCounters {
    debug_assert!(et_threshold <= 3);
    let order = degeneracy_order(g);
    let mut counters = EngineCounters::default();
    let mut s = Vec::new();
    for &v in &order.sequence {
        let (c, x) = initial_branch(g, &order.position, v);
        s.push(v);
        recurse(g, &mut s, c, x, et_threshold, sink, &mut counters);
        s.pop();
    }
    counters
}

/// Splits the neighbors of `v` into candidates (later in the order) and
/// exclusion (earlier).
pub(crate) fn initial_branch(g: &Graph, position: &[u32], v: u32) -> (Vec<u32>, Vec<u32>) {
    let pv = position[v as usize];
    let mut c = Vec::new();
    let mut x = Vec::new();
    for &w in g.neighbors(v) {
        if position[w as usize] > pv {
            c.push(w);
        } else {
            x.push(w);
        }
    }
    (c, x)
}

/// Runs the pivot recursion on an explicit branch. Exposed for tests and
/// for driving captured branches directly.
pub fn vbbmc_recurse(
    g: &Graph,
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
        &mut s,
        c.to_vec(),
        x.to_vec(),
        et_threshold,
        sink,
        &mut counters,
    );
    counters
}

fn recurse(
    g: &Graph,
    s: &mut Vec<u32>,
    mut c: Vec<u32>,
    mut x: Vec<u32>,
    et_threshold: u8,
    sink: &mut CliqueSink,
    counters: &mut EngineCounters,
) {
    counters.recursive_calls += 1;
    debug_assert!(branch_state_consistent(g, s, &c, &x));
    if c.is_empty() {
        if x.is_empty() {
            sink.emit(s);
        }
        return;
    }
    let scan = select_pivot(g, &c, &x);
    if et_threshold >= 1 && x.is_empty() {
        // candidate adjacency is graph adjacency here, so the edge set is
        // ghost-free by construction
        if let Some(t) = detect_plex(
            c.len(),
            scan.min_candidate_degree,
            true,
            scan.candidate_edges,
            scan.candidate_edges,
        ) {
            for k in t..=3 {
                counters.et_eligible[k as usize - 1] += 1;
            }
            if t <= et_threshold {
                counters.et_fired += 1;
                run_early_termination(s, &c, t, |a, b| g.has_edge(a, b), sink);
                return;
            }
        }
    }
    let branch_verts = difference_sorted(&c, g.neighbors(scan.pivot));
    for v in branch_verts {
        s.push(v);
        let sub_c = intersect_sorted(&c, g.neighbors(v));
        let sub_x = intersect_sorted(&x, g.neighbors(v));
        recurse(g, s, sub_c, sub_x, et_threshold, sink, counters);
        s.pop();
        let pos = c.binary_search(&v).expect("branch vertex left C");
        c.remove(pos);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
}

#[cfg(debug_assertions)]
fn branch_state_consistent(g: &Graph, s: &[u32], c: &[u32], x: &[u32]) -> bool {
    // full recomputation per entry; affordable only at test scale
    if s.is_empty() || g.vertex_count() > 200 {
        return true;
    }
    // C ∪ X must equal the common neighborhood of S
    let mut expected: Option<Vec<u32>> = None;
    for &v in s {
        expected = Some(match expected {
            None => g.neighbors(v).to_vec(),
            Some(prev) => intersect_sorted(&prev, g.neighbors(v)),
        });
    }
    let expected = expected.unwrap();
    let actual = crate::graph::union_sorted(c, x);
    expected == actual && crate::graph::count_intersection(c, x) == 0
}

#[cfg(not(debug_assertions))]
fn branch_state_consistent(_: &Graph, _: &[u32], _: &[u32], _: &[u32]) -> bool {
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::graph::Graph;
    use crate::mix::SplitMix64;
    use crate::oracle::exhaustive_mce;

    fn run(g: &Graph, et: u8) -> Vec<Vec<u32>> {
        let mut sink = CliqueSink::listing();
        vbbmc_enumerate(g, &mut sink, et);
        let mut cliques = sink.into_cliques();
        cliques.sort();
        cliques
    }

    #[test]
    fn enumerates_tiny_graphs() {
        assert_eq!(run(&construct::complete(3), 0), vec![vec![0, 1, 2]]);
        assert_eq!(run(&construct::path(3), 0), vec![vec![0, 1], vec![1, 2]]);
        let g = Graph::from_edges(3, [(1, 2)]);
        assert_eq!(run(&g, 0), vec![vec![0], vec![1, 2]]);
        assert_eq!(run(&Graph::from_edges(0, []), 3), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn moon_moser_9_has_27_cliques() {
        for et in 0..=3 {
            let got = run(&construct::moon_moser(3), et);
            assert_eq!(got.len(), 27, "et={et}");
            assert_eq!(got, exhaustive_mce(&construct::moon_moser(3)).unwrap());
        }
    }

    #[test]
    fn select_pivot_examples() {
        let k3 = construct::complete(3);
        let scan = select_pivot(&k3, &[0, 1, 2], &[]);
        assert_eq!((scan.pivot, scan.pivot_degree), (0, 2));
        assert_eq!(scan.min_candidate_degree, 2);
        assert_eq!(scan.candidate_edges, 3);

        let single = Graph::from_edges(1, []);
        let scan = select_pivot(&single, &[0], &[]);
        assert_eq!((scan.pivot, scan.pivot_degree), (0, 0));

        // star: center 0 in X is adjacent to both candidates
        let star = construct::star(2);
        let scan = select_pivot(&star, &[1, 2], &[0]);
        assert_eq!((scan.pivot, scan.pivot_degree), (0, 2));
        assert_eq!(scan.min_candidate_degree, 0);
    }

    #[test]
    #[should_panic(expected = "nonempty")]
    fn select_pivot_rejects_empty_branch() {
        select_pivot(&construct::complete(3), &[], &[]);
    }

    #[test]
    fn recurse_terminal_cases() {
        let lone = Graph::from_edges(1, []);
        let mut sink = CliqueSink::listing();
        vbbmc_recurse(&lone, &[0], &[], &[], 0, &mut sink);
        assert_eq!(sink.cliques(), &[vec![0]]);

        let g = Graph::from_edges(2, [(0, 1)]);
        let mut sink = CliqueSink::listing();
        vbbmc_recurse(&g, &[0], &[], &[1], 0, &mut sink);
        assert_eq!(sink.count(), 0);
    }

    #[test]
    fn pivot_prunes_k4_to_a_single_chain() {
        let g = construct::complete(4);
        let mut sink = CliqueSink::listing();
        let counters = vbbmc_recurse(&g, &[], &[0, 1, 2, 3], &[], 0, &mut sink);
        assert_eq!(sink.cliques(), &[vec![0, 1, 2, 3]]);
        // one call per level: pivot leaves a single sub-branch each time
        assert_eq!(counters.recursive_calls, 5);
    }

    #[test]
    fn initial_branches_fit_in_degeneracy_bound() {
        let g = construct::moon_moser(4);
        let order = degeneracy_order(&g);
        for v in 0..g.vertex_count() as u32 {
            let (c, _) = initial_branch(&g, &order.position, v);
            assert!(c.len() <= order.degeneracy as usize);
        }
    }

    /// Pivotless Bron–Kerbosch over the same branch layout, the reference
    /// for pivot soundness.
    fn pivotless(g: &Graph, s: &mut Vec<u32>, mut c: Vec<u32>, mut x: Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if c.is_empty() {
            if x.is_empty() {
                let mut clique = s.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        for v in c.clone() {
            s.push(v);
            pivotless(
                g,
                s,
                intersect_sorted(&c, g.neighbors(v)),
                intersect_sorted(&x, g.neighbors(v)),
                out,
            );
            s.pop();
            c.retain(|&w| w != v);
            let pos = x.binary_search(&v).unwrap_err();
            x.insert(pos, v);
        }
    }

    #[test]
    fn pivoting_loses_nothing_against_pivotless_reference() {
        let mut rng = SplitMix64::new(77);
        for trial in 0..120 {
            let n = 4 + (rng.next_below(9) as usize); // 4..=12
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in (u + 1)..n as u32 {
                    if rng.next_below(100) < 50 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges);
            let mut reference = Vec::new();
            pivotless(
                &g,
                &mut Vec::new(),
                (0..n as u32).collect(),
                Vec::new(),
                &mut reference,
            );
            reference.sort();
            for et in 0..=3 {
                assert_eq!(run(&g, et), reference, "trial {trial} et {et}");
            }
        }
    }

    #[test]
    fn emissions_are_exactly_once() {
        let g = construct::moon_moser(3);
        for et in 0..=3 {
            let cliques = run(&g, et);
            let mut dedup = cliques.clone();
            dedup.dedup();
            assert_eq!(cliques.len(), dedup.len());
        }
    }

    #[test]
    fn eligibility_counters_are_monotone_in_t() {
        let g = construct::moon_moser(4);
        let mut sink = CliqueSink::counting();
        let counters = vbbmc_enumerate(&g, &mut sink, 3);
        assert!(counters.eligible_at(3) >= counters.eligible_at(2));
        assert!(counters.eligible_at(2) >= counters.eligible_at(1));
        assert!(counters.et_fired <= counters.eligible_at(3));
        assert!(counters.eligible_at(3) <= counters.recursive_calls);
    }
}
