//! EBBMC: edge-oriented branching with truss-based ordering.
//!
//! The initial branch expands the partial clique by a whole edge, visiting
//! edges in ascending truss rank; deeper branches do the same over the
//! surviving candidate edges. Cliques of odd size cannot be reached by
//! adding two vertices at a time, so every branch finishes with a
//! zero-degree sweep over candidate vertices that have no candidate edge
//! left.
//!
//! Per-edge auxiliary sets make the branching a sequence of sorted-set
//! intersections: for an edge e = (u, v), `vplus(e)` holds the common
//! neighbors w whose edges (u,w) and (v,w) both rank after e, `eplus(e)`
//! the edges among `vplus(e)` ranking after e, and `vminus`/`eminus` the
//! complementary exclusion-side sets.
//!
//! This engine is kept as a faithful reference of the edge-oriented
//! framework; the hybrid engine is the fast path.

use crate::graph::{difference_sorted, intersect_sorted, union_sorted, Graph};
use crate::order::{truss_edge_order, TrussEdgeOrder};
use crate::plex::{detect_plex, run_early_termination};
use crate::sink::{CliqueSink, EngineCounters};

/// Per-edge auxiliary sets for truss-ordered branching.
///
/// Vertex lists are ascending by id; edge lists hold edge ids sorted by
/// truss rank, the order in which the engine consumes them.
#[derive(Debug, Clone)]
pub struct EdgeAux {
    pub vplus: Vec<Vec<u32>>,
    pub eplus: Vec<Vec<u32>>,
    pub vminus: Vec<Vec<u32>>,
    pub eminus: Vec<Vec<u32>>,
}

/// Builds the four auxiliary sets for every edge of `g` under `ord`.
pub fn build_edge_aux(g: &Graph, ord: &TrussEdgeOrder) -> EdgeAux {
    let m = g.edge_count();
    let rank = &ord.rank;
    let mut aux = EdgeAux {
        vplus: vec![Vec::new(); m],
        eplus: vec![Vec::new(); m],
        vminus: vec![Vec::new(); m],
        eminus: vec![Vec::new(); m],
    };
    for e in 0..m as u32 {
        let re = rank[e as usize];
        let (u, v) = g.endpoints(e);
        let common = intersect_sorted(g.neighbors(u), g.neighbors(v));
        let mut vplus = Vec::new();
        let mut vminus = Vec::new();
        for &w in &common {
            let eu = g.edge_id(u, w).expect("triangle edge");
            let ev = g.edge_id(v, w).expect("triangle edge");
            if rank[eu as usize] > re && rank[ev as usize] > re {
                vplus.push(w);
            } else {
                vminus.push(w);
            }
        }
        let mut eplus = Vec::new();
        let mut eminus = Vec::new();
        for (i, &w) in common.iter().enumerate() {
            for &w2 in &common[i + 1..] {
                if let Some(id) = g.edge_id(w, w2) {
                    let in_plus = rank[id as usize] > re
                        && vplus.binary_search(&w).is_ok()
                        && vplus.binary_search(&w2).is_ok();
                    if in_plus {
                        eplus.push(id);
                    } else {
                        eminus.push(id);
                    }
                }
            }
        }
        eplus.sort_unstable_by_key(|&id| rank[id as usize]);
        eminus.sort_unstable_by_key(|&id| rank[id as usize]);
        aux.vplus[e as usize] = vplus;
        aux.vminus[e as usize] = vminus;
        aux.eplus[e as usize] = eplus;
        aux.eminus[e as usize] = eminus;
    }
    aux
}

/// Branch state of the edge-oriented recursion.
///
/// `c_edges`/`x_edges` hold edge ids sorted by truss rank.
#[derive(Debug, Clone, Default)]
pub struct EdgeBranch {
    pub s: Vec<u32>,
    pub c_vertices: Vec<u32>,
    pub c_edges: Vec<u32>,
    pub x_vertices: Vec<u32>,
    pub x_edges: Vec<u32>,
}

/// Enumerates every maximal clique of `g` into `sink`.
pub fn ebbmc_enumerate(g: &Graph, sink: &mut CliqueSink, et_threshold: u8) -> EngineCounters {
    debug_assert!(et_threshold <= 3);
    let ord = truss_edge_order(g);
    let aux = build_edge_aux(g, &ord);
    let mut counters = EngineCounters::default();
    for &e in &ord.sequence {
        let (u, v) = g.endpoints(e);
        let branch = EdgeBranch {
            s: vec![u, v],
            c_vertices: aux.vplus[e as usize].clone(),
            c_edges: aux.eplus[e as usize].clone(),
            x_vertices: aux.vminus[e as usize].clone(),
            x_edges: aux.eminus[e as usize].clone(),
        };
        recurse(g, &ord, &aux, branch, et_threshold, sink, &mut counters);
    }
    // top-level zero-degree branches of the initial (S = ∅) branch:
    // isolated vertices are maximal 1-cliques and can never be blocked
    for v in 0..g.vertex_count() as u32 {
        if g.degree(v) == 0 {
            sink.emit(&[v]);
        }
    }
    counters
}

fn recurse(
    g: &Graph,
    ord: &TrussEdgeOrder,
    aux: &EdgeAux,
    branch: EdgeBranch,
    et_threshold: u8,
    sink: &mut CliqueSink,
    counters: &mut EngineCounters,
) {
    counters.recursive_calls += 1;
    debug_assert!(branch.s.len() % 2 == 0, "edge branches grow S in pairs");
    if branch.c_vertices.is_empty() && branch.x_vertices.is_empty() {
        sink.emit(&branch.s);
        return;
    }
    if et_threshold >= 1 && branch.x_vertices.is_empty() && !branch.c_vertices.is_empty() {
        let degrees = candidate_degrees(g, &branch);
        let min_deg = degrees.iter().copied().min().unwrap_or(0);
        if let Some(t) = detect_plex(
            branch.c_vertices.len(),
            min_deg,
            true,
            branch.c_edges.len(),
            g.induced_edge_count(&branch.c_vertices),
        ) {
            for k in t..=3 {
                counters.et_eligible[k as usize - 1] += 1;
            }
            if t <= et_threshold {
                counters.et_fired += 1;
                let rank = &ord.rank;
                let is_candidate_edge = |a: u32, b: u32| -> bool {
                    g.edge_id(a, b).is_some_and(|id| {
                        branch
                            .c_edges
                            .binary_search_by_key(&rank[id as usize], |&x| rank[x as usize])
                            .is_ok()
                    })
                };
                run_early_termination(
                    &branch.s,
                    &branch.c_vertices,
                    t,
                    is_candidate_edge,
                    sink,
                );
                return;
            }
        }
    }
    let rank = &ord.rank;
    for (idx, &e) in branch.c_edges.iter().enumerate() {
        let (a, b) = g.endpoints(e);
        let common = intersect_sorted(g.neighbors(a), g.neighbors(b));
        let vplus = &aux.vplus[e as usize];
        let mut s = branch.s.clone();
        s.push(a);
        s.push(b);
        // candidate side: survivors of the rank filter
        let c_vertices = intersect_sorted(&branch.c_vertices, vplus);
        let c_edges = intersect_by_rank(&branch.c_edges, &aux.eplus[e as usize], rank);
        // exclusion side: surviving exclusion vertices plus candidate
        // vertices that are still adjacent to S' but fail the rank filter
        let kept_x = intersect_sorted(&branch.x_vertices, &common);
        let migrants = difference_sorted(&intersect_sorted(&branch.c_vertices, &common), vplus);
        let x_vertices = union_sorted(&kept_x, &migrants);
        // edges consumed earlier at this branch have already moved to the
        // exclusion side
        let x_pool = union_by_rank(&branch.x_edges, &branch.c_edges[..idx], rank);
        let x_edges = intersect_by_rank(&x_pool, &aux.eminus[e as usize], rank);
        recurse(
            g,
            ord,
            aux,
            EdgeBranch {
                s,
                c_vertices,
                c_edges,
                x_vertices,
                x_edges,
            },
            et_threshold,
            sink,
            counters,
        );
    }
    zero_degree_terminate(g, &branch, sink);
}

/// Candidate-graph degree of each vertex in `branch.c_vertices`.
fn candidate_degrees(g: &Graph, branch: &EdgeBranch) -> Vec<usize> {
    let mut deg = vec![0usize; branch.c_vertices.len()];
    for &e in &branch.c_edges {
        let (a, b) = g.endpoints(e);
        for w in [a, b] {
            let i = branch
                .c_vertices
                .binary_search(&w)
                .expect("candidate edge endpoint outside C");
            deg[i] += 1;
        }
    }
    deg
}

/// Emits `S ∪ {v}` for every candidate vertex `v` without candidate
/// edges, unless some other vertex of C ∪ X is adjacent to all of
/// `S ∪ {v}` (which makes it non-maximal, or defers it to the branch
/// that owns the blocking edge).
///
/// Members of C ∪ X are common neighbors of S already, so the blocking
/// test reduces to graph adjacency with `v`; previously processed
/// zero-degree vertices take part automatically as members of C.
pub fn zero_degree_terminate(g: &Graph, branch: &EdgeBranch, sink: &mut CliqueSink) {
    let degrees = candidate_degrees(g, branch);
    let mut clique = branch.s.clone();
    for (i, &v) in branch.c_vertices.iter().enumerate() {
        if degrees[i] != 0 {
            continue;
        }
        let blocked = branch
            .c_vertices
            .iter()
            .chain(branch.x_vertices.iter())
            .any(|&w| w != v && g.has_edge(w, v));
        if !blocked {
            clique.push(v);
            sink.emit(&clique);
            clique.pop();
        }
    }
}

/// Intersection of two edge-id lists, both sorted by `rank`.
fn intersect_by_rank(a: &[u32], b: &[u32], rank: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match rank[a[i] as usize].cmp(&rank[b[j] as usize]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Union of two edge-id lists, both sorted by `rank`.
fn union_by_rank(a: &[u32], b: &[u32], rank: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() {
            out.push(b[j]);
            j += 1;
        } else {
            match rank[a[i] as usize].cmp(&rank[b[j] as usize]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
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
        ebbmc_enumerate(g, &mut sink, et);
        let mut cliques = sink.into_cliques();
        cliques.sort();
        cliques
    }

    #[test]
    fn aux_sets_on_the_triangle() {
        let g = construct::complete(3);
        let ord = truss_edge_order(&g);
        // all supports are 1, ties by id: removal order (0,1), (0,2), (1,2)
        assert_eq!(ord.rank, vec![0, 1, 2]);
        let aux = build_edge_aux(&g, &ord);
        let e01 = g.edge_id(0, 1).unwrap() as usize;
        assert_eq!(aux.vplus[e01], vec![2]);
        assert!(aux.eplus[e01].is_empty());
        assert!(aux.vminus[e01].is_empty());
        let e12 = g.edge_id(1, 2).unwrap() as usize;
        assert!(aux.vplus[e12].is_empty());
        assert_eq!(aux.vminus[e12], vec![0]);
    }

    #[test]
    fn aux_sets_empty_on_triangle_free_graphs() {
        let g = construct::cycle(5);
        let ord = truss_edge_order(&g);
        let aux = build_edge_aux(&g, &ord);
        for e in 0..g.edge_count() {
            assert!(aux.vplus[e].is_empty());
            assert!(aux.eplus[e].is_empty());
            assert!(aux.vminus[e].is_empty());
            assert!(aux.eminus[e].is_empty());
        }
    }

    #[test]
    fn aux_sets_partition_the_common_neighborhood() {
        let mut rng = SplitMix64::new(31);
        for _ in 0..40 {
            let n = 6 + rng.next_below(8) as usize;
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in (u + 1)..n as u32 {
                    if rng.next_below(100) < 55 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges);
            let ord = truss_edge_order(&g);
            let aux = build_edge_aux(&g, &ord);
            for e in 0..g.edge_count() as u32 {
                let (u, v) = g.endpoints(e);
                let common = g.common_neighbors(u, v).unwrap();
                let merged = union_sorted(&aux.vplus[e as usize], &aux.vminus[e as usize]);
                assert_eq!(merged, common.as_slice());
                assert_eq!(
                    crate::graph::count_intersection(
                        &aux.vplus[e as usize],
                        &aux.vminus[e as usize]
                    ),
                    0
                );
                for &id in &aux.eplus[e as usize] {
                    let (a, b) = g.endpoints(id);
                    assert!(ord.rank[id as usize] > ord.rank[e as usize]);
                    assert!(aux.vplus[e as usize].binary_search(&a).is_ok());
                    assert!(aux.vplus[e as usize].binary_search(&b).is_ok());
                }
            }
        }
    }

    #[test]
    fn level_one_candidates_fit_in_tau() {
        let g = construct::moon_moser(4);
        let ord = truss_edge_order(&g);
        let aux = build_edge_aux(&g, &ord);
        for e in 0..g.edge_count() {
            assert!(aux.vplus[e].len() <= ord.tau as usize);
        }
    }

    #[test]
    fn enumerates_tiny_graphs() {
        assert_eq!(run(&Graph::from_edges(1, []), 0), vec![vec![0]]);
        assert_eq!(
            run(&construct::star(3), 0),
            vec![vec![0, 1], vec![0, 2], vec![0, 3]]
        );
        assert_eq!(run(&construct::complete(4), 0), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn zero_degree_termination_cases() {
        // lone candidate with empty S
        let g1 = Graph::from_edges(1, []);
        let b = EdgeBranch {
            c_vertices: vec![0],
            ..Default::default()
        };
        let mut sink = CliqueSink::listing();
        zero_degree_terminate(&g1, &b, &mut sink);
        assert_eq!(sink.cliques(), &[vec![0]]);

        // candidate adjacent to S only: emitted
        let k3 = construct::complete(3);
        let b = EdgeBranch {
            s: vec![0, 1],
            c_vertices: vec![2],
            ..Default::default()
        };
        let mut sink = CliqueSink::listing();
        zero_degree_terminate(&k3, &b, &mut sink);
        assert_eq!(sink.cliques(), &[vec![0, 1, 2]]);

        // exclusion vertex adjacent to everything blocks the output
        let k4 = construct::complete(4);
        let b = EdgeBranch {
            s: vec![0, 1],
            c_vertices: vec![2],
            x_vertices: vec![3],
            ..Default::default()
        };
        let mut sink = CliqueSink::listing();
        zero_degree_terminate(&k4, &b, &mut sink);
        assert_eq!(sink.count(), 0);
    }

    #[test]
    fn matches_oracle_on_random_graphs() {
        let mut rng = SplitMix64::new(0xedbe);
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
    fn no_duplicates_on_clique_rich_graphs() {
        for et in [0, 3] {
            let cliques = run(&construct::moon_moser(3), et);
            assert_eq!(cliques.len(), 27);
            let mut dedup = cliques.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), cliques.len());
        }
    }
}
