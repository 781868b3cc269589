//! Builders for the standard small graphs used throughout the tests.

use crate::graph::Graph;

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// Path 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as u32).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((n as u32 - 1, 0));
    Graph::from_edges(n, edges)
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as u32).map(|l| (0, l)))
}

/// Complete bipartite graph K_{p,q}; side A is `0..p`, side B is `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..p as u32 {
        for b in 0..q as u32 {
            edges.push((a, p as u32 + b));
        }
    }
    Graph::from_edges(p + q, edges)
}

/// Moon–Moser graph on `3 * groups` vertices: the complete multipartite
/// graph with `groups` independent triples, which attains the extremal
/// 3^{n/3} maximal clique count.
pub fn moon_moser(groups: usize) -> Graph {
    let n = 3 * groups;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if u / 3 != v / 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Complement of `g` on the same vertex set.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
