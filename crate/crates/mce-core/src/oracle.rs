//! Reference enumerators used as ground truth for the engines.
//!
//! Two independent oracles: subset enumeration (exact but capped) and a
//! textbook pivot Bron–Kerbosch with no orderings, no edge filtering and
//! no early termination. A shared bug would require both unrelated
//! implementations to agree wrongly.

use thiserror::Error;

use crate::graph::{intersect_sorted, Graph};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("exhaustive enumeration supports n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
}

const EXHAUSTIVE_MAX_N: usize = 20;

/// Enumerates maximal cliques by checking every vertex subset.
///
/// Returns cliques as ascending vertex lists, sorted lexicographically.
pub fn exhaustive_mce(g: &Graph) -> Result<Vec<Vec<u32>>, OracleError> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    let mut adj_bits = vec![0u32; n];
    for v in 0..n as u32 {
        for &w in g.neighbors(v) {
            adj_bits[v as usize] |= 1 << w;
        }
    }
    let is_clique = |mask: u32| -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if mask & !(1 << v) & !adj_bits[v as usize] != 0 {
                return false;
            }
        }
        true
    };
    let mut cliques = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if !is_clique(mask) {
            continue;
        }
        let mut maximal = true;
        for w in 0..n as u32 {
            if mask & (1 << w) == 0 && (adj_bits[w as usize] & mask) == mask {
                maximal = false;
                break;
            }
        }
        if maximal {
            let members: Vec<u32> = (0..n as u32).filter(|&v| mask & (1 << v) != 0).collect();
            cliques.push(members);
        }
    }
    cliques.sort();
    Ok(cliques)
}

/// Textbook Bron–Kerbosch with Tomita pivoting, starting from
/// `(∅, V, ∅)`. Serves as the mid-scale oracle.
///
/// Returns cliques sorted lexicographically, plus the number of recursive
/// calls.
pub fn reference_bk(g: &Graph) -> (Vec<Vec<u32>>, u64) {
    let n = g.vertex_count();
    let mut cliques = Vec::new();
    let mut calls = 0u64;
    let p: Vec<u32> = (0..n as u32).collect();
    bk_rec(g, &mut Vec::new(), p, Vec::new(), &mut cliques, &mut calls);
    cliques.sort();
    (cliques, calls)
}

fn bk_rec(
    g: &Graph,
    r: &mut Vec<u32>,
    mut p: Vec<u32>,
    mut x: Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    calls: &mut u64,
) {
    *calls += 1;
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    if p.is_empty() {
        return;
    }
    // pivot from P ∪ X maximizing candidate neighbors, smallest id on ties
    let mut pivot = u32::MAX;
    let mut best = usize::MAX;
    for &u in p.iter().chain(x.iter()) {
        let cnt = crate::graph::count_intersection(g.neighbors(u), &p);
        if best == usize::MAX || cnt > best || (cnt == best && u < pivot) {
            best = cnt;
            pivot = u;
        }
    }
    let branch_verts: Vec<u32> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in branch_verts {
        r.push(v);
        let np = intersect_sorted(&p, g.neighbors(v));
        let nx = intersect_sorted(&x, g.neighbors(v));
        bk_rec(g, r, np, nx, out, calls);
        r.pop();
        p.retain(|&w| w != v);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
}
