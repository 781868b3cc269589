//! Plex detection and direct maximal-clique construction for dense
//! candidate graphs.
//!
//! A branch whose exclusion side is empty and whose candidate graph is a
//! 1-, 2- or 3-plex does not need further branching: the complement of the
//! candidate graph has maximum degree at most two, so it decomposes into
//! isolated vertices, simple paths and simple cycles, and the maximal
//! cliques are exactly the combinations of one maximal independent set per
//! complement component.

use crate::sink::CliqueSink;

/// Decomposition of a candidate graph's complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlexStructure {
    pub t: u8,
    /// Vertices adjacent to all other candidates (isolated in the
    /// complement), ascending.
    pub f: Vec<u32>,
    /// Complement perfect matching over non-full vertices (t = 2); the
    /// smaller endpoint is stored on the left.
    pub pairs: Vec<(u32, u32)>,
    /// Complement simple paths (t = 3), each of length >= 2, starting at
    /// the smaller-id endpoint.
    pub paths: Vec<Vec<u32>>,
    /// Complement simple cycles (t = 3), each of length >= 3, starting at
    /// the smallest-id member and walking toward its smaller neighbor.
    pub cycles: Vec<Vec<u32>>,
}

/// Returns the smallest `t` in 1..=3 for which the candidate graph is a
/// t-plex, provided the branch is eligible for early termination at all:
/// empty exclusion side and a ghost-free candidate edge set (the filtered
/// edge count equals the number of G-edges induced on the candidates).
///
/// `min_candidate_degree` comes for free from the pivot scan.
pub fn detect_plex(
    candidate_count: usize,
    min_candidate_degree: usize,
    exclusion_empty: bool,
    candidate_edge_count: usize,
    g_induced_edge_count: usize,
) -> Option<u8> {
    assert!(candidate_count > 0, "detect_plex requires candidates");
    if !exclusion_empty || candidate_edge_count != g_induced_edge_count {
        return None;
    }
    for t in 1..=3u8 {
        if min_candidate_degree + t as usize >= candidate_count {
            return Some(t);
        }
    }
    None
}

/// Builds the complement decomposition of the candidate set `c` (ascending
/// vertex ids) under the given candidate adjacency.
///
/// The caller guarantees `c` is a t-plex for the provided `t`.
pub fn build_plex_structure(c: &[u32], t: u8, adjacent: impl Fn(u32, u32) -> bool) -> PlexStructure {
    let k = c.len();
    let mut comp_adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in (i + 1)..k {
            if !adjacent(c[i], c[j]) {
                comp_adj[i].push(j);
                comp_adj[j].push(i);
            }
        }
    }
    debug_assert!(
        comp_adj.iter().all(|a| a.len() + 1 <= t as usize),
        "candidate set is not a {t}-plex"
    );

    let mut f = Vec::new();
    let mut pairs = Vec::new();
    let mut paths = Vec::new();
    let mut cycles = Vec::new();
    let mut visited = vec![false; k];

    for i in 0..k {
        if comp_adj[i].is_empty() {
            f.push(c[i]);
            visited[i] = true;
        }
    }
    // paths start at their smaller-id endpoint; ascending scan finds it first
    for i in 0..k {
        if visited[i] || comp_adj[i].len() != 1 {
            continue;
        }
        let mut seq = vec![i];
        visited[i] = true;
        let mut prev = i;
        let mut cur = comp_adj[i][0];
        loop {
            seq.push(cur);
            visited[cur] = true;
            let next = comp_adj[cur].iter().copied().find(|&w| w != prev);
            match next {
                Some(w) if !visited[w] => {
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        if seq.len() == 2 && t == 2 {
            pairs.push((c[seq[0]], c[seq[1]]));
        } else {
            paths.push(seq.into_iter().map(|i| c[i]).collect());
        }
    }
    // what remains are cycles; start at the smallest member, walk toward
    // its smaller complement neighbor
    for i in 0..k {
        if visited[i] {
            continue;
        }
        let mut seq = vec![i];
        visited[i] = true;
        let mut prev = i;
        let mut cur = *comp_adj[i].iter().min().expect("cycle member has degree 2");
        while cur != i {
            seq.push(cur);
            visited[cur] = true;
            let next = comp_adj[cur]
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("cycle walk broke");
            prev = cur;
            cur = next;
        }
        cycles.push(seq.into_iter().map(|i| c[i]).collect());
    }

    PlexStructure {
        t,
        f,
        pairs,
        paths,
        cycles,
    }
}

/// Emits the 2^{|pairs|} maximal cliques of a 2-plex candidate graph:
/// `s ∪ F ∪ (one endpoint per pair)`, iterating a binary counter over the
/// pairs.
pub fn enum_2plex(s: &[u32], plex: &PlexStructure, sink: &mut CliqueSink) {
    debug_assert_eq!(plex.t, 2);
    debug_assert!(plex.paths.is_empty() && plex.cycles.is_empty());
    let base: Vec<u32> = s.iter().chain(plex.f.iter()).copied().collect();
    let k = plex.pairs.len();
    let mut clique = Vec::with_capacity(base.len() + k);
    for num in 0u64..(1u64 << k) {
        clique.clear();
        clique.extend_from_slice(&base);
        for (i, &(l, r)) in plex.pairs.iter().enumerate() {
            clique.push(if num >> i & 1 == 0 { l } else { r });
        }
        sink.emit(&clique);
    }
}

/// All maximal independent sets of the complement path `seq` that contain
/// the designated seed.
///
/// `prefix` holds the seed vertices (possibly including off-path vertices,
/// as in the cycle reduction) and `last_pos` is the 1-based position on
/// `seq` of the last seed vertex. Expansion adds position `i+2`, or `i+3`
/// when that still lies on the path; a set is collected once `i+2`
/// overruns the path.
pub fn enum_path(seq: &[u32], prefix: &[u32], last_pos: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = prefix.to_vec();
    extend_path(seq, last_pos, &mut current, &mut out);
    out
}

fn extend_path(seq: &[u32], pos: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 2 > seq.len() {
        out.push(current.clone());
        return;
    }
    current.push(seq[pos + 1]);
    extend_path(seq, pos + 2, current, out);
    current.pop();
    if pos + 3 <= seq.len() {
        current.push(seq[pos + 2]);
        extend_path(seq, pos + 3, current, out);
        current.pop();
    }
}

/// All maximal independent sets of a standalone complement path: seeds
/// `{v1}` and `{v2}`.
pub fn enum_path_all(seq: &[u32]) -> Vec<Vec<u32>> {
    assert!(seq.len() >= 2, "complement path needs at least two vertices");
    let mut out = enum_path(seq, &[seq[0]], 1);
    out.extend(enum_path(seq, &[seq[1]], 2));
    out
}

/// All maximal independent sets of the complement cycle `seq`.
///
/// Small cycles are hardcoded; longer ones reduce to three path cases:
/// the set contains v1, contains v2, or contains neither (forcing v3 and
/// v_{|c|} in).
pub fn enum_cycle(seq: &[u32]) -> Vec<Vec<u32>> {
    let k = seq.len();
    assert!(k >= 3, "complement cycle needs at least three vertices");
    match k {
        3 => vec![vec![seq[0]], vec![seq[1]], vec![seq[2]]],
        4 => vec![vec![seq[0], seq[2]], vec![seq[1], seq[3]]],
        5 => vec![
            vec![seq[0], seq[2]],
            vec![seq[0], seq[3]],
            vec![seq[1], seq[3]],
            vec![seq[1], seq[4]],
            vec![seq[2], seq[4]],
        ],
        _ => {
            let mut out = enum_path(&seq[..k - 1], &[seq[0]], 1);
            out.extend(enum_path(&seq[1..], &[seq[1]], 1));
            out.extend(enum_path(&seq[2..k - 2], &[seq[k - 1], seq[2]], 1));
            out
        }
    }
}

/// Emits every maximal clique of a 3-plex candidate graph:
/// `s ∪ F ∪ (one solution per path) ∪ (one solution per cycle)` over the
/// full cartesian product.
pub fn enum_3plex(s: &[u32], plex: &PlexStructure, sink: &mut CliqueSink) {
    debug_assert_eq!(plex.t, 3);
    debug_assert!(plex.pairs.is_empty());
    let component_solutions: Vec<Vec<Vec<u32>>> = plex
        .paths
        .iter()
        .map(|p| enum_path_all(p))
        .chain(plex.cycles.iter().map(|c| enum_cycle(c)))
        .collect();
    let base: Vec<u32> = s.iter().chain(plex.f.iter()).copied().collect();
    let mut clique = base.clone();
    emit_product(&component_solutions, 0, &base, &mut clique, sink);
}

fn emit_product(
    solutions: &[Vec<Vec<u32>>],
    idx: usize,
    base: &[u32],
    clique: &mut Vec<u32>,
    sink: &mut CliqueSink,
) {
    if idx == solutions.len() {
        sink.emit(clique);
        return;
    }
    for choice in &solutions[idx] {
        let len = clique.len();
        clique.extend_from_slice(choice);
        emit_product(solutions, idx + 1, base, clique, sink);
        clique.truncate(len);
    }
}

/// Dispatches an eligible branch to the matching direct constructor.
///
/// `s` is the partial clique, `c` the ascending candidate set, `t` the
/// detected plex level, `adjacent` the candidate adjacency.
pub fn run_early_termination(
    s: &[u32],
    c: &[u32],
    t: u8,
    adjacent: impl Fn(u32, u32) -> bool,
    sink: &mut CliqueSink,
) {
    match t {
        1 => {
            let clique: Vec<u32> = s.iter().chain(c.iter()).copied().collect();
            sink.emit(&clique);
        }
        2 => {
            let plex = build_plex_structure(c, 2, adjacent);
            enum_2plex(s, &plex, sink);
        }
        3 => {
            let plex = build_plex_structure(c, 3, adjacent);
            enum_3plex(s, &plex, sink);
        }
        other => unreachable!("plex level {other} out of range"),
    }
}
