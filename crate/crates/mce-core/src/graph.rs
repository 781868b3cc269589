//! Immutable undirected simple graph with sorted adjacency and stable edge
//! identifiers.
//!
//! Every engine in this crate works on [`Graph`]. Vertex ids are dense
//! (`0..n`), adjacency lists are strictly ascending, and edge ids are
//! assigned in canonical `(min, max)` lexicographic order at construction
//! time. Orderings permute edge *ranks* later; edge ids never move.

use std::collections::BTreeMap;
use std::io::BufRead;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: expected two integer endpoints, got {found:?}")]
    Parse { line: usize, found: String },
    #[error("i/o error while reading edge list: {0}")]
    Io(#[from] std::io::Error),
    #[error("vertex id {0} out of range (n = {1})")]
    VertexOutOfRange(u32, usize),
    #[error("common_neighbors requires two distinct vertices, got {0} twice")]
    IdenticalEndpoints(u32),
}

/// Strictly ascending list of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new(mut ids: Vec<u32>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Wraps a vector that is already strictly ascending.
    pub fn from_sorted(ids: Vec<u32>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl From<VertexSet> for Vec<u32> {
    fn from(s: VertexSet) -> Vec<u32> {
        s.0
    }
}

/// Set of edge identifiers, kept ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSet(Vec<u32>);

impl EdgeSet {
    pub fn new(mut ids: Vec<u32>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet(ids)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }
}

/// Immutable undirected simple graph.
///
/// Construction normalizes the input: self-loops dropped, duplicate edges
/// merged, adjacency symmetrized. Adjacency is CSR-shaped with a parallel
/// edge-id array so that `rank(u, w)` lookups during branching stay
/// allocation-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    // edge id of (v, targets[i]) for the adjacency slot i
    slot_edge_ids: Vec<u32>,
    // canonical endpoints per edge id, u < v, lexicographically sorted
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a graph from `n` vertices and an arbitrary edge soup.
    ///
    /// Self-loops are dropped and duplicates (in either orientation)
    /// merged. Panics if an endpoint is `>= n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Graph {
        let mut canon: Vec<(u32, u32)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        canon.sort_unstable();
        canon.dedup();

        let mut degree = vec![0usize; n];
        for &(u, v) in &canon {
            assert!((u as usize) < n && (v as usize) < n, "endpoint out of range");
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0u32; acc];
        let mut slot_edge_ids = vec![0u32; acc];
        for (eid, &(u, v)) in canon.iter().enumerate() {
            let eid = eid as u32;
            targets[cursor[u as usize]] = v;
            slot_edge_ids[cursor[u as usize]] = eid;
            cursor[u as usize] += 1;
            targets[cursor[v as usize]] = u;
            slot_edge_ids[cursor[v as usize]] = eid;
            cursor[v as usize] += 1;
        }
        // canonical edge order makes every adjacency list ascending already
        // for the u-side; the v-side needs a sort per vertex
        for v in 0..n {
            let span = offsets[v]..offsets[v + 1];
            let mut pairs: Vec<(u32, u32)> = targets[span.clone()]
                .iter()
                .copied()
                .zip(slot_edge_ids[span.clone()].iter().copied())
                .collect();
            pairs.sort_unstable();
            for (i, (t, e)) in pairs.into_iter().enumerate() {
                targets[offsets[v] + i] = t;
                slot_edge_ids[offsets[v] + i] = e;
            }
        }

        Graph {
            n,
            offsets,
            targets,
            slot_edge_ids,
            edges: canon,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Ascending neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge ids parallel to `neighbors(v)`.
    pub fn neighbor_edge_ids(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.slot_edge_ids[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edge id of `(u, v)`, if present.
    pub fn edge_id(&self, u: u32, v: u32) -> Option<u32> {
        let pos = self.neighbors(u).binary_search(&v).ok()?;
        Some(self.neighbor_edge_ids(u)[pos])
    }

    /// Canonical endpoints `(u, v)` with `u < v` of edge `e`.
    pub fn endpoints(&self, e: u32) -> (u32, u32) {
        self.edges[e as usize]
    }

    pub fn edge_list(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Ascending merge-intersection of the neighborhoods of `u` and `v`.
    pub fn common_neighbors(&self, u: u32, v: u32) -> Result<VertexSet, GraphError> {
        if u as usize >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v as usize >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::IdenticalEndpoints(u));
        }
        Ok(VertexSet::from_sorted(intersect_sorted(
            self.neighbors(u),
            self.neighbors(v),
        )))
    }

    /// Number of edges of the graph with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: &[u32]) -> usize {
        debug_assert!(s.windows(2).all(|w| w[0] < w[1]));
        let mut count = 0usize;
        for &v in s {
            count += count_intersection(self.neighbors(v), s);
        }
        count / 2
    }

    /// Canonical edge-list text: one `u v` line per edge, sorted by
    /// `(u, v)` with `u < v`, `\n` terminated.
    pub fn to_canonical_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

/// A graph loaded from text, together with the map from original vertex
/// ids to the dense ids used internally.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `original_ids[dense] = original`; ascending by construction.
    pub original_ids: Vec<u64>,
}

impl LoadedGraph {
    pub fn original_of(&self, dense: u32) -> u64 {
        self.original_ids[dense as usize]
    }

    pub fn dense_of(&self, original: u64) -> Option<u32> {
        self.original_ids
            .binary_search(&original)
            .ok()
            .map(|i| i as u32)
    }
}

/// Parses whitespace-separated edge-list text.
///
/// Lines starting with `#` or `%` are comments, blank lines are skipped.
/// Self-loops are dropped, duplicates merged, and vertex ids densified in
/// ascending order of the original ids. Empty input yields the empty
/// graph.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph, GraphError> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    let mut seen: BTreeMap<u64, u32> = BTreeMap::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let a = parse_token(tokens.next(), lineno, trimmed)?;
        let b = parse_token(tokens.next(), lineno, trimmed)?;
        if tokens.next().is_some() {
            return Err(GraphError::Parse {
                line: lineno,
                found: trimmed.to_string(),
            });
        }
        seen.entry(a).or_insert(0);
        seen.entry(b).or_insert(0);
        raw_edges.push((a, b));
    }
    let original_ids: Vec<u64> = seen.keys().copied().collect();
    for (dense, &orig) in original_ids.iter().enumerate() {
        *seen.get_mut(&orig).unwrap() = dense as u32;
    }
    let n = original_ids.len();
    let edges = raw_edges.into_iter().map(|(a, b)| (seen[&a], seen[&b]));
    Ok(LoadedGraph {
        graph: Graph::from_edges(n, edges),
        original_ids,
    })
}

fn parse_token(tok: Option<&str>, line: usize, full: &str) -> Result<u64, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse {
        line,
        found: full.to_string(),
    })?;
    tok.parse::<u64>().map_err(|_| GraphError::Parse {
        line,
        found: tok.to_string(),
    })
}

/// Ascending merge-intersection of two sorted slices.
pub fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
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

/// Size of the intersection of two sorted slices, no allocation.
pub fn count_intersection(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Elements of sorted `a` not present in sorted `b`.
pub fn difference_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j < b.len() && b[j] == x {
            continue;
        }
        out.push(x);
    }
    out
}

/// Ascending union of two sorted duplicate-free slices.
pub fn union_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}
