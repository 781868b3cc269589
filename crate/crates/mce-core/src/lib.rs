//! Maximal clique enumeration with hybrid branch-and-bound.
//!
//! The crate provides three enumeration engines over one immutable
//! [`graph::Graph`]:
//!
//! * [`vertex`] — classic Bron–Kerbosch with Tomita pivoting and a
//!   degeneracy-ordered initial branch,
//! * [`edge`] — edge-oriented branching driven by a truss-based edge
//!   ordering with per-edge auxiliary sets,
//! * [`hybrid`] — truss-ordered edge branching at the initial branch and
//!   pivot-based vertex branching below it,
//!
//! plus plex-based early termination ([`plex`]), reference enumerators
//! used as ground truth ([`oracle`]), deterministic ER/BA generators
//! ([`synth`]), and the ordering/statistics machinery ([`order`]).
//!
//! All engines deliver cliques through a [`sink::CliqueSink`] and agree on
//! an order-independent 64-bit digest, so outputs can be cross-checked
//! without materializing clique lists.

pub mod construct;
pub mod edge;
pub mod graph;
pub mod hybrid;
pub mod mix;
pub mod oracle;
pub mod order;
pub mod plex;
pub mod sink;
pub mod synth;
pub mod vertex;

pub use graph::{load_edge_list, Graph, LoadedGraph, VertexSet};
pub use order::{compute_stats, degeneracy_order, triangle_count, truss_edge_order, GraphStats};
pub use sink::{CliqueSink, EngineCounters, SinkMode};
