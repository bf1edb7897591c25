//! Exact colouring analysis for small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs, graph6 I/O, generators and exact structural
//!   invariants (clique, independence and matching numbers).
//! * [`coloring`]: canonical colourings, exact chromatic numbers,
//!   stinginess, the r-bounded family and the colouring-property framework.
//! * [`lonely`]: frames, lonely edges, frame-preserving swaps, lonely path
//!   pairs and the verifiers built on them.
//! * [`bounds`]: exact evaluation of every bound/implication on a graph,
//!   with pass / vacuous / violation verdicts and serialisable reports.
//! * [`harness`]: corpus sweeps, counterexample searches and named
//!   verification suites, as driven by the `stingy` binary.
//!
//! Per-graph work is mapped in parallel with rayon when the `parallel`
//! feature is enabled (the default) and sequentially otherwise; results are
//! identical either way.

pub mod bounds;
pub mod catalog;
pub mod coloring;
mod error;
pub mod graph;
pub mod harness;
pub mod lonely;
pub mod par;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::Graph;
