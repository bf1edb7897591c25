//! Frames, lonely edges and the verifiers built on them.
//!
//! A directed edge `(v, w)` is lonely under a colouring `C` when `v` and `w`
//! lie in different classes and `w` is the only neighbour of `v` inside
//! `w`'s class. Swapping the endpoints of an edge that is lonely in both
//! directions yields another colouring on the same frame.

mod critical;
mod digraph;
mod frame;
mod paths;
mod replete;

pub use critical::{doubly_critical_edges, DoublyCritical};
pub use digraph::{is_lonely, lonely_digraph, swap, LonelyDigraph};
pub use frame::{frame, frame_m, small, Frame};
pub use paths::{
    enumerate_lonely_path_pairs, verify_lonely_path_lemma, verify_lonely_path_lemma_on,
    LonelyPathMode, LonelyPathPair, LonelyPathReport, LonelyPathViolation, DEFAULT_MAX_LEN,
};
pub use replete::{
    check_singletons_touch_small_classes, check_touches_everybody, verify_replete_lemma,
    verify_singletons_touch_lemma, verify_touches_everybody_lemma, RepleteReport, RepleteViolation,
    TouchReport,
};
