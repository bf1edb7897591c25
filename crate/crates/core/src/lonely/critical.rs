use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number, stinginess_by_clique_search};
use crate::graph::{bit, Graph};

/// Edges whose two endpoints together drop χ by exactly 2, plus ι ≥ 2 and
/// whether the two agree (nonempty edge set ⇔ ι ≥ 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublyCritical {
    pub edges: Vec<(usize, usize)>,
    pub iota_at_least_two: bool,
    pub equivalence_holds: bool,
}

pub fn doubly_critical_edges(g: &Graph) -> DoublyCritical {
    let chi = chromatic_number(g);
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| chromatic_number(&g.without(bit(a) | bit(b))) + 2 == chi)
        .collect();
    let (iota, _) = stinginess_by_clique_search(g);
    let iota_at_least_two = iota >= 2;
    DoublyCritical {
        equivalence_holds: edges.is_empty() != iota_at_least_two,
        edges,
        iota_at_least_two,
    }
}
