use serde::{Deserialize, Serialize};

use super::{chromatic_number, for_each_partition, min_coloring, Coloring, Guards};
use crate::graph::{clique_number, for_each_clique_of_size, Graph};
use crate::Result;

/// χ(G), the stinginess ι(G) and a stingy optimal colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringStats {
    pub chi: usize,
    pub iota: usize,
    pub stingy_witness: Coloring,
}

/// Visits every colouring of `g` with exactly χ(G) classes, canonicalised,
/// in a deterministic order. `f` returns false to stop early.
pub fn for_each_optimal_coloring(
    g: &Graph,
    guards: &Guards,
    f: &mut dyn FnMut(Coloring) -> bool,
) -> Result<usize> {
    guards.check_optimal(g, "optimal colouring enumeration")?;
    let chi = chromatic_number(g);
    for_each_partition(g, chi, g.n().max(1), &mut |cls| {
        f(Coloring::from_classes_unchecked(g.n(), cls.to_vec()))
    });
    Ok(chi)
}

pub fn enumerate_optimal_colorings(g: &Graph, guards: &Guards) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    for_each_optimal_coloring(g, guards, &mut |c| {
        out.push(c);
        true
    })?;
    Ok(out)
}

/// Stinginess by enumeration of the optimal colourings when `g` is within
/// the guard, otherwise by [`stinginess_by_clique_search`].
pub fn stats(g: &Graph, guards: &Guards) -> Result<ColoringStats> {
    if g.n() > guards.optimal {
        let chi = chromatic_number(g);
        let (iota, stingy_witness) = stinginess_by_clique_search(g);
        return Ok(ColoringStats {
            chi,
            iota,
            stingy_witness,
        });
    }
    let mut best: Option<Coloring> = None;
    let chi = for_each_optimal_coloring(g, guards, &mut |c| {
        if best
            .as_ref()
            .is_none_or(|b| c.singleton_count() > b.singleton_count())
        {
            best = Some(c);
        }
        true
    })?;
    let stingy_witness = best.unwrap_or_else(|| Coloring::discrete(0));
    Ok(ColoringStats {
        chi,
        iota: stingy_witness.singleton_count(),
        stingy_witness,
    })
}

/// Stinginess without enumerating colourings: the singleton classes of an
/// optimal colouring are pairwise adjacent, so ι(G) is the largest `s` for
/// which some `s`-clique `S` leaves `G ∖ S` colourable with χ(G) − s
/// classes.
pub fn stinginess_by_clique_search(g: &Graph) -> (usize, Coloring) {
    let chi = chromatic_number(g);
    let top = clique_number(g).min(chi);
    for s in (0..=top).rev() {
        let mut found = None;
        for_each_clique_of_size(g, s, &mut |clique| {
            let (k, sub) = min_coloring(&g.without(clique), None);
            if k + s <= chi {
                let singles: Vec<u64> = crate::graph::Bits(clique).map(crate::graph::bit).collect();
                found = Some(Coloring::lift(g.n(), clique, sub.classes(), &singles));
                false
            } else {
                true
            }
        });
        if let Some(c) = found {
            return (s, c);
        }
    }
    unreachable!("s = 0 always succeeds with an optimal colouring")
}
