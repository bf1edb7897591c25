use serde::{Deserialize, Serialize};

use super::{bit, Bits, Graph};

/// ω, α, Δ, δ and ν of a graph. All zero for the null graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub omega: usize,
    pub alpha: usize,
    pub max_deg: usize,
    pub min_deg: usize,
    pub nu: usize,
}

pub fn invariants(g: &Graph) -> GraphInvariants {
    GraphInvariants {
        omega: clique_number(g),
        alpha: independence_number(g),
        max_deg: g.max_degree(),
        min_deg: g.min_degree(),
        nu: matching_number(g),
    }
}

/// Greedy colouring of `cand` used as the pruning bound: returns the
/// candidates in colour order together with the colour index (1-based)
/// assigned to each.
fn colour_bound(g: &Graph, cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut k = 0;
    while uncoloured != 0 {
        k += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !g.neighbors(v);
            uncoloured &= !bit(v);
            order.push(v);
            colours.push(k);
        }
    }
    (order, colours)
}

fn expand(g: &Graph, current: u64, cand: u64, best: &mut u64) {
    let (order, colours) = colour_bound(g, cand);
    let mut cand = cand;
    for idx in (0..order.len()).rev() {
        let size = current.count_ones() as usize;
        if size + colours[idx] <= best.count_ones() as usize {
            return;
        }
        let v = order[idx];
        let next = current | bit(v);
        let sub = cand & g.neighbors(v);
        if sub == 0 {
            if next.count_ones() > best.count_ones() {
                *best = next;
            }
        } else {
            expand(g, next, sub, best);
        }
        cand &= !bit(v);
    }
}

/// A maximum clique as a vertex bitset (branch and bound with a greedy
/// colouring bound).
pub fn maximum_clique(g: &Graph) -> u64 {
    let mut best = 0u64;
    if g.n() > 0 {
        expand(g, 0, g.vertex_mask(), &mut best);
    }
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).count_ones() as usize
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Calls `f` on every clique of exactly `k` vertices, in lexicographic
/// order of their sorted vertex lists. Stops early when `f` returns false.
pub fn for_each_clique_of_size(g: &Graph, k: usize, f: &mut dyn FnMut(u64) -> bool) {
    fn rec(g: &Graph, cur: u64, cand: u64, left: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return f(cur);
        }
        if (cand.count_ones() as usize) < left {
            return true;
        }
        let mut cand = cand;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            if !rec(g, cur | bit(v), cand & g.neighbors(v), left - 1, f) {
                return false;
            }
        }
        true
    }
    rec(g, 0, g.vertex_mask(), k, f);
}

/// Every independent set of size α(G).
pub fn maximum_independent_sets(g: &Graph) -> Vec<u64> {
    let comp = g.complement();
    let alpha = clique_number(&comp);
    let mut out = Vec::new();
    if alpha == 0 {
        return out;
    }
    for_each_clique_of_size(&comp, alpha, &mut |s| {
        out.push(s);
        true
    });
    out
}

/// Maximum matching size by exact search: the lowest unmatched vertex is
/// either left exposed or matched to one of its unmatched neighbours.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, free: u64, found: usize, best: &mut usize) {
        let bound = found + free.count_ones() as usize / 2;
        if bound <= *best {
            return;
        }
        // drop isolated vertices of the remaining subgraph
        let mut free = free;
        for v in Bits(free) {
            if g.neighbors(v) & free == 0 {
                free &= !bit(v);
            }
        }
        if free == 0 {
            *best = (*best).max(found);
            return;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !bit(v);
        for u in Bits(g.neighbors(v) & rest) {
            rec(g, rest & !bit(u), found + 1, best);
        }
        rec(g, rest, found, best);
    }
    let mut best = 0;
    rec(g, g.vertex_mask(), 0, &mut best);
    best
}
