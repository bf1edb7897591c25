use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::graph::{bit, Bits, Graph};
use crate::{Error, Result};

/// `L_C(G)`: lonely edges of `g` under a fixed colouring, as out-neighbour
/// bitsets. `out[v]` is `L_C(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonelyDigraph {
    n: usize,
    out: Vec<u64>,
}

impl LonelyDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn out(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// `|L_C(v)|`.
    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.out[v] & bit(w) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|o| o.count_ones() as usize).sum()
    }

    /// Edges in order of tail, then head.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|v| Bits(self.out[v]).map(move |w| (v, w)))
            .collect()
    }
}

fn lonely_unchecked(g: &Graph, c: &Coloring, labels: &[usize], v: usize, w: usize) -> bool {
    let (cv, cw) = (labels[v], labels[w]);
    cv != cw && g.neighbors(v) & c.classes()[cw] == bit(w)
}

/// `(v, w)` is lonely under `c`: different classes, and `w` is `v`'s only
/// neighbour in `w`'s class.
pub fn is_lonely(g: &Graph, c: &Coloring, v: usize, w: usize) -> Result<bool> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if c.n() != g.n() {
        return Err(Error::NotPartition(format!(
            "colouring covers {} vertices, graph has {}",
            c.n(),
            g.n()
        )));
    }
    Ok(lonely_unchecked(g, c, &c.labels(), v, w))
}

pub fn lonely_digraph(g: &Graph, c: &Coloring) -> Result<LonelyDigraph> {
    if !c.is_proper(g)? {
        let (u, v) = c
            .first_conflict(g)
            .expect("improper colouring has a conflict");
        return Err(Error::Improper(u, v));
    }
    Ok(lonely_digraph_unchecked(g, c))
}

pub(crate) fn lonely_digraph_unchecked(g: &Graph, c: &Coloring) -> LonelyDigraph {
    let out = (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            c.classes()
                .iter()
                .filter(|&&k| k & bit(v) == 0)
                .map(|&k| nb & k)
                .filter(|m| m.count_ones() == 1)
                .fold(0u64, |acc, m| acc | m)
        })
        .collect();
    LonelyDigraph { n: g.n(), out }
}

/// Exchanges `v` and `w` between their classes. Both `(v, w)` and `(w, v)`
/// must be lonely; the result is proper and has the same frame.
pub fn swap(g: &Graph, c: &Coloring, v: usize, w: usize) -> Result<Coloring> {
    for (from, to) in [(v, w), (w, v)] {
        if !is_lonely(g, c, from, to)? {
            return Err(Error::NotLonely { from, to });
        }
    }
    let classes = c
        .classes()
        .iter()
        .map(|&k| {
            let has_v = k & bit(v) != 0;
            let has_w = k & bit(w) != 0;
            match (has_v, has_w) {
                (true, false) => (k & !bit(v)) | bit(w),
                (false, true) => (k & !bit(w)) | bit(v),
                _ => k,
            }
        })
        .collect();
    Coloring::from_classes(c.n(), classes)
}
