//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! neighbourhood bitset per vertex.

mod generate;
mod graph6;
mod invariants;

use std::fmt;

use crate::{Error, Result};

pub use generate::{generate, Family};
pub use graph6::{emit_graph6, parse_graph6};
pub use invariants::{
    clique_number, for_each_clique_of_size, independence_number, invariants, matching_number,
    maximum_clique, maximum_independent_sets, GraphInvariants,
};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with bits `0..n` set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and the
    /// absence of loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mask = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidParam(format!(
                    "row {v} has bits beyond n = {n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidParam(format!("self-loop at {v}")));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidParam(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(Self { n, adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParam(format!("self-loop at {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Neighbourhood bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 order).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for u in Bits(self.adj[v] & full_mask(v)) {
                out.push((u, v));
            }
        }
        out
    }

    /// True when no two vertices of `set` are adjacent.
    #[inline]
    pub fn is_independent(&self, set: u64) -> bool {
        Bits(set).all(|v| self.adj[v] & set == 0)
    }

    #[inline]
    pub fn is_clique(&self, set: u64) -> bool {
        Bits(set).all(|v| (set & !bit(v)) & !self.adj[v] == 0)
    }

    pub fn complement(&self) -> Self {
        let mask = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Self { n: self.n, adj }
    }

    /// Subgraph induced by the vertices in `keep`, relabelled to
    /// `0..|keep|` in increasing order of the original labels.
    pub fn induced(&self, keep: u64) -> Self {
        let keep = keep & self.vertex_mask();
        let verts: Vec<usize> = Bits(keep).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| Bits(self.adj[v] & keep).fold(0u64, |acc, u| acc | bit(index[u])))
            .collect();
        Self {
            n: verts.len(),
            adj,
        }
    }

    /// `G ∖ removed`.
    pub fn without(&self, removed: u64) -> Self {
        self.induced(self.vertex_mask() & !removed)
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Self { n: self.n, adj }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self).expect("graph size is bounded by MAX_VERTICES")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn complement_involution_and_known_cases() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        assert_eq!(
            Graph::empty(6).unwrap().complement(),
            generate(&Family::Complete(6)).unwrap()
        );
        let c = c5().complement();
        assert_eq!(c.edge_count(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c.complement(), c5());
    }

    #[test]
    fn complement_of_c5_is_isomorphic_to_c5() {
        // brute force over all 120 relabellings
        let target = c5();
        let comp = target.complement();
        let mut found = false;
        permutations(5, &mut |p| {
            if comp.permuted(p) == target {
                found = true;
            }
        });
        assert!(found);
    }

    fn permutations(n: usize, f: &mut dyn FnMut(&[usize])) {
        fn rec(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if k == p.len() {
                f(p);
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                rec(k + 1, p, f);
                p.swap(k, i);
            }
        }
        rec(0, &mut (0..n).collect(), f);
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = c5().induced(0b10110);
        // vertices 1,2,4 -> 0,1,2; edges 1-2 and 4-... none with 1 or 2 except 1-2
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::empty(65).is_err());
        let mut g = Graph::empty(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert_eq!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        );
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
    }
}
