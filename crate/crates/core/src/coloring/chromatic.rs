//! Exact minimum colourings by DSATUR-ordered branch and bound, optionally
//! with a cap on class sizes (the r-bounded case).

use super::Coloring;
use crate::graph::{bit, clique_number, Bits, Graph};

struct Search<'a> {
    g: &'a Graph,
    cap: usize,
    lower: usize,
    best: usize,
    best_classes: Vec<u64>,
    classes: Vec<u64>,
}

impl Search<'_> {
    fn fits(&self, class: u64, v: usize) -> bool {
        class & self.g.neighbors(v) == 0 && (class.count_ones() as usize) < self.cap
    }

    /// Uncoloured vertex with the fewest usable classes (highest
    /// saturation), ties broken by uncoloured degree, then by label.
    fn pick(&self, uncoloured: u64) -> usize {
        let mut best = (usize::MAX, 0usize, 0usize);
        for v in Bits(uncoloured) {
            let free = self.classes.iter().filter(|&&c| self.fits(c, v)).count();
            let deg = (self.g.neighbors(v) & uncoloured).count_ones() as usize;
            if free < best.0 || (free == best.0 && deg > best.1) {
                best = (free, deg, v);
            }
        }
        best.2
    }

    /// Returns true once the lower bound has been met.
    fn run(&mut self, uncoloured: u64) -> bool {
        if uncoloured == 0 {
            if self.classes.len() < self.best {
                self.best = self.classes.len();
                self.best_classes = self.classes.clone();
            }
            return self.best <= self.lower;
        }
        let v = self.pick(uncoloured);
        let rest = uncoloured & !bit(v);
        for i in 0..self.classes.len() {
            let c = self.classes[i];
            if self.fits(c, v) {
                self.classes[i] |= bit(v);
                let done = self.run(rest);
                self.classes[i] = c;
                if done {
                    return true;
                }
            }
        }
        if self.classes.len() + 1 < self.best {
            self.classes.push(bit(v));
            let done = self.run(rest);
            self.classes.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// Minimum number of classes in a proper colouring of `g` whose classes
/// have at most `cap` vertices (`None` = unbounded), with a witness.
pub fn min_coloring(g: &Graph, cap: Option<usize>) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring::discrete(0));
    }
    let cap = cap.unwrap_or(n).max(1);
    let lower = clique_number(g).max(n.div_ceil(cap));
    // the discrete partition is always feasible
    let mut search = Search {
        g,
        cap,
        lower,
        best: n + 1,
        best_classes: (0..n).map(bit).collect(),
        classes: Vec::with_capacity(n),
    };
    search.run(g.vertex_mask());
    let best = search.best.min(n);
    (
        best,
        Coloring::from_classes_unchecked(n, search.best_classes),
    )
}

/// χ(G); zero for the null graph.
pub fn chromatic_number(g: &Graph) -> usize {
    min_coloring(g, None).0
}

pub fn optimal_coloring(g: &Graph) -> Coloring {
    min_coloring(g, None).1
}
