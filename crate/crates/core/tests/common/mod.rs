//! Brute-force oracles. Nothing here calls the solvers under test; graphs
//! are read only through `n()` and `neighbors()`.

#![allow(dead_code)]

use stingy_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v)).collect()
}

fn is_clique(adj: &[u64], s: u64) -> bool {
    (0..adj.len())
        .filter(|&v| s >> v & 1 == 1)
        .all(|v| adj[v] & s == s & !(1 << v))
}

fn is_independent(adj: &[u64], s: u64) -> bool {
    (0..adj.len())
        .filter(|&v| s >> v & 1 == 1)
        .all(|v| adj[v] & s == 0)
}

pub fn clique_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u64..1 << adj.len())
        .filter(|&s| is_clique(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn independence_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u64..1 << adj.len())
        .filter(|&s| is_independent(&adj, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest set of pairwise disjoint edges, by include/exclude over the
/// edge list.
pub fn matching_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let mut edges = Vec::new();
    for u in 0..adj.len() {
        for v in u + 1..adj.len() {
            if adj[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    fn rec(edges: &[(usize, usize)], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = rec(rest, used);
                if used & (1 << u | 1 << v) == 0 {
                    skip.max(1 + rec(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    rec(&edges, 0)
}

pub fn max_degree(g: &Graph) -> usize {
    adjacency(g)
        .iter()
        .map(|a| a.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    adjacency(g)
        .iter()
        .map(|a| a.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Smallest `k` admitting a proper labelling in `{0..k}^n`.
pub fn chromatic_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            let mut labels = vec![0usize; n];
            loop {
                let proper =
                    (0..n).all(|v| (0..n).all(|u| adj[v] >> u & 1 == 0 || labels[u] != labels[v]));
                if proper {
                    return true;
                }
                // odometer
                let mut i = 0;
                while i < n && labels[i] == k - 1 {
                    labels[i] = 0;
                    i += 1;
                }
                if i == n {
                    return false;
                }
                labels[i] += 1;
            }
        })
        .expect("the discrete labelling is proper")
}

/// Every partition of the vertices into independent classes of size at
/// most `cap`, as lists of class bitmasks.
pub fn independent_partitions(g: &Graph, cap: usize) -> Vec<Vec<u64>> {
    let adj = adjacency(g);
    let mut out = Vec::new();
    fn rec(adj: &[u64], cap: usize, v: usize, classes: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if v == adj.len() {
            out.push(classes.clone());
            return;
        }
        for i in 0..classes.len() {
            if adj[v] & classes[i] == 0 && (classes[i].count_ones() as usize) < cap {
                classes[i] |= 1 << v;
                rec(adj, cap, v + 1, classes, out);
                classes[i] &= !(1 << v);
            }
        }
        if cap >= 1 {
            classes.push(1 << v);
            rec(adj, cap, v + 1, classes, out);
            classes.pop();
        }
    }
    rec(&adj, cap, 0, &mut Vec::new(), &mut out);
    out
}

fn singletons(p: &[u64]) -> usize {
    p.iter().filter(|c| c.count_ones() == 1).count()
}

/// (χ, ι) over all independent partitions.
pub fn chi_and_stinginess(g: &Graph) -> (usize, usize) {
    let parts = independent_partitions(g, usize::MAX);
    let chi = parts.iter().map(Vec::len).min().unwrap_or(0);
    let iota = parts
        .iter()
        .filter(|p| p.len() == chi)
        .map(|p| singletons(p))
        .max()
        .unwrap_or(0);
    (chi, iota)
}

/// (χ_r, M_r, ι_r) over all r-bounded independent partitions.
pub fn bounded(g: &Graph, r: usize) -> (usize, usize, usize) {
    let parts = independent_partitions(g, r);
    let chi = parts.iter().map(Vec::len).min().unwrap_or(0);
    let opt = parts.iter().filter(|p| p.len() == chi);
    let m = opt
        .clone()
        .map(|p| p.iter().filter(|c| c.count_ones() as usize == r).count())
        .max()
        .unwrap_or(0);
    let iota = opt.map(|p| singletons(p)).max().unwrap_or(0);
    (chi, m, iota)
}

/// Sorted class sizes.
pub fn frame_of(classes: &[u64]) -> Vec<u32> {
    let mut f: Vec<u32> = classes.iter().map(|c| c.count_ones()).collect();
    f.sort_unstable();
    f
}
