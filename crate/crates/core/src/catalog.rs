//! Graph corpora: every graph on `n` vertices up to isomorphism (small `n`),
//! and seeded Erdős–Rényi samples.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bit, generate, Family, Graph};
use crate::par::par_map;
use crate::{Error, Result};

/// Largest `n` for which [`graphs_on`] will run; 2^21 edge masks at n = 7.
pub const CATALOG_MAX_N: usize = 7;

/// Densities used for random samples unless configured otherwise.
pub const DEFAULT_DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn from_mask(n: usize, mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> b & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            b += 1;
        }
    }
    adj
}

fn mask_under(adj: &[u64], order: &[usize]) -> u64 {
    let mut mask = 0u64;
    let mut b = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if adj[order[i]] & bit(order[j]) != 0 {
                mask |= 1 << b;
            }
            b += 1;
        }
    }
    mask
}

/// Smallest edge mask over all relabellings that list vertices by
/// nondecreasing degree. Two graphs are isomorphic iff their keys match.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    canonical_key_adj(&adj)
}

fn canonical_key_adj(adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].count_ones(), v));
    // cells of equal degree, permuted independently
    let mut cells = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || adj[order[i]].count_ones() != adj[order[start]].count_ones() {
            cells.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_cells(adj, &mut order, &cells, 0, &mut best);
    best
}

fn permute_cells(
    adj: &[u64],
    order: &mut [usize],
    cells: &[(usize, usize)],
    cell: usize,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).min(mask_under(adj, order));
        return;
    }
    let (lo, hi) = cells[cell];
    heap_permute(adj, order, cells, cell, lo, hi - lo, best);
}

fn heap_permute(
    adj: &[u64],
    order: &mut [usize],
    cells: &[(usize, usize)],
    cell: usize,
    lo: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_cells(adj, order, cells, cell + 1, best);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(adj, order, cells, cell, lo, k - 1, best);
        let j = if k.is_multiple_of(2) { lo + i } else { lo };
        order.swap(j, lo + k - 1);
    }
    heap_permute(adj, order, cells, cell, lo, k - 1, best);
}

/// One representative per isomorphism class on exactly `n` vertices, in
/// increasing order of canonical key. Each representative is the canonical
/// labelling itself.
pub fn graphs_on(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_MAX_N {
        return Err(Error::GuardExceeded {
            what: "isomorphism-class enumeration",
            n,
            limit: CATALOG_MAX_N,
        });
    }
    let total = 1u64 << pair_count(n);
    const CHUNK: u64 = 1 << 12;
    let starts: Vec<u64> = (0..total).step_by(CHUNK as usize).collect();
    let keys = par_map(&starts, |&s| {
        (s..(s + CHUNK).min(total))
            .map(|m| canonical_key_adj(&from_mask(n, m)))
            .collect::<BTreeSet<_>>()
    });
    let keys: BTreeSet<u64> = keys.into_iter().flatten().collect();
    keys.into_iter()
        .map(|k| Graph::from_adjacency(from_mask(n, k)))
        .collect()
}

/// Every graph with `n` in the range, up to isomorphism, grouped by `n`.
pub fn graphs_up_to_iso(ns: RangeInclusive<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in ns {
        out.extend(graphs_on(n)?);
    }
    Ok(out)
}

/// A reproducible random graph: `family` regenerates `graph` exactly.
#[derive(Clone, Debug)]
pub struct Sample {
    pub family: Family,
    pub graph: Graph,
}

/// `count` Erdős–Rényi graphs. Sizes are drawn uniformly from `ns`,
/// densities cycle through `densities`, and each graph gets its own seed
/// drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_samples(
    ns: RangeInclusive<usize>,
    count: usize,
    densities: &[f64],
    seed: u64,
) -> Result<Vec<Sample>> {
    if ns.is_empty() {
        return Err(Error::InvalidParam("empty size range".into()));
    }
    if densities.is_empty() {
        return Err(Error::InvalidParam("no densities given".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(ns.clone());
            let family = Family::ErRandom {
                n,
                p: densities[i % densities.len()],
                seed: rng.gen(),
            };
            let graph = generate(&family)?;
            Ok(Sample { family, graph })
        })
        .collect()
}
