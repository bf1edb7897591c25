//! Pairs of vertex-disjoint lonely paths starting at two singleton classes,
//! and the check that such paths are completely joined.

use serde::{Deserialize, Serialize};

use super::digraph::{lonely_digraph, LonelyDigraph};
use crate::coloring::{
    enumerate_optimal_colorings, is_frame_property, is_singleton_friendly, p_optimal_colorings,
    Coloring, ColoringProperty, Guards,
};
use crate::graph::{bit, Bits, Graph};
use crate::{Error, Result};

/// Default bound on the number of vertices in each path.
pub const DEFAULT_MAX_LEN: usize = 3;

/// Witnesses kept per report; the counts are always complete.
const KEPT_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonelyPathPair {
    pub pa: Vec<usize>,
    pub pb: Vec<usize>,
}

/// Every simple lonely path from `start` with at most `max_len` vertices
/// and at most one vertex per class, in depth-first order.
fn paths_from(
    d: &LonelyDigraph,
    labels: &[usize],
    start: usize,
    max_len: usize,
) -> Vec<(Vec<usize>, u64)> {
    fn rec(
        d: &LonelyDigraph,
        labels: &[usize],
        path: &mut Vec<usize>,
        used: u64,
        used_classes: u64,
        max_len: usize,
        out: &mut Vec<(Vec<usize>, u64)>,
    ) {
        out.push((path.clone(), used));
        if path.len() == max_len {
            return;
        }
        let last = *path.last().expect("paths are nonempty");
        for w in Bits(d.out(last) & !used) {
            if used_classes & bit(labels[w]) != 0 {
                continue;
            }
            path.push(w);
            rec(
                d,
                labels,
                path,
                used | bit(w),
                used_classes | bit(labels[w]),
                max_len,
                out,
            );
            path.pop();
        }
    }
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    let mut path = vec![start];
    rec(
        d,
        labels,
        &mut path,
        bit(start),
        bit(labels[start]),
        max_len,
        &mut out,
    );
    out
}

/// Receives `(pa, mask of pa, pb, mask of pb)`.
type PairVisitor<'a> = dyn FnMut(&[usize], u64, &[usize], u64) + 'a;

fn for_each_pair(
    g: &Graph,
    c: &Coloring,
    max_len: usize,
    f: &mut PairVisitor<'_>,
) {
    let d = super::digraph::lonely_digraph_unchecked(g, c);
    let labels = c.labels();
    let singles: Vec<usize> = Bits(c.singleton_mask()).collect();
    let from: Vec<_> = singles
        .iter()
        .map(|&s| paths_from(&d, &labels, s, max_len))
        .collect();
    for i in 0..singles.len() {
        for j in i + 1..singles.len() {
            for (pa, ma) in &from[i] {
                for (pb, mb) in &from[j] {
                    if ma & mb == 0 {
                        f(pa, *ma, pb, *mb);
                    }
                }
            }
        }
    }
}

/// All pairs `(pa, pb)` of vertex-disjoint lonely paths from distinct
/// singleton classes, `pa` starting at the smaller singleton vertex.
pub fn enumerate_lonely_path_pairs(
    g: &Graph,
    c: &Coloring,
    max_len: usize,
) -> Result<Vec<LonelyPathPair>> {
    lonely_digraph(g, c)?;
    let mut out = Vec::new();
    for_each_pair(g, c, max_len, &mut |pa, _, pb, _| {
        out.push(LonelyPathPair {
            pa: pa.to_vec(),
            pb: pb.to_vec(),
        });
    });
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum LonelyPathMode {
    /// Optimal colourings.
    Classic,
    /// P-optimal colourings of a singleton-friendly frame property.
    Property(ColoringProperty),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonelyPathViolation {
    pub coloring: Coloring,
    pub pair: LonelyPathPair,
    /// A vertex of `pa` and a vertex of `pb` that are not adjacent.
    pub missing: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonelyPathReport {
    pub colorings: usize,
    pub pairs: usize,
    pub violation_count: usize,
    pub violations: Vec<LonelyPathViolation>,
}

impl LonelyPathReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    pub fn merge(&mut self, other: LonelyPathReport) {
        self.colorings += other.colorings;
        self.pairs += other.pairs;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEPT_WITNESSES {
                self.violations.push(v);
            }
        }
    }
}

/// Checks complete joining for every path pair under each given colouring.
pub fn verify_lonely_path_lemma_on(
    g: &Graph,
    colorings: &[Coloring],
    max_len: usize,
) -> Result<LonelyPathReport> {
    let mut report = LonelyPathReport::default();
    for c in colorings {
        lonely_digraph(g, c)?;
        report.colorings += 1;
        for_each_pair(g, c, max_len, &mut |pa, _, pb, mb| {
            report.pairs += 1;
            let missing = pa
                .iter()
                .find_map(|&x| Bits(mb & !g.neighbors(x)).next().map(|y| (x, y)));
            if let Some(missing) = missing {
                report.violation_count += 1;
                if report.violations.len() < KEPT_WITNESSES {
                    report.violations.push(LonelyPathViolation {
                        coloring: c.clone(),
                        pair: LonelyPathPair {
                            pa: pa.to_vec(),
                            pb: pb.to_vec(),
                        },
                        missing,
                    });
                }
            }
        });
    }
    Ok(report)
}

/// Classic mode iterates all optimal colourings; property mode first
/// checks that the property is a singleton-friendly frame property on `g`
/// and refuses otherwise, then iterates its P-optimal colourings.
pub fn verify_lonely_path_lemma(
    g: &Graph,
    mode: &LonelyPathMode,
    max_len: usize,
    guards: &Guards,
) -> Result<LonelyPathReport> {
    let colorings = match mode {
        LonelyPathMode::Classic => enumerate_optimal_colorings(g, guards)?,
        LonelyPathMode::Property(p) => {
            if !is_frame_property(g, p, guards)? || !is_singleton_friendly(g, p, guards)? {
                return Err(Error::PropertyRefused(p.name().to_string()));
            }
            p_optimal_colorings(g, p, guards)?
        }
    };
    verify_lonely_path_lemma_on(g, &colorings, max_len)
}
