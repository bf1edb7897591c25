//! Graphs far above the ω/Δ/χ bound carry many lonely edges; these
//! verifiers check the corresponding claims over every optimal (or optimal
//! r-bounded) colouring. All hypothesis arithmetic is done on doubled
//! integers, with the slack `t` passed as `t2 = 2t`.

use serde::{Deserialize, Serialize};

use super::digraph::lonely_digraph_unchecked;
use crate::coloring::{
    bounded_stats, chromatic_number, for_each_optimal_bounded_coloring, for_each_optimal_coloring,
    Coloring, Guards,
};
use crate::graph::{bit, clique_number, Bits, Graph};
use crate::{Error, Result};

const KEPT_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepleteViolation {
    pub coloring: Coloring,
    /// The class in which no vertex has enough lonely out-edges (classic),
    /// or the singleton class whose vertex falls short (r-bounded).
    pub class: Vec<usize>,
    pub best_out_degree: usize,
    pub needed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepleteReport {
    pub r: Option<usize>,
    pub t2: u32,
    /// Hypothesis as doubled integers: `lhs2 > rhs2`.
    pub lhs2: i64,
    pub rhs2: i64,
    pub hypothesis: bool,
    pub colorings: usize,
    pub classes_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<RepleteViolation>,
}

impl RepleteReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    fn push(&mut self, v: RepleteViolation) {
        self.violation_count += 1;
        if self.violations.len() < KEPT_WITNESSES {
            self.violations.push(v);
        }
    }
}

/// Classic (`r = None`): if 2χ > ω + Δ + 1 + 2t then in every optimal
/// colouring every class holds a vertex with |L_C(v)| ≥ ω + 2t.
///
/// r-bounded (`r = Some(r)`): if 2(χ_r − M_r) > ω + Δ + 1 + 2t then in
/// every optimal r-bounded colouring each singleton vertex has
/// |L_C(v)| ≥ ω + 2t.
///
/// A false hypothesis yields a report with `hypothesis == false` and
/// nothing checked.
pub fn verify_replete_lemma(
    g: &Graph,
    r: Option<usize>,
    t2: u32,
    guards: &Guards,
) -> Result<RepleteReport> {
    let omega = clique_number(g) as i64;
    let delta = g.max_degree() as i64;
    let needed = (omega + i64::from(t2)) as usize;
    let rhs2 = omega + delta + 1 + i64::from(t2);
    let mut report = RepleteReport {
        r,
        t2,
        rhs2,
        ..Default::default()
    };

    match r {
        None => {
            report.lhs2 = 2 * chromatic_number(g) as i64;
            report.hypothesis = report.lhs2 > rhs2;
            if !report.hypothesis {
                return Ok(report);
            }
            for_each_optimal_coloring(g, guards, &mut |c| {
                report.colorings += 1;
                let d = lonely_digraph_unchecked(g, &c);
                for &class in c.classes() {
                    report.classes_checked += 1;
                    let best = Bits(class).map(|v| d.out_degree(v)).max().unwrap_or(0);
                    if best < needed {
                        report.push(RepleteViolation {
                            coloring: c.clone(),
                            class: Bits(class).collect(),
                            best_out_degree: best,
                            needed,
                        });
                    }
                }
                true
            })?;
        }
        Some(r) => {
            let s = bounded_stats(g, r, guards)?;
            report.lhs2 = 2 * (s.chi_r as i64 - s.m_r as i64);
            report.hypothesis = report.lhs2 > rhs2;
            if !report.hypothesis {
                return Ok(report);
            }
            for_each_optimal_bounded_coloring(g, r, guards, &mut |c| {
                report.colorings += 1;
                let d = lonely_digraph_unchecked(g, &c);
                for v in Bits(c.singleton_mask()) {
                    report.classes_checked += 1;
                    if d.out_degree(v) < needed {
                        report.push(RepleteViolation {
                            coloring: c.clone(),
                            class: vec![v],
                            best_out_degree: d.out_degree(v),
                            needed,
                        });
                    }
                }
                true
            })?;
        }
    }
    Ok(report)
}

/// Index of a class in which no vertex meets every other class, if any.
pub fn check_touches_everybody(g: &Graph, c: &Coloring) -> Option<usize> {
    let classes = c.classes();
    (0..classes.len()).find(|&j| {
        !Bits(classes[j]).any(|v| {
            let nb = g.neighbors(v);
            classes
                .iter()
                .enumerate()
                .all(|(k, &other)| k == j || nb & other != 0)
        })
    })
}

/// A singleton vertex and a class of size < `r` it does not meet, if any.
pub fn check_singletons_touch_small_classes(
    g: &Graph,
    c: &Coloring,
    r: usize,
) -> Option<(usize, Vec<usize>)> {
    for v in Bits(c.singleton_mask()) {
        let nb = g.neighbors(v);
        for &class in c.classes() {
            if class != bit(v) && (class.count_ones() as usize) < r && nb & class == 0 {
                return Some((v, Bits(class).collect()));
            }
        }
    }
    None
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TouchReport {
    pub colorings: usize,
    pub violation_count: usize,
    pub violations: Vec<(Coloring, Vec<usize>)>,
}

impl TouchReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }
}

/// Every optimal colouring has, in each class, a vertex meeting all other
/// classes.
pub fn verify_touches_everybody_lemma(g: &Graph, guards: &Guards) -> Result<TouchReport> {
    let mut report = TouchReport::default();
    for_each_optimal_coloring(g, guards, &mut |c| {
        report.colorings += 1;
        if let Some(j) = check_touches_everybody(g, &c) {
            report.violation_count += 1;
            if report.violations.len() < KEPT_WITNESSES {
                let class = Bits(c.classes()[j]).collect();
                report.violations.push((c, class));
            }
        }
        true
    })?;
    Ok(report)
}

/// In every optimal r-bounded colouring, each singleton vertex meets every
/// other class of size below `r`.
pub fn verify_singletons_touch_lemma(g: &Graph, r: usize, guards: &Guards) -> Result<TouchReport> {
    if r == 0 {
        return Err(Error::InvalidParam("r must be at least 1".into()));
    }
    let mut report = TouchReport::default();
    for_each_optimal_bounded_coloring(g, r, guards, &mut |c| {
        report.colorings += 1;
        if let Some((v, class)) = check_singletons_touch_small_classes(g, &c, r) {
            report.violation_count += 1;
            if report.violations.len() < KEPT_WITNESSES {
                let mut witness = vec![v];
                witness.extend(class);
                report.violations.push((c, witness));
            }
        }
        true
    })?;
    Ok(report)
}
