use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{ceil_half, sides, ClaimRecord};
use crate::coloring::{bounded_stats, BoundedStats, Coloring, Guards};
use crate::graph::{bit, clique_number, parse_graph6, Bits, Graph};
use crate::{Error, Result};

pub const GENERALIZED_CLAIMS: &[&str] = &[
    "r1-sanity",
    "generalized-very-stingy",
    "generalized-patching",
    "generalized-chi-stinginess-average",
    "generalized-reed",
    "generalized-disjunct",
    "generalized-disjunct-corollary",
    "iota2-bound",
    "chi2-m2-identity",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralizedReport {
    pub r: usize,
    pub chi_r: Option<usize>,
    pub m_r: Option<usize>,
    pub iota_r: Option<usize>,
    pub claims: Vec<ClaimRecord>,
    pub counterexample: Option<Counterexample>,
}

/// A graph on which `χ_r − M_r` exceeds `⌈(ω + Δ + 1)/2⌉`, with enough
/// data to re-check it from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub g6: String,
    pub r: usize,
    pub omega: usize,
    pub max_deg: usize,
    pub chi_r: usize,
    pub m_r: usize,
    /// An optimal r-bounded colouring with `m_r` classes of size `r`.
    pub m_r_witness: Coloring,
    /// An optimal r-bounded colouring with ι_r singletons.
    pub iota_r_witness: Coloring,
}

/// Largest graph [`Counterexample::reverify`] will brute-force.
pub const REVERIFY_MAX_N: usize = 12;

impl Counterexample {
    /// Recomputes every quantity by plain exhaustive search (restricted
    /// growth strings for colourings, subsets for cliques), sharing no code
    /// with the primary solvers, and confirms the inequality fails.
    pub fn reverify(&self) -> Result<bool> {
        let g = parse_graph6(&self.g6)?;
        let n = g.n();
        if n > REVERIFY_MAX_N {
            return Err(Error::GuardExceeded {
                what: "counterexample re-verification",
                n,
                limit: REVERIFY_MAX_N,
            });
        }
        let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
        let omega = (0u64..1 << n)
            .filter(|&s| Bits(s).all(|v| adj[v] & s == s & !bit(v)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let max_deg = adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .max()
            .unwrap_or(0);

        let (chi_r, m_r) = brute_bounded(&adj, self.r);
        let witness_ok = |c: &Coloring| {
            c.n() == n
                && c.is_proper(&g).unwrap_or(false)
                && c.max_class_size() <= self.r
                && c.len() == chi_r
        };
        let lhs = chi_r as i64 - m_r as i64;
        let bound = ceil_half((omega + max_deg + 1) as i64);
        Ok(omega == self.omega
            && max_deg == self.max_deg
            && chi_r == self.chi_r
            && m_r == self.m_r
            && witness_ok(&self.m_r_witness)
            && self.m_r_witness.count_of_size(self.r) == m_r
            && witness_ok(&self.iota_r_witness)
            && lhs > bound)
    }
}

/// (χ_r, M_r) by walking every restricted growth string.
fn brute_bounded(adj: &[u64], r: usize) -> (usize, usize) {
    fn rec(adj: &[u64], r: usize, v: usize, classes: &mut Vec<u64>, best: &mut (usize, usize)) {
        if classes.len() > best.0 {
            return;
        }
        if v == adj.len() {
            let m = classes
                .iter()
                .filter(|c| c.count_ones() as usize == r)
                .count();
            if classes.len() < best.0 {
                *best = (classes.len(), m);
            } else {
                best.1 = best.1.max(m);
            }
            return;
        }
        for i in 0..classes.len() {
            if adj[v] & classes[i] == 0 && (classes[i].count_ones() as usize) < r {
                classes[i] |= bit(v);
                rec(adj, r, v + 1, classes, best);
                classes[i] &= !bit(v);
            }
        }
        classes.push(bit(v));
        rec(adj, r, v + 1, classes, best);
        classes.pop();
    }
    let mut best = (adj.len(), 0);
    if adj.is_empty() {
        return (0, 0);
    }
    // the discrete colouring is always feasible
    best.1 = if r == 1 { adj.len() } else { 0 };
    rec(adj, r, 0, &mut Vec::new(), &mut best);
    best
}

fn named(base: &str, r: usize) -> String {
    format!("{base}[r={r}]")
}

fn applicable(r: usize) -> impl Iterator<Item = &'static str> {
    GENERALIZED_CLAIMS
        .iter()
        .copied()
        .filter(move |&c| match c {
            "r1-sanity" => r == 1,
            "iota2-bound" | "chi2-m2-identity" => r == 2,
            _ => true,
        })
}

/// Every r-bounded claim on `g`. Exceeding an enumeration guard marks the
/// claims not-evaluated; only `r = 0` is an error.
pub fn evaluate_generalized(g: &Graph, r: usize, guards: &Guards) -> Result<GeneralizedReport> {
    if r == 0 {
        return Err(Error::InvalidParam(
            "class-size cap r must be at least 1".into(),
        ));
    }
    let s = match bounded_stats(g, r, guards) {
        Ok(s) => s,
        Err(e @ Error::GuardExceeded { .. }) => {
            return Ok(GeneralizedReport {
                r,
                chi_r: None,
                m_r: None,
                iota_r: None,
                claims: applicable(r)
                    .map(|c| ClaimRecord::not_evaluated(named(c, r), &e))
                    .collect(),
                counterexample: None,
            })
        }
        Err(e) => return Err(e),
    };
    let n = g.n() as i64;
    let w = clique_number(g) as i64;
    let dmax = g.max_degree() as i64;
    let (chi_r, m_r, iota_r) = (s.chi_r as i64, s.m_r as i64, s.iota_r as i64);
    let lhs = chi_r - m_r;
    let reed2 = w + dmax + 1;
    let reed_ceil = ceil_half(reed2);
    let ri = r as i64;

    let mut claims = Vec::new();
    for c in applicable(r) {
        let name = named(c, r);
        let rec = match c {
            "r1-sanity" => ClaimRecord::unconditional(
                name,
                chi_r == n && m_r == n,
                json!({ "chi_r": chi_r, "m_r": m_r, "n": n }),
            ),
            "generalized-very-stingy" => ClaimRecord::implication(
                name,
                2 * iota_r > w,
                2 * lhs <= reed2,
                sides(2 * lhs, reed2, 2),
            ),
            "generalized-patching" => patching(g, r, &s, guards, name)?,
            "generalized-chi-stinginess-average" => ClaimRecord::unconditional(
                name,
                2 * chi_r <= iota_r + n,
                sides(2 * chi_r, iota_r + n, 2),
            ),
            "generalized-reed" => {
                ClaimRecord::unconditional(name, lhs <= reed_ceil, sides(lhs, reed_ceil, 1))
            }
            "generalized-disjunct" => {
                let b1 = 2 * lhs <= reed2;
                let branch2 = w + 2 * n - 4 * ri * m_r;
                let b2 = 4 * lhs <= branch2;
                ClaimRecord::unconditional(
                    name,
                    b1 || b2,
                    json!({ "branch1": b1, "branch2": b2, "lhs4": 4 * lhs, "rhs4_branch1": 2 * reed2, "rhs4_branch2": branch2 }),
                )
            }
            "generalized-disjunct-corollary" => ClaimRecord::implication(
                name,
                2 * lhs > reed2,
                2 * (n - dmax) >= 2 * ri * m_r + w + 3,
                sides(2 * (n - dmax), 2 * ri * m_r + w + 3, 2),
            ),
            "iota2-bound" => {
                ClaimRecord::unconditional(name, 2 * iota_r <= reed2, sides(2 * iota_r, reed2, 2))
            }
            "chi2-m2-identity" => ClaimRecord::unconditional(
                name,
                lhs == iota_r,
                json!({ "chi_r": chi_r, "m_r": m_r, "iota_r": iota_r }),
            ),
            _ => unreachable!("claim list is closed"),
        };
        claims.push(rec);
    }

    let counterexample = (lhs > reed_ceil).then(|| Counterexample {
        g6: g.to_graph6(),
        r,
        omega: w as usize,
        max_deg: dmax as usize,
        chi_r: s.chi_r,
        m_r: s.m_r,
        m_r_witness: s.m_r_witness.clone(),
        iota_r_witness: s.iota_r_witness.clone(),
    });
    Ok(GeneralizedReport {
        r,
        chi_r: Some(s.chi_r),
        m_r: Some(s.m_r),
        iota_r: Some(s.iota_r),
        claims,
        counterexample,
    })
}

/// `H` is the union of the size-`r` classes of an M_r witness. When χ_r is
/// additive across `H` and `G ∖ H`, ι_r must be superadditive.
fn patching(
    g: &Graph,
    r: usize,
    s: &BoundedStats,
    guards: &Guards,
    name: String,
) -> Result<ClaimRecord> {
    let h = s
        .m_r_witness
        .classes()
        .iter()
        .filter(|c| c.count_ones() as usize == r)
        .fold(0u64, |a, &c| a | c);
    let rest = bounded_stats(&g.without(h), r, guards)?;
    let part = bounded_stats(&g.induced(h), r, guards)?;
    let hyp = h != 0 && s.chi_r == rest.chi_r + part.chi_r;
    let concl = s.iota_r >= rest.iota_r + part.iota_r;
    Ok(ClaimRecord::implication(
        name,
        hyp,
        concl,
        json!({
            "h": Bits(h).collect::<Vec<_>>(),
            "chi_r_rest": rest.chi_r,
            "chi_r_h": part.chi_r,
            "iota_r": s.iota_r,
            "iota_r_rest": rest.iota_r,
            "iota_r_h": part.iota_r,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Verdict;
    use crate::graph::{generate, Family};

    fn report(f: Family, r: usize) -> GeneralizedReport {
        evaluate_generalized(&generate(&f).unwrap(), r, &Guards::default()).unwrap()
    }

    fn claim<'a>(rep: &'a GeneralizedReport, base: &str) -> &'a ClaimRecord {
        rep.claims.iter().find(|c| c.base_name() == base).unwrap()
    }

    #[test]
    fn c5_r2() {
        let rep = report(Family::Cycle(5), 2);
        assert_eq!(
            (rep.chi_r, rep.m_r, rep.iota_r),
            (Some(3), Some(2), Some(1))
        );
        assert_eq!(claim(&rep, "iota2-bound").witness, sides(2, 5, 2));
        assert_eq!(claim(&rep, "generalized-reed").witness, sides(1, 3, 1));
        assert_eq!(
            claim(&rep, "generalized-reed").name,
            "generalized-reed[r=2]"
        );
        assert!(rep.claims.iter().all(|c| c.verdict != Verdict::Violation));
        assert!(rep.counterexample.is_none());
    }

    #[test]
    fn c6_r3_and_r1() {
        let rep = report(Family::Cycle(6), 3);
        assert_eq!(claim(&rep, "generalized-reed").witness, sides(0, 3, 1));
        let r1 = report(Family::Petersen, 1);
        assert_eq!(claim(&r1, "r1-sanity").verdict, Verdict::CheckedPass);
        assert_eq!(claim(&r1, "generalized-reed").witness["lhs"], 0);
    }

    #[test]
    fn guard_gives_not_evaluated() {
        let g = generate(&Family::Cycle(12)).unwrap();
        let rep = evaluate_generalized(&g, 3, &Guards::default()).unwrap();
        assert!(rep
            .claims
            .iter()
            .all(|c| c.verdict == Verdict::NotEvaluated && c.concl.is_none()));
        assert!(evaluate_generalized(&g, 0, &Guards::default()).is_err());
    }

    #[test]
    fn brute_force_matches_solver() {
        for f in [
            Family::Cycle(5),
            Family::Cycle(6),
            Family::Petersen,
            Family::Complete(4),
            Family::Path(5),
        ] {
            let g = generate(&f).unwrap();
            let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v)).collect();
            for r in 1..5 {
                let s = bounded_stats(&g, r, &Guards::default()).unwrap();
                assert_eq!(brute_bounded(&adj, r), (s.chi_r, s.m_r), "{f} r={r}");
            }
        }
    }

    #[test]
    fn fabricated_counterexample_does_not_reverify() {
        let g = generate(&Family::Cycle(5)).unwrap();
        let s = bounded_stats(&g, 3, &Guards::default()).unwrap();
        let fake = Counterexample {
            g6: g.to_graph6(),
            r: 3,
            omega: 2,
            max_deg: 2,
            chi_r: s.chi_r,
            m_r: s.m_r,
            m_r_witness: s.m_r_witness,
            iota_r_witness: s.iota_r_witness,
        };
        // every field is right, but the inequality holds on C5
        assert!(!fake.reverify().unwrap());
    }
}
