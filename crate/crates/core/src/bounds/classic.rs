use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{
    ceil_half, generalized::evaluate_generalized, sides, BoundsReport, ClaimRecord,
    VerificationParams,
};
use crate::coloring::{bounded_stinginess_by_clique_search, stats, ColoringStats, Guards};
use crate::graph::{invariants, matching_number, maximum_independent_sets, Bits, Graph};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInvariants {
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub max_deg: usize,
    pub min_deg: usize,
    pub nu: usize,
    pub chi: usize,
    pub iota: usize,
}

struct Ints {
    n: i64,
    w: i64,
    a: i64,
    dmax: i64,
    chi: i64,
    iota: i64,
}

impl From<&ReportInvariants> for Ints {
    fn from(i: &ReportInvariants) -> Self {
        Self {
            n: i.n as i64,
            w: i.omega as i64,
            a: i.alpha as i64,
            dmax: i.max_deg as i64,
            chi: i.chi as i64,
            iota: i.iota as i64,
        }
    }
}

pub const CLASSIC_CLAIMS: &[&str] = &[
    "very-stingy-reed",
    "reed-disjunct",
    "reed-disjunct-corollary",
    "stinginess-patching",
    "chi-stinginess-average",
    "reed-chi-above-half",
    "reed-alpha-at-most-two",
    "simple-bound",
    "simple-bound-half-order",
    "simple-bound-corollary",
];

pub const MATCHING_CLAIMS: &[&str] = &["matching-bound", "iota2-complement-matching"];

/// Invariants plus every claim about χ and ι.
pub fn evaluate_classic(
    g: &Graph,
    guards: &Guards,
) -> Result<(ReportInvariants, Vec<ClaimRecord>)> {
    let base = invariants(g);
    let st = stats(g, guards)?;
    let inv = ReportInvariants {
        n: g.n(),
        omega: base.omega,
        alpha: base.alpha,
        max_deg: base.max_deg,
        min_deg: base.min_deg,
        nu: base.nu,
        chi: st.chi,
        iota: st.iota,
    };
    let x = Ints::from(&inv);
    let reed2 = x.w + x.dmax + 1;
    let reed_ceil = ceil_half(reed2);
    let mut claims = Vec::new();

    claims.push(ClaimRecord::implication(
        "very-stingy-reed",
        2 * x.iota > x.w,
        2 * x.chi <= reed2,
        sides(2 * x.chi, reed2, 2),
    ));

    let b1 = 2 * x.chi <= reed2;
    let branch2 = x.w + 2 * x.n - 2 * x.a + 4;
    let b2 = 4 * x.chi <= branch2;
    claims.push(ClaimRecord::unconditional(
        "reed-disjunct",
        b1 || b2,
        json!({ "branch1": b1, "branch2": b2, "lhs4": 4 * x.chi, "rhs4_branch1": 2 * reed2, "rhs4_branch2": branch2 }),
    ));

    claims.push(ClaimRecord::implication(
        "reed-disjunct-corollary",
        2 * x.chi > reed2,
        2 * (x.n - x.dmax) >= 2 * x.a + x.w - 1,
        sides(2 * (x.n - x.dmax), 2 * x.a + x.w - 1, 2),
    ));

    claims.push(patching(g, &st, guards)?);

    claims.push(ClaimRecord::unconditional(
        "chi-stinginess-average",
        2 * x.chi <= x.iota + x.n,
        sides(2 * x.chi, x.iota + x.n, 2),
    ));

    claims.push(ClaimRecord::implication(
        "reed-chi-above-half",
        x.chi > ceil_half(x.n),
        2 * x.chi <= reed2,
        sides(2 * x.chi, reed2, 2),
    ));

    claims.push(ClaimRecord::implication(
        "reed-alpha-at-most-two",
        x.a <= 2,
        x.chi <= reed_ceil,
        sides(x.chi, reed_ceil, 1),
    ));

    claims.push(ClaimRecord::implication(
        "simple-bound",
        2 * x.chi > x.n + 3 - x.a,
        x.chi <= reed_ceil,
        json!({ "hyp_lhs2": 2 * x.chi, "hyp_rhs2": x.n + 3 - x.a, "lhs": x.chi, "rhs": reed_ceil }),
    ));

    claims.push(ClaimRecord::implication(
        "simple-bound-half-order",
        2 * x.chi > x.n,
        x.chi <= reed_ceil,
        sides(x.chi, reed_ceil, 1),
    ));

    claims.push(ClaimRecord::implication(
        "simple-bound-corollary",
        x.chi > reed_ceil,
        x.n - x.dmax >= x.a + x.w,
        sides(x.n - x.dmax, x.a + x.w, 1),
    ));

    Ok((inv, claims))
}

/// Stinginess is superadditive across `H` and `G ∖ H` whenever χ is
/// additive; checked for every maximum independent set `H`.
fn patching(g: &Graph, st: &ColoringStats, guards: &Guards) -> Result<ClaimRecord> {
    let mut instances = 0usize;
    let mut additive = 0usize;
    let mut failing: Option<serde_json::Value> = None;
    for h in maximum_independent_sets(g) {
        instances += 1;
        let rest = stats(&g.without(h), guards)?;
        let part = stats(&g.induced(h), guards)?;
        if st.chi != rest.chi + part.chi {
            continue;
        }
        additive += 1;
        if st.iota < rest.iota + part.iota && failing.is_none() {
            failing = Some(json!({
                "h": Bits(h).collect::<Vec<_>>(),
                "iota": st.iota,
                "iota_rest": rest.iota,
                "iota_h": part.iota,
            }));
        }
    }
    let concl = failing.is_none();
    let mut witness = json!({ "instances": instances, "additive_instances": additive });
    if let Some(f) = failing {
        witness["failing"] = f;
    }
    Ok(ClaimRecord::implication(
        "stinginess-patching",
        additive > 0,
        concl,
        witness,
    ))
}

/// `4ν ≥ n − α + δ`, and `ι_2(G) = n − 2ν(Ḡ)` with ι_2 computed by clique
/// search rather than through matchings.
pub fn verify_matching_corollary(g: &Graph) -> Vec<ClaimRecord> {
    let base = invariants(g);
    let n = g.n() as i64;
    let nu = base.nu as i64;
    let rhs = n - base.alpha as i64 + base.min_deg as i64;
    let bound = ClaimRecord::unconditional("matching-bound", 4 * nu >= rhs, sides(4 * nu, rhs, 4));

    let (iota2, _) = bounded_stinginess_by_clique_search(g, 2).expect("r = 2 is valid");
    let nu_bar = matching_number(&g.complement()) as i64;
    let identity = ClaimRecord::unconditional(
        "iota2-complement-matching",
        iota2 as i64 == n - 2 * nu_bar,
        json!({ "iota2": iota2, "nu_complement": nu_bar, "n": n }),
    );
    vec![bound, identity]
}

/// Classic claims, the matching corollary and the r-bounded claims for every
/// `r` in `params`.
pub fn evaluate_bounds(g: &Graph, params: &VerificationParams) -> Result<BoundsReport> {
    params.validate()?;
    let (inv, mut claims) = evaluate_classic(g, &params.guards)?;
    claims.extend(verify_matching_corollary(g));
    let bounded: Vec<_> = params
        .r
        .iter()
        .map(|&r| evaluate_generalized(g, r, &params.guards))
        .collect::<Result<_>>()?;
    let counterexamples = bounded
        .iter()
        .filter_map(|b| b.counterexample.clone())
        .collect();
    Ok(BoundsReport {
        g6: g.to_graph6(),
        inv,
        claims,
        bounded,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Verdict;
    use crate::graph::{generate, Family};

    fn verdicts(g: &Graph) -> Vec<(String, Verdict)> {
        let (_, claims) = evaluate_classic(g, &Guards::default()).unwrap();
        claims.into_iter().map(|c| (c.name, c.verdict)).collect()
    }

    fn verdict(g: &Graph, name: &str) -> Verdict {
        verdicts(g).into_iter().find(|(n, _)| n == name).unwrap().1
    }

    #[test]
    fn c5_claims() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let (inv, claims) = evaluate_classic(&c5, &Guards::default()).unwrap();
        assert_eq!(
            (inv.chi, inv.iota, inv.omega, inv.alpha, inv.max_deg),
            (3, 1, 2, 2, 2)
        );
        let get = |n: &str| claims.iter().find(|c| c.name == n).unwrap();
        let avg = get("chi-stinginess-average");
        assert_eq!(avg.verdict, Verdict::CheckedPass);
        assert_eq!(avg.witness, sides(6, 6, 2));
        let disj = get("reed-disjunct");
        assert_eq!(disj.witness["branch1"], false);
        assert_eq!(disj.witness["branch2"], true);
        assert_eq!(disj.verdict, Verdict::CheckedPass);
        assert_eq!(get("reed-disjunct-corollary").verdict, Verdict::CheckedPass);
        assert_eq!(claims.len(), CLASSIC_CLAIMS.len());
        assert!(claims.iter().zip(CLASSIC_CLAIMS).all(|(c, n)| c.name == *n));
    }

    #[test]
    fn k4_and_petersen() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(verdict(&k4, "very-stingy-reed"), Verdict::CheckedPass);
        let p = generate(&Family::Petersen).unwrap();
        assert_eq!(verdict(&p, "simple-bound"), Verdict::VacuousPass);
        assert!(verdicts(&p).iter().all(|(_, v)| *v != Verdict::Violation));
    }

    #[test]
    fn matching_examples() {
        for (f, nu) in [
            (Family::Cycle(5), 2),
            (Family::Complete(4), 2),
            (Family::Empty(4), 0),
        ] {
            let g = generate(&f).unwrap();
            let recs = verify_matching_corollary(&g);
            assert!(
                recs.iter().all(|r| r.verdict == Verdict::CheckedPass),
                "{f}"
            );
            assert_eq!(recs[0].witness["lhs"], 4 * nu);
        }
        let e4 = verify_matching_corollary(&Graph::empty(4).unwrap());
        assert_eq!(e4[0].witness, sides(0, 0, 4));
    }
}
