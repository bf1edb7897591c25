//! Corpus-level drivers behind the `stingy` binary: single-graph analysis,
//! sweeps, counterexample searches and the named verification suites.
//!
//! Per-graph work goes through [`par_map`], which keeps input order, so
//! every output is identical with or without the `parallel` feature.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{
    base_name, claim_names, evaluate_bounds, evaluate_classic, evaluate_generalized,
    is_bounded_claim, verify_matching_corollary, BoundsReport, ClaimRecord, Counterexample,
    Verdict, VerificationParams,
};
use crate::catalog::{graphs_up_to_iso, random_samples, DEFAULT_DENSITIES};
use crate::coloring::{
    b_r, check_frame3_sufficiency, frame_property_break, proper_colorings, singleton_friendly_break,
};
use crate::graph::{parse_graph6, Graph};
use crate::lonely::{
    doubly_critical_edges, lonely_digraph, swap, verify_lonely_path_lemma, verify_replete_lemma,
    verify_singletons_touch_lemma, verify_touches_everybody_lemma, DoublyCritical, LonelyPathMode,
};
use crate::par::{par_map, seq_map};
use crate::{Error, Result};

/// Largest `n` searched exhaustively; larger sizes are sampled.
pub const EXHAUSTIVE_MAX_N: usize = 6;

/// Violation witnesses kept per suite report.
const KEPT_WITNESSES: usize = 16;

/// One graph fully analysed: every bound plus lonely-edge summaries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    #[serde(flatten)]
    pub report: BoundsReport,
    pub lonely: Value,
}

impl Analysis {
    pub fn has_violation(&self) -> bool {
        self.report.has_violation() || self.lonely["violations"].as_u64().unwrap_or(0) > 0
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialise")
}

/// Guard errors become an explanatory entry instead of aborting the
/// analysis.
fn or_guard<T: Serialize>(
    r: Result<T>,
    violations: &mut u64,
    bad: impl Fn(&T) -> u64,
) -> Result<Value> {
    match r {
        Ok(x) => {
            *violations += bad(&x);
            Ok(to_value(&x))
        }
        Err(e @ Error::GuardExceeded { .. }) => Ok(json!({ "not_evaluated": e.to_string() })),
        Err(e) => Err(e),
    }
}

pub fn analyze(g: &Graph, params: &VerificationParams) -> Result<Analysis> {
    let report = evaluate_bounds(g, params)?;
    let guards = &params.guards;
    let mut violations = 0u64;

    let mut replete = Vec::new();
    for &t in &params.t {
        for r in std::iter::once(None).chain(params.r.iter().copied().map(Some)) {
            let rep = verify_replete_lemma(g, r, t.doubled(), guards);
            replete.push(or_guard(rep, &mut violations, |x| {
                x.violation_count as u64
            })?);
        }
    }
    let lonely_paths = or_guard(
        verify_lonely_path_lemma(g, &LonelyPathMode::Classic, params.max_len, guards),
        &mut violations,
        |x| x.violation_count as u64,
    )?;
    let touches = or_guard(
        verify_touches_everybody_lemma(g, guards),
        &mut violations,
        |x| x.violation_count as u64,
    )?;
    let critical = doubly_critical_edges(g);
    violations += u64::from(!critical.equivalence_holds);

    let lonely = json!({
        "lonely_paths": lonely_paths,
        "replete": replete,
        "touches_everybody": touches,
        "doubly_critical": to_value(&critical),
        "violations": violations,
    });
    Ok(Analysis { report, lonely })
}

/// Graph6 lines parsed from a corpus, with failures kept by 1-based line
/// number. Blank lines and a bare `>>graph6<<` header line are skipped.
#[derive(Debug, Default)]
pub struct Corpus {
    pub graphs: Vec<(usize, Graph)>,
    pub errors: Vec<(usize, Error)>,
}

pub fn parse_corpus(text: &str) -> Corpus {
    let mut corpus = Corpus::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => corpus.graphs.push((i + 1, g)),
            Err(e) => corpus.errors.push((i + 1, e)),
        }
    }
    corpus
}

/// Every graph with `min_n ≤ n ≤ max_n` up to isomorphism.
pub fn exhaustive_corpus(min_n: usize, max_n: usize) -> Result<Vec<Graph>> {
    graphs_up_to_iso(min_n..=max_n)
}

/// Exhaustive up to [`EXHAUSTIVE_MAX_N`], then `samples` seeded random
/// graphs spread over the remaining sizes.
pub fn search_corpus(
    min_n: usize,
    max_n: usize,
    samples: usize,
    densities: &[f64],
    seed: u64,
) -> Result<Vec<Graph>> {
    let mut out = exhaustive_corpus(min_n, max_n.min(EXHAUSTIVE_MAX_N))?;
    let lo = min_n.max(EXHAUSTIVE_MAX_N + 1);
    if lo <= max_n {
        out.extend(
            random_samples(lo..=max_n, samples, densities, seed)?
                .into_iter()
                .map(|s| s.graph),
        );
    }
    Ok(out)
}

/// Default density list as a vector.
pub fn default_densities() -> Vec<f64> {
    DEFAULT_DENSITIES.to_vec()
}

pub fn sweep(graphs: &[Graph], params: &VerificationParams) -> Result<Vec<BoundsReport>> {
    params.validate()?;
    par_map(graphs, |g| evaluate_bounds(g, params))
        .into_iter()
        .collect()
}

/// [`sweep`] on the calling thread only.
pub fn sweep_sequential(
    graphs: &[Graph],
    params: &VerificationParams,
) -> Result<Vec<BoundsReport>> {
    params.validate()?;
    seq_map(graphs, |g| evaluate_bounds(g, params))
        .into_iter()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub g6: String,
    pub claim: ClaimRecord,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub claim: String,
    pub graphs: usize,
    pub evaluated: usize,
    pub vacuous: usize,
    pub not_evaluated: usize,
    pub hits: Vec<SearchHit>,
}

/// Checks a claim name against the registry; the error lists every valid
/// name.
pub fn validate_claim(name: &str) -> Result<()> {
    let names = claim_names();
    if names.contains(&base_name(name)) {
        Ok(())
    } else {
        Err(Error::UnknownClaim {
            name: name.to_string(),
            valid: names.join(", "),
        })
    }
}

fn claim_records(
    g: &Graph,
    claim: &str,
    params: &VerificationParams,
) -> Result<(Vec<ClaimRecord>, Vec<Counterexample>)> {
    let base = base_name(claim);
    if is_bounded_claim(base) {
        let mut recs = Vec::new();
        let mut cex = Vec::new();
        for &r in &params.r {
            let rep = evaluate_generalized(g, r, &params.guards)?;
            recs.extend(rep.claims.into_iter().filter(|c| c.base_name() == base));
            if base == "generalized-reed" {
                cex.extend(rep.counterexample);
            }
        }
        return Ok((recs, cex));
    }
    let (_, mut recs) = evaluate_classic(g, &params.guards)?;
    recs.extend(verify_matching_corollary(g));
    recs.retain(|c| c.name == base);
    Ok((recs, Vec::new()))
}

/// Every graph on which `claim` gets a VIOLATION verdict, in corpus order.
pub fn search(claim: &str, graphs: &[Graph], params: &VerificationParams) -> Result<SearchOutcome> {
    validate_claim(claim)?;
    params.validate()?;
    let per_graph = par_map(graphs, |g| claim_records(g, claim, params));
    let mut out = SearchOutcome {
        claim: claim.to_string(),
        graphs: graphs.len(),
        ..Default::default()
    };
    for (g, res) in graphs.iter().zip(per_graph) {
        let (recs, cex) = res?;
        for rec in recs {
            match rec.verdict {
                Verdict::CheckedPass => out.evaluated += 1,
                Verdict::VacuousPass => out.vacuous += 1,
                Verdict::NotEvaluated => out.not_evaluated += 1,
                Verdict::Violation => {
                    out.evaluated += 1;
                    let counterexample = cex
                        .iter()
                        .find(|c| rec.name.ends_with(&format!("[r={}]", c.r)))
                        .cloned();
                    out.hits.push(SearchHit {
                        g6: g.to_graph6(),
                        claim: rec,
                        counterexample,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    LonelyPath,
    GeneralizedLonelyPath,
    Replete,
    Swap,
    Properties,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::LonelyPath,
        Suite::GeneralizedLonelyPath,
        Suite::Replete,
        Suite::Swap,
        Suite::Properties,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LonelyPath => "lonely-path",
            Suite::GeneralizedLonelyPath => "generalized-lonely-path",
            Suite::Replete => "replete",
            Suite::Swap => "swap",
            Suite::Properties => "properties",
            Suite::Identities => "identities",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite {
                name: s.to_string(),
                valid: Suite::ALL.map(Suite::name).join(", "),
            })
    }
}

/// One checked statement inside a suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub g6: String,
    pub what: String,
    pub verdict: Verdict,
    pub witness: Value,
}

impl Check {
    fn new(g: &Graph, what: impl Into<String>, verdict: Verdict, witness: Value) -> Self {
        Self {
            g6: g.to_graph6(),
            what: what.into(),
            verdict,
            witness,
        }
    }

    fn from_record(g: &Graph, rec: ClaimRecord) -> Self {
        Self::new(g, rec.name, rec.verdict, rec.witness)
    }
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::CheckedPass
    } else {
        Verdict::Violation
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub graphs: usize,
    pub checked_pass: usize,
    pub vacuous_pass: usize,
    pub violations: usize,
    /// Suite-specific totals, e.g. colourings or path pairs examined.
    pub counters: BTreeMap<String, usize>,
    pub witnesses: Vec<Check>,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.violations == 0
    }
}

type GraphResult = Result<(Vec<Check>, BTreeMap<String, usize>)>;

fn lonely_path_checks(
    g: &Graph,
    mode: &LonelyPathMode,
    what: String,
    params: &VerificationParams,
) -> GraphResult {
    let mut counters = BTreeMap::new();
    let rep = match verify_lonely_path_lemma(g, mode, params.max_len, &params.guards) {
        Err(Error::PropertyRefused(name)) => {
            let c = Check::new(g, what, Verdict::Violation, json!({ "refused": name }));
            return Ok((vec![c], counters));
        }
        r => r?,
    };
    counters.insert("colorings".into(), rep.colorings);
    counters.insert("pairs".into(), rep.pairs);
    let verdict = if rep.violation_count > 0 {
        Verdict::Violation
    } else if rep.pairs == 0 {
        Verdict::VacuousPass
    } else {
        Verdict::CheckedPass
    };
    let witness = rep.violations.first().map(to_value).unwrap_or(Value::Null);
    Ok((vec![Check::new(g, what, verdict, witness)], counters))
}

fn replete_checks(g: &Graph, params: &VerificationParams) -> GraphResult {
    let guards = &params.guards;
    let mut checks = Vec::new();
    let mut counters = BTreeMap::new();
    for &t in &params.t {
        for r in std::iter::once(None).chain(params.r.iter().copied().map(Some)) {
            let rep = verify_replete_lemma(g, r, t.doubled(), guards)?;
            *counters.entry("colorings".into()).or_insert(0) += rep.colorings;
            let what = match r {
                None => format!("replete[t={t}]"),
                Some(r) => format!("generalized-replete[r={r},t={t}]"),
            };
            let verdict = if !rep.hypothesis {
                Verdict::VacuousPass
            } else {
                pass_if(rep.is_clean())
            };
            let witness =
                json!({ "lhs2": rep.lhs2, "rhs2": rep.rhs2, "first": rep.violations.first() });
            checks.push(Check::new(g, what, verdict, witness));
        }
    }
    let touch = verify_touches_everybody_lemma(g, guards)?;
    checks.push(Check::new(
        g,
        "touches-everybody",
        pass_if(touch.is_clean()),
        to_value(&touch.violations.first()),
    ));
    for &r in &params.r {
        let rep = verify_singletons_touch_lemma(g, r, guards)?;
        checks.push(Check::new(
            g,
            format!("singletons-touch-small-classes[r={r}]"),
            pass_if(rep.is_clean()),
            to_value(&rep.violations.first()),
        ));
    }
    let dc: DoublyCritical = doubly_critical_edges(g);
    checks.push(Check::new(
        g,
        "doubly-critical-equivalence",
        pass_if(dc.equivalence_holds),
        to_value(&dc),
    ));
    Ok((checks, counters))
}

fn swap_checks(g: &Graph, params: &VerificationParams) -> GraphResult {
    let mut checks = Vec::new();
    let mut counters = BTreeMap::new();
    let colorings = proper_colorings(g, &params.guards)?;
    counters.insert("colorings".into(), colorings.len());
    let mut swaps = 0;
    for c in &colorings {
        let d = lonely_digraph(g, c)?;
        for (v, w) in d.edges() {
            if v > w || !d.has_edge(w, v) {
                continue;
            }
            swaps += 1;
            let s = swap(g, c, v, w)?;
            let ok = s.is_proper(g)? && s.frame() == c.frame();
            if !ok {
                checks.push(Check::new(
                    g,
                    "swap",
                    Verdict::Violation,
                    json!({ "coloring": c, "pair": [v, w], "result": s }),
                ));
            }
        }
    }
    counters.insert("swaps".into(), swaps);
    if checks.is_empty() {
        let verdict = if swaps == 0 {
            Verdict::VacuousPass
        } else {
            Verdict::CheckedPass
        };
        checks.push(Check::new(g, "swap", verdict, json!({ "swaps": swaps })));
    }
    Ok((checks, counters))
}

fn property_checks(g: &Graph, params: &VerificationParams) -> GraphResult {
    let mut checks = Vec::new();
    for &r in params.r.iter().filter(|&&r| r >= 2) {
        let p = b_r(r)?;
        let frame_break = frame_property_break(g, &p, &params.guards)?;
        let sf_break = singleton_friendly_break(g, &p, &params.guards)?;
        let both = frame_break.is_none() && sf_break.is_none();
        checks.push(Check::new(
            g,
            format!("bounded-is-singleton-friendly-frame-property[r={r}]"),
            pass_if(both),
            json!({ "frame_break": frame_break, "singleton_friendly_break": sf_break }),
        ));
        let sufficient = check_frame3_sufficiency(g, &p, &params.guards)?;
        let verdict = match (sufficient, both) {
            (false, _) => Verdict::VacuousPass,
            (true, ok) => pass_if(ok),
        };
        checks.push(Check::new(
            g,
            format!("frame3-sufficiency[r={r}]"),
            verdict,
            Value::Null,
        ));
    }
    Ok((checks, BTreeMap::new()))
}

fn identity_checks(g: &Graph, params: &VerificationParams) -> GraphResult {
    let mut checks: Vec<Check> = verify_matching_corollary(g)
        .into_iter()
        .map(|r| Check::from_record(g, r))
        .collect();
    let rep = evaluate_generalized(g, 2, &params.guards)?;
    for rec in rep.claims {
        if rec.verdict == Verdict::NotEvaluated {
            return Err(Error::GuardExceeded {
                what: "identity check",
                n: g.n(),
                limit: params.guards.optimal,
            });
        }
        if matches!(rec.base_name(), "chi2-m2-identity" | "iota2-bound") {
            checks.push(Check::from_record(g, rec));
        }
    }
    Ok((checks, BTreeMap::new()))
}

fn suite_graph(suite: Suite, g: &Graph, params: &VerificationParams) -> GraphResult {
    match suite {
        Suite::LonelyPath => {
            lonely_path_checks(g, &LonelyPathMode::Classic, "lonely-path".into(), params)
        }
        Suite::GeneralizedLonelyPath => {
            let mut checks = Vec::new();
            let mut counters = BTreeMap::new();
            for &r in &params.r {
                if r < 2 {
                    return Err(Error::InvalidParam(format!(
                        "generalized-lonely-path needs r >= 2 (B_{r} is not singleton-friendly)"
                    )));
                }
                let mode = LonelyPathMode::Property(b_r(r)?);
                let (c, k) = lonely_path_checks(
                    g,
                    &mode,
                    format!("generalized-lonely-path[r={r}]"),
                    params,
                )?;
                checks.extend(c);
                for (key, v) in k {
                    *counters.entry(key).or_insert(0) += v;
                }
            }
            Ok((checks, counters))
        }
        Suite::Replete => replete_checks(g, params),
        Suite::Swap => swap_checks(g, params),
        Suite::Properties => property_checks(g, params),
        Suite::Identities => identity_checks(g, params),
    }
}

/// Runs a suite over `graphs`. A guard being exceeded anywhere fails the
/// whole run rather than skipping graphs.
pub fn verify(suite: Suite, graphs: &[Graph], params: &VerificationParams) -> Result<SuiteReport> {
    params.validate()?;
    let per_graph = par_map(graphs, |g| suite_graph(suite, g, params));
    let mut report = SuiteReport {
        suite,
        graphs: graphs.len(),
        checked_pass: 0,
        vacuous_pass: 0,
        violations: 0,
        counters: BTreeMap::new(),
        witnesses: Vec::new(),
    };
    for res in per_graph {
        let (checks, counters) = res?;
        for (k, v) in counters {
            *report.counters.entry(k).or_insert(0) += v;
        }
        for c in checks {
            match c.verdict {
                Verdict::CheckedPass => report.checked_pass += 1,
                Verdict::VacuousPass => report.vacuous_pass += 1,
                Verdict::Violation | Verdict::NotEvaluated => {
                    report.violations += 1;
                    if report.witnesses.len() < KEPT_WITNESSES {
                        report.witnesses.push(c);
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn analyze_c5() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let a = analyze(&c5, &VerificationParams::default()).unwrap();
        assert_eq!((a.report.inv.chi, a.report.inv.iota), (3, 1));
        assert!(!a.has_violation());
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["g6"], "Dhc");
        assert!(v["lonely"]["doubly_critical"]["edges"]
            .as_array()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn corpus_flags_bad_lines() {
        let c = parse_corpus(">>graph6<<\nDhc\n\nnot a graph\nA_\n");
        assert_eq!(c.graphs.iter().map(|(l, _)| *l).collect::<Vec<_>>(), [2, 5]);
        assert_eq!(c.errors.len(), 1);
        assert_eq!(c.errors[0].0, 4);
    }

    #[test]
    fn unknown_names() {
        let err = validate_claim("foo").unwrap_err();
        assert!(err.to_string().contains("reed-disjunct"), "{err}");
        assert!(validate_claim("generalized-reed[r=3]").is_ok());
        assert!("bogus".parse::<Suite>().is_err());
        assert_eq!("swap".parse::<Suite>().unwrap(), Suite::Swap);
    }

    #[test]
    fn small_suites_are_clean() {
        let graphs = exhaustive_corpus(1, 4).unwrap();
        assert_eq!(graphs.len(), 1 + 2 + 4 + 11);
        let params = VerificationParams::default();
        for suite in Suite::ALL {
            let rep = verify(suite, &graphs, &params).unwrap();
            assert!(rep.is_clean(), "{suite}: {:?}", rep.witnesses);
            assert!(rep.checked_pass > 0, "{suite}");
        }
    }

    #[test]
    fn sweep_matches_sequential() {
        let graphs = exhaustive_corpus(1, 5).unwrap();
        let params = VerificationParams::default();
        assert_eq!(
            sweep(&graphs, &params).unwrap(),
            sweep_sequential(&graphs, &params).unwrap()
        );
    }

    #[test]
    fn search_proved_claim_is_empty() {
        let graphs = search_corpus(1, 5, 0, &DEFAULT_DENSITIES, 0).unwrap();
        let out = search("reed-disjunct", &graphs, &VerificationParams::default()).unwrap();
        assert!(out.hits.is_empty());
        assert_eq!(out.evaluated, graphs.len());
    }
}
