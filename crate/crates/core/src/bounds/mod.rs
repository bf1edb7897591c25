//! Exact evaluation of the colouring bounds on a single graph.
//!
//! Every inequality is compared with denominators cleared (×2 or ×4), so
//! there are no tolerances anywhere. Each claim is an implication
//! `hypothesis → conclusion` and gets exactly one [`Verdict`].

mod classic;
mod generalized;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coloring::Guards;
use crate::{Error, Result};

pub use classic::{
    evaluate_bounds, evaluate_classic, verify_matching_corollary, ReportInvariants, CLASSIC_CLAIMS,
    MATCHING_CLAIMS,
};
pub use generalized::{
    evaluate_generalized, Counterexample, GeneralizedReport, GENERALIZED_CLAIMS, REVERIFY_MAX_N,
};
pub use report::{read_jsonl, write_csv, write_jsonl, BoundsReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "checked-pass")]
    CheckedPass,
    #[serde(rename = "vacuous-pass")]
    VacuousPass,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "not-evaluated")]
    NotEvaluated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CheckedPass => "checked-pass",
            Verdict::VacuousPass => "vacuous-pass",
            Verdict::Violation => "VIOLATION",
            Verdict::NotEvaluated => "not-evaluated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub name: String,
    pub hyp: bool,
    pub concl: Option<bool>,
    pub verdict: Verdict,
    pub witness: Value,
}

impl ClaimRecord {
    /// The conclusion is always evaluated, so vacuous records still show
    /// whether it happened to hold.
    pub fn implication(name: impl Into<String>, hyp: bool, concl: bool, witness: Value) -> Self {
        let verdict = match (hyp, concl) {
            (false, _) => Verdict::VacuousPass,
            (true, true) => Verdict::CheckedPass,
            (true, false) => Verdict::Violation,
        };
        Self {
            name: name.into(),
            hyp,
            concl: Some(concl),
            verdict,
            witness,
        }
    }

    pub fn unconditional(name: impl Into<String>, concl: bool, witness: Value) -> Self {
        Self::implication(name, true, concl, witness)
    }

    pub fn not_evaluated(name: impl Into<String>, reason: &Error) -> Self {
        Self {
            name: name.into(),
            hyp: false,
            concl: None,
            verdict: Verdict::NotEvaluated,
            witness: serde_json::json!({ "reason": reason.to_string() }),
        }
    }

    /// Name without a `[..]` parameter suffix.
    pub fn base_name(&self) -> &str {
        base_name(&self.name)
    }
}

/// Every claim base name, classic first.
pub fn claim_names() -> Vec<&'static str> {
    CLASSIC_CLAIMS
        .iter()
        .chain(MATCHING_CLAIMS)
        .chain(GENERALIZED_CLAIMS)
        .copied()
        .collect()
}

/// `true` for claims that depend on a class-size cap `r`.
pub fn is_bounded_claim(name: &str) -> bool {
    GENERALIZED_CLAIMS.contains(&base_name(name))
}

pub(crate) fn base_name(name: &str) -> &str {
    name.split('[').next().unwrap_or(name)
}

/// `⌈x / 2⌉` for nonnegative integers.
pub(crate) fn ceil_half(x: i64) -> i64 {
    (x + 1).div_euclid(2)
}

/// Slack `t ≥ 0` restricted to half-integers, stored doubled. Accepts
/// `"1"`, `"1/2"`, `"3/2"`, `"0.5"`, `"1.5"`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct HalfInt(pub u32);

impl HalfInt {
    pub fn doubled(self) -> u32 {
        self.0
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParam(format!("`{s}` is not a nonnegative half-integer"));
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "1" => num.checked_mul(2).map(HalfInt).ok_or_else(bad),
                "2" => Ok(HalfInt(num)),
                _ => Err(bad()),
            };
        }
        let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
        let whole: u32 = whole.parse().map_err(|_| bad())?;
        let half = match frac.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        whole
            .checked_mul(2)
            .and_then(|w| w.checked_add(half))
            .map(HalfInt)
            .ok_or_else(bad)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationParams {
    pub t: Vec<HalfInt>,
    pub r: Vec<usize>,
    pub guards: Guards,
    pub seed: u64,
    pub max_len: usize,
}

impl Default for VerificationParams {
    fn default() -> Self {
        Self {
            t: vec![HalfInt(0), HalfInt(1)],
            r: vec![2, 3],
            guards: Guards::default(),
            seed: 0,
            max_len: crate::lonely::DEFAULT_MAX_LEN,
        }
    }
}

impl VerificationParams {
    pub fn validate(&self) -> Result<()> {
        if let Some(&r) = self.r.iter().find(|&&r| r == 0) {
            return Err(Error::InvalidParam(format!(
                "class-size cap r must be at least 1, got {r}"
            )));
        }
        Ok(())
    }
}

/// Witness helper: both sides of `lhs ≤ rhs` (or `>`), already scaled.
pub(crate) fn sides(lhs: i64, rhs: i64, scale: i64) -> Value {
    serde_json::json!({ "lhs": lhs, "rhs": rhs, "scale": scale })
}
