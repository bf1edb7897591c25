use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{ClaimRecord, Counterexample, GeneralizedReport, ReportInvariants, Verdict};
use crate::{Error, Result};

/// Everything evaluated on one graph; one JSON line per graph in corpus
/// runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub g6: String,
    pub inv: ReportInvariants,
    pub claims: Vec<ClaimRecord>,
    #[serde(default)]
    pub bounded: Vec<GeneralizedReport>,
    #[serde(default)]
    pub counterexamples: Vec<Counterexample>,
}

impl BoundsReport {
    /// Classic claims followed by every r-bounded claim.
    pub fn all_claims(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.claims
            .iter()
            .chain(self.bounded.iter().flat_map(|b| b.claims.iter()))
    }

    pub fn violations(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.all_claims()
            .filter(|c| c.verdict == Verdict::Violation)
    }

    pub fn has_violation(&self) -> bool {
        self.violations().next().is_some()
    }
}

pub fn write_jsonl<W: Write>(reports: &[BoundsReport], mut out: W) -> Result<()> {
    for r in reports {
        let line = serde_json::to_string(r).map_err(|e| Error::InvalidParam(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Error::InvalidParam(e.to_string()))?;
    }
    Ok(())
}

/// Parses JSONL; a bad line is reported by its 1-based number.
pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<BoundsReport>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::InvalidParam(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let rep = serde_json::from_str(&line)
            .map_err(|e| Error::InvalidParam(format!("line {}: {e}", i + 1)))?;
        out.push(rep);
    }
    Ok(out)
}

/// Graph × claim verdict matrix. Columns are claim names in first-seen
/// order; a claim absent for some graph is left blank.
pub fn write_csv<W: Write>(reports: &[BoundsReport], out: W) -> Result<()> {
    let mut names: Vec<&str> = Vec::new();
    for r in reports {
        for c in r.all_claims() {
            if !names.contains(&c.name.as_str()) {
                names.push(&c.name);
            }
        }
    }
    let csv_err = |e: csv::Error| Error::InvalidParam(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["g6", "n", "chi", "iota"];
    header.extend(&names);
    w.write_record(&header).map_err(csv_err)?;
    for r in reports {
        let mut row = vec![
            r.g6.clone(),
            r.inv.n.to_string(),
            r.inv.chi.to_string(),
            r.inv.iota.to_string(),
        ];
        for name in &names {
            let cell = r
                .all_claims()
                .find(|c| c.name == *name)
                .map(|c| c.verdict.as_str())
                .unwrap_or("");
            row.push(cell.to_string());
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::InvalidParam(e.to_string()))?;
    Ok(())
}
