//! Tasks, reports and their table / json renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use minorel_core::linalg::{RankCertificate, RankMethod};
use minorel_core::Variant;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One verification request, with defaults already resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Task {
    pub statement: String,
    pub m: usize,
    pub n: usize,
    pub dmax: usize,
    pub r: usize,
    pub variant: Variant,
    pub rank: RankMethod,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedCapacity,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedCapacity => "skipped-capacity",
        })
    }
}

/// One compared pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// `equal`, `contained-in` or `holds`.
    pub relation: String,
    pub predicted: Value,
    pub witnessed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub predict_ms: u64,
    pub witness_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub task: Task,
    /// Grading convention used by the degree labels.
    pub grading: String,
    pub predicted: BTreeMap<String, Value>,
    pub witnessed: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub certificates: Vec<RankCertificate>,
    pub verdict: Verdict,
    pub timings: Timings,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Render a report.
pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize"),
        Format::Table => {
            let t = &report.task;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{}  m={} n={} dmax={} r={} variant={} rank={} seed={}",
                t.statement,
                t.m,
                t.n,
                t.dmax,
                t.r,
                t.variant,
                match t.rank {
                    RankMethod::Exact => "exact",
                    RankMethod::Modular => "modular",
                },
                t.seed
            );
            let _ = writeln!(out, "  grading: {}", report.grading);
            let w = report.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(5).max(5);
            for c in &report.checks {
                let mark = if c.pass { "ok" } else { "MISMATCH" };
                let pad = w - c.name.chars().count();
                let _ = writeln!(out, "  {}{}  {:<8}", c.name, " ".repeat(pad), mark);
                let _ = writeln!(out, "      predicted: {}", cell(&c.predicted));
                let _ = writeln!(out, "      witnessed: {} ({})", cell(&c.witnessed), c.relation);
            }
            for cert in &report.certificates {
                let _ = writeln!(
                    out,
                    "  certificate: {:?} primes={:?} seed={} eliminations={} rank-sum={}",
                    cert.method, cert.primes, cert.seed, cert.stats.eliminations, cert.stats.rank_sum
                );
            }
            if let Some(e) = &report.error {
                let _ = writeln!(out, "  error: {e}");
            }
            let _ = writeln!(
                out,
                "verdict: {}  (predict {} ms, witness {} ms)",
                report.verdict, report.timings.predict_ms, report.timings.witness_ms
            );
            out
        }
    }
}
