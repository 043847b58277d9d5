use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

/// Outcome of one inequality check `lhs <= rhs` (within the tolerance).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// `lhs < rhs - tolerance`.
    Holds,
    /// `|lhs - rhs| <= tolerance` and the tie was accepted by the
    /// isomorphism classification (or the statement has no equality case).
    Tie,
    /// `|lhs - rhs| <= tolerance` but the stated equality case does not hold.
    TieMismatch,
    /// `lhs > rhs + tolerance`.
    Violated,
    /// A class comparison with an empty side.
    Vacuous,
}

impl Status {
    pub fn is_violation(self) -> bool {
        matches!(self, Status::Violated | Status::TieMismatch)
    }

    pub fn is_tie(self) -> bool {
        matches!(self, Status::Tie | Status::TieMismatch)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Tie => "tie",
            Status::TieMismatch => "tie_mismatch",
            Status::Violated => "violated",
            Status::Vacuous => "vacuous",
        })
    }
}

/// One comparison made during a run. Every statement is normalised to the
/// form `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceRecord {
    pub instance: usize,
    pub comparison: String,
    pub graph: String,
    pub lhs: f64,
    pub rhs: f64,
    pub status: Status,
    pub detail: String,
}

impl InstanceRecord {
    /// `rhs - lhs`: positive when the inequality holds strictly.
    pub fn margin(&self) -> f64 {
        self.rhs - self.lhs
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Result of one verification run.
///
/// `violations` lists every failed comparison with its witness graph; near
/// ties within `tolerance` never count as violations unless the stated
/// equality case fails the isomorphism test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub params: BTreeMap<String, Value>,
    pub checked: usize,
    pub excluded: usize,
    pub violations: Vec<Violation>,
    pub ties: usize,
    pub vacuous: usize,
    pub witness: Option<String>,
    pub tolerance: f64,
    pub policy: String,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub records: Vec<InstanceRecord>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    /// JSON with the timing field removed, for byte comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        copy.to_json()
    }

    /// One row per comparison.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record([
            "theorem",
            "instance",
            "comparison",
            "graph",
            "lhs",
            "rhs",
            "margin",
            "status",
            "detail",
        ])
        .map_err(io)?;
        for r in &self.records {
            w.write_record([
                self.theorem.clone(),
                r.instance.to_string(),
                r.comparison.clone(),
                r.graph.clone(),
                r.lhs.to_string(),
                r.rhs.to_string(),
                r.margin().to_string(),
                r.status.to_string(),
                r.detail.clone(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Classifies `lhs <= rhs` at tolerance `eps`. `tie_ok` is consulted only for
/// near ties.
pub fn classify(lhs: f64, rhs: f64, eps: f64, tie_ok: impl FnOnce() -> bool) -> Status {
    if (lhs - rhs).abs() <= eps {
        if tie_ok() {
            Status::Tie
        } else {
            Status::TieMismatch
        }
    } else if lhs < rhs {
        Status::Holds
    } else {
        Status::Violated
    }
}

/// Collects records into a report. `witness` defaults to the graph of the
/// record with the smallest margin.
pub(crate) struct ReportBuilder {
    pub theorem: String,
    pub params: BTreeMap<String, Value>,
    pub checked: usize,
    pub excluded: usize,
    pub tolerance: f64,
    pub policy: String,
    pub notes: Vec<String>,
    pub witness: Option<String>,
}

impl ReportBuilder {
    pub fn new(theorem: &str, tolerance: f64) -> Self {
        Self {
            theorem: theorem.to_string(),
            params: BTreeMap::new(),
            checked: 0,
            excluded: 0,
            tolerance,
            policy: String::new(),
            notes: Vec::new(),
            witness: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn finish(self, records: Vec<InstanceRecord>) -> TheoremReport {
        let violations = records
            .iter()
            .filter(|r| r.status.is_violation())
            .map(|r| Violation {
                graph: r.graph.clone(),
                lhs: r.lhs,
                rhs: r.rhs,
                margin: r.margin(),
                note: if r.status == Status::TieMismatch {
                    format!(
                        "{}: tie outside the stated equality case; {}",
                        r.comparison, r.detail
                    )
                } else {
                    format!("{}: {}", r.comparison, r.detail)
                },
            })
            .collect();
        let witness = self.witness.or_else(|| {
            records
                .iter()
                .filter(|r| r.status != Status::Vacuous)
                .min_by(|a, b| a.margin().total_cmp(&b.margin()))
                .map(|r| r.graph.clone())
        });
        TheoremReport {
            theorem: self.theorem,
            params: self.params,
            checked: self.checked,
            excluded: self.excluded,
            violations,
            ties: records.iter().filter(|r| r.status.is_tie()).count(),
            vacuous: records
                .iter()
                .filter(|r| r.status == Status::Vacuous)
                .count(),
            witness,
            tolerance: self.tolerance,
            policy: self.policy,
            notes: self.notes,
            elapsed_ms: 0,
            records,
        }
    }
}
