//! Structured verification reports.
//!
//! Every check in the verification layer returns a [`VerificationReport`]
//! describing what was checked, over which ranges, and whether the claim
//! held. Reports serialize to a stable JSON shape:
//!
//! ```json
//! {"target": "...", "params": {...}, "status": "verified",
//!  "first_violation": null, "details": {...}}
//! ```
//!
//! Invariants:
//! - identical inputs yield identical reports (the elapsed-time field is
//!   excluded from serialization so reports are byte-reproducible);
//! - `Verified` is reserved for exhaustive agreement over the declared
//!   ranges; open-ended claims can only ever reach `EvidenceOnly`.

use std::fmt;
use std::time::Duration;

use num::BigRational;
use serde::Serialize;
use serde_json::Value;

/// Outcome of a verification target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Exhaustive agreement over the declared ranges.
    Verified,
    /// At least one counterexample was found.
    Violated,
    /// All checks passed, but the claim is open-ended (a conjecture or a
    /// crossover table), so a finite sweep cannot establish it.
    EvidenceOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Status::Verified => "verified",
            Status::Violated => "violated",
            Status::EvidenceOnly => "evidence-only",
        };
        f.write_str(label)
    }
}

/// First point at which a check failed: the family bound and size where
/// the two sides disagree, with both values rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Largest-part bound in force, when the check sweeps bounds.
    #[serde(rename = "L")]
    pub l: Option<u32>,
    pub n: u64,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(l: impl Into<Option<u32>>, n: u64, lhs: impl ToString, rhs: impl ToString) -> Self {
        Violation { l: l.into(), n, lhs: lhs.to_string(), rhs: rhs.to_string() }
    }

    /// A violation located by comparing two series coefficientwise.
    pub fn at_coeff(l: impl Into<Option<u32>>, n: usize, lhs: &BigRational, rhs: &BigRational) -> Self {
        Violation::new(l, n as u64, lhs, rhs)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.l {
            Some(l) => write!(f, "L={l}, n={}: lhs={} rhs={}", self.n, self.lhs, self.rhs),
            None => write!(f, "n={}: lhs={} rhs={}", self.n, self.lhs, self.rhs),
        }
    }
}

/// Result of one verification target run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub params: Value,
    pub status: Status,
    pub first_violation: Option<Violation>,
    pub details: Value,
    /// Wall-clock time of the run; excluded from serialization so identical
    /// inputs produce identical reports.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        target: impl Into<String>,
        params: Value,
        status: Status,
        first_violation: Option<Violation>,
        details: Value,
    ) -> Self {
        VerificationReport {
            target: target.into(),
            params,
            status,
            first_violation,
            details,
            elapsed: Duration::ZERO,
        }
    }

    /// A report with exhaustive agreement over the declared ranges.
    pub fn verified(target: impl Into<String>, params: Value, details: Value) -> Self {
        Self::new(target, params, Status::Verified, None, details)
    }

    /// A clean sweep of an open-ended claim.
    pub fn evidence_only(target: impl Into<String>, params: Value, details: Value) -> Self {
        Self::new(target, params, Status::EvidenceOnly, None, details)
    }

    /// A failed check with its first counterexample.
    pub fn violated(
        target: impl Into<String>,
        params: Value,
        violation: Violation,
        details: Value,
    ) -> Self {
        Self::new(target, params, Status::Violated, Some(violation), details)
    }

    /// True when the run found a counterexample.
    pub fn is_violation(&self) -> bool {
        self.status == Status::Violated
    }

    /// One human-readable line: target, status, params, and the witness if
    /// the check failed.
    pub fn summary_line(&self) -> String {
        let params = match &self.params {
            Value::Object(map) => {
                let body = map
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!(" [{body}]")
            }
            Value::Null => String::new(),
            other => format!(" [{other}]"),
        };
        match &self.first_violation {
            Some(v) => format!("{}: {}{} at {}", self.target, self.status, params, v),
            None => format!("{}: {}{}", self.target, self.status, params),
        }
    }
}
