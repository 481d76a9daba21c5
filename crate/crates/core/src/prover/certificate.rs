use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::rational_to_f64;
use crate::interval::PrecisionMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Undecided,
}

impl Status {
    /// Failed dominates undecided, which dominates verified.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Failed, _) | (_, Failed) => Failed,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => Verified,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimKind {
    Sign,
    ExactPoly,
    Overlap,
    Monotone,
    Compose,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::Sign => "SIGN",
            ClaimKind::ExactPoly => "EXACT_POLY",
            ClaimKind::Overlap => "OVERLAP",
            ClaimKind::Monotone => "MONOTONE",
            ClaimKind::Compose => "COMPOSE",
        })
    }
}

/// A box whose enclosure lies strictly on the wrong side of zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "box")]
    pub alpha: [f64; 2],
    pub box_exact: [String; 2],
    pub value: [f64; 2],
}

impl Witness {
    pub(crate) fn new(lo: &BigRational, hi: &BigRational, value: [f64; 2]) -> Self {
        Witness {
            alpha: [rational_to_f64(lo), rational_to_f64(hi)],
            box_exact: [lo.to_string(), hi.to_string()],
            value: value.map(finite),
        }
    }
}

/// JSON has no infinities; saturate to the largest finite value.
pub(crate) fn finite(x: f64) -> f64 {
    if x.is_nan() {
        0.0
    } else {
        x.clamp(f64::MIN, f64::MAX)
    }
}

/// One named step inside a claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// Result of one engine call (a bisection, an overlap scan, a lift).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub boxes_examined: u64,
    pub max_depth_used: u32,
    pub worst_box: Option<(BigRational, BigRational)>,
    pub witness: Option<Witness>,
    /// Highest precision any box needed.
    pub precision: PrecisionMode,
    /// The part of the requested domain on which the property was established.
    pub covered: Option<(BigRational, BigRational)>,
    pub detail: String,
}

impl Outcome {
    pub(crate) fn simple(status: Status, detail: impl Into<String>) -> Self {
        Outcome {
            status,
            boxes_examined: 0,
            max_depth_used: 0,
            worst_box: None,
            witness: None,
            precision: PrecisionMode::Machine,
            covered: None,
            detail: detail.into(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// The verdict for one claim, as emitted in reports.
///
/// Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub kind: ClaimKind,
    pub statement: String,
    pub paper_ref: String,
    pub deps: Vec<String>,
    pub status: Status,
    pub domain: [f64; 2],
    pub boxes_examined: u64,
    pub max_depth_used: u32,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
    pub domain_exact: [String; 2],
    pub covered: Option<[String; 2]>,
    pub worst_box: Option<[f64; 2]>,
    pub precision: PrecisionMode,
    pub checks: Vec<SubCheck>,
    pub note: Option<String>,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<&SubCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}
