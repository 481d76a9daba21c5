//! The run report: configuration echo, certificates and summary counts.
//!
//! JSON keys appear in declaration order: `version`, `config`, `claims`,
//! `summary`; each claim starts with `id`, `kind`, `statement`,
//! `paper_ref`, `deps`, `status`, `domain`, `boxes_examined`,
//! `max_depth_used`, `witness`, `elapsed_ms`, followed by the audit fields.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::prover::{Certificate, ProverConfig, Status};

pub const SCHEMA_VERSION: &str = "1";

/// Process exit codes.
pub mod exit {
    pub const VERIFIED: i32 = 0;
    pub const FAILED: i32 = 1;
    pub const UNDECIDED: i32 = 2;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub failed: usize,
    pub undecided: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub config: ProverConfig,
    pub claims: Vec<Certificate>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(config: ProverConfig, claims: Vec<Certificate>, elapsed_ms: u64) -> Self {
        let count = |s: Status| claims.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            verified: count(Status::Verified),
            failed: count(Status::Failed),
            undecided: count(Status::Undecided),
            elapsed_ms,
        };
        RunReport { version: SCHEMA_VERSION.to_string(), config, claims, summary }
    }

    /// 0 when every claim is verified, 1 if any failed, otherwise 2.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            exit::FAILED
        } else if self.summary.undecided > 0 {
            exit::UNDECIDED
        } else {
            exit::VERIFIED
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per claim, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = writeln!(
                out,
                "{}  {:<9}  {:<10}  {}  [{}]  boxes={} depth={} {}ms",
                c.id, c.status, c.kind, c.statement, c.paper_ref, c.boxes_examined, c.max_depth_used, c.elapsed_ms
            );
            for check in c.checks.iter().filter(|k| k.status != Status::Verified) {
                let _ = writeln!(out, "    {} {}: {}", check.status, check.name, check.detail);
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} verified, {} failed, {} undecided in {}ms ({})",
            s.verified, s.failed, s.undecided, s.elapsed_ms, self.config
        );
        out
    }

    /// Zeroes every timing field, leaving the deterministic content.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        r.summary.elapsed_ms = 0;
        for c in &mut r.claims {
            c.elapsed_ms = 0;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::prover::run_with_overrides;

    fn injected(statuses: &[(&str, Status)]) -> RunReport {
        let o: BTreeMap<String, Status> = statuses.iter().map(|(i, s)| (i.to_string(), *s)).collect();
        let ids: Vec<&str> = statuses.iter().map(|(i, _)| *i).collect();
        let cfg = ProverConfig::default();
        RunReport::new(cfg.clone(), run_with_overrides(&ids, &cfg, &o).unwrap(), 5)
    }

    #[test]
    fn exit_codes_follow_statuses() {
        assert_eq!(injected(&[("C04", Status::Verified), ("C10", Status::Verified)]).exit_code(), 0);
        assert_eq!(injected(&[("C04", Status::Verified), ("C10", Status::Undecided)]).exit_code(), 2);
        assert_eq!(injected(&[("C04", Status::Failed), ("C10", Status::Undecided)]).exit_code(), 1);
    }

    #[test]
    fn json_round_trips_with_fixed_key_order() {
        let r = injected(&[("C04", Status::Verified), ("C07", Status::Failed)]);
        let s = r.to_json();
        assert_eq!(RunReport::from_json(&s).unwrap(), r);
        let keys = ["\"version\"", "\"config\"", "\"claims\"", "\"summary\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let claim_keys = ["\"id\"", "\"kind\"", "\"statement\"", "\"paper_ref\"", "\"deps\"", "\"status\"", "\"domain\"", "\"boxes_examined\"", "\"max_depth_used\"", "\"witness\"", "\"elapsed_ms\""];
        let pos: Vec<usize> = claim_keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(r.summary.verified + r.summary.failed + r.summary.undecided, r.claims.len());
    }

    #[test]
    fn text_has_one_line_per_claim() {
        let r = injected(&[("C04", Status::Verified), ("C10", Status::Verified)]);
        let t = r.to_text();
        assert!(t.lines().next().unwrap().starts_with("C04  verified"));
        assert!(t.lines().last().unwrap().starts_with("summary: 2 verified"));
    }
}
