use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    OrderBound,
    AutCap,
    /// Needs the `slow` option.
    Slow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped { reason: SkipReason },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: String,
    pub groups: Vec<String>,
    pub claim: String,
    #[serde(flatten)]
    pub status: Status,
    pub witness: Value,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    /// Seconds.
    pub wall_time: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl VerificationReport {
    pub(crate) fn new(suite: &str, cases: Vec<CaseReport>, wall_time: f64) -> VerificationReport {
        let count = |f: fn(&CaseReport) -> bool| cases.iter().filter(|c| f(c)).count();
        let summary = Summary {
            pass: count(CaseReport::passed),
            fail: count(CaseReport::failed),
            skipped: count(|c| matches!(c.status, Status::Skipped { .. })),
            wall_time,
        };
        VerificationReport {
            suite: suite.to_string(),
            cases,
            summary,
        }
    }

    pub fn is_success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table, one row per case, then the summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<14} {:<20} {:<28} CLAIM",
            "CASE", "STATUS", "GROUPS"
        );
        for case in &self.cases {
            let status = match &case.status {
                Status::Pass => "pass".to_string(),
                Status::Fail => "FAIL".to_string(),
                Status::Skipped { reason } => format!("skipped({})", reason_name(*reason)),
            };
            let _ = writeln!(
                out,
                "{:<14} {:<20} {:<28} {}",
                case.case_id,
                status,
                clip(&case.groups.join(", "), 28),
                case.claim
            );
            if case.failed() {
                let _ = writeln!(out, "{:<14} witness: {}", "", case.witness);
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "suite {}: {} passed, {} failed, {} skipped in {:.2}s",
            self.suite, s.pass, s.fail, s.skipped, s.wall_time
        );
        out
    }
}

fn reason_name(reason: SkipReason) -> &'static str {
    match reason {
        SkipReason::OrderBound => "order-bound",
        SkipReason::AutCap => "aut-cap",
        SkipReason::Slow => "slow",
    }
}

fn clip(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let mut t: String = s.chars().take(width - 1).collect();
        t.push('…');
        t
    }
}
