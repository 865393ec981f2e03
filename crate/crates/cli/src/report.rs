//! Result shapes shared by every subcommand: single counts, sequence
//! tables, and multi-check verification reports. All big integers travel
//! as decimal strings so no consumer ever parses them into a lossy
//! numeric type.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Result of a `count` subcommand. `value` is `None` when the time budget
/// expired before the enumeration finished.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub command: String,
    pub n: u64,
    pub value: Option<String>,
}

/// One row of a `seq` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqRow {
    pub n: u64,
    pub value: String,
}

/// Result of a `seq` subcommand. Rows run upward from index 0; a time
/// budget that expires mid-sequence truncates the rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqResult {
    pub command: String,
    pub max: u64,
    pub rows: Vec<SeqRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unchecked,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Unchecked => "unchecked",
        }
    }
}

/// A single named verification step with its verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Fail,
            detail: detail.into(),
        }
    }

    pub fn unchecked(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Unchecked,
            detail: detail.into(),
        }
    }
}

/// Result of a `verify` or `conjecture` subcommand: named checks plus the
/// counts that fed them. The wall-clock time is tracked but kept out of
/// the serialized form so repeated runs print identical bytes; it is
/// reported on the error stream instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub command: String,
    pub parameters: BTreeMap<String, u64>,
    pub checks: Vec<Check>,
    pub counts: BTreeMap<String, String>,
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>, parameters: BTreeMap<String, u64>) -> Self {
        VerificationReport {
            command: command.into(),
            parameters,
            checks: Vec::new(),
            counts: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    /// `fail` if any check failed, `unchecked` if nothing failed but some
    /// check was skipped, `pass` otherwise.
    pub fn overall(&self) -> CheckStatus {
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            CheckStatus::Fail
        } else if self
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::Unchecked)
        {
            CheckStatus::Unchecked
        } else {
            CheckStatus::Pass
        }
    }

    pub fn record_count(&mut self, key: impl Into<String>, value: impl ToString) {
        self.counts.insert(key.into(), value.to_string());
    }

    /// True when every check ran to completion, so the report is safe to
    /// reuse from a cache.
    pub fn is_complete(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status != CheckStatus::Unchecked)
    }
}

/// What a dispatched subcommand hands back for rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Count(CountResult),
    Seq(SeqResult),
    Report(VerificationReport),
}

impl Outcome {
    pub fn command(&self) -> &str {
        match self {
            Outcome::Count(c) => &c.command,
            Outcome::Seq(s) => &s.command,
            Outcome::Report(r) => &r.command,
        }
    }

    /// Drives the exit code: only a failed check fails the process.
    pub fn failed(&self) -> bool {
        match self {
            Outcome::Count(_) | Outcome::Seq(_) => false,
            Outcome::Report(r) => r.overall() == CheckStatus::Fail,
        }
    }
}
