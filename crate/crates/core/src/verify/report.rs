//! Machine-readable check reports.

use serde::Serialize;
use serde_json::Value;

use crate::exact::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational comparison against a printed constant.
    Finding,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub anchor: String,
    pub status: Status,
    pub seed: u64,
    pub points: Vec<Value>,
    pub measured: Vec<Value>,
    pub expected: Vec<Expected>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// `(estimated, budget)` when the check was refused for cost.
    #[serde(skip)]
    pub refused: Option<(u128, u128)>,
}

/// `num/den` as a JSON string.
pub fn q(v: &ExactScalar) -> Value {
    Value::String(v.to_string())
}

impl CheckReport {
    pub fn new(check: impl Into<String>, anchor: impl Into<String>, seed: u64) -> Self {
        CheckReport {
            check: check.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            seed,
            points: vec![],
            measured: vec![],
            expected: vec![],
            notes: vec![],
            refused: None,
        }
    }

    /// Labels `n` points drawn in order from the stream seeded by `seed`.
    pub fn with_points(mut self, n: usize) -> Self {
        self.set_points(n);
        self
    }

    pub fn set_points(&mut self, n: usize) {
        self.points = (0..n).map(|k| Value::String(format!("{}#{k}", self.seed))).collect();
    }

    pub fn measure(&mut self, key: &str, v: impl Into<Value>) {
        self.measured.push(serde_json::json!({ key: v.into() }));
    }

    pub fn expect(&mut self, key: &str, v: impl Into<Value>, p: Provenance) {
        self.expected.push(Expected {
            value: serde_json::json!({ key: v.into() }),
            provenance: p,
        });
    }

    /// Records a hard requirement; a false `ok` makes the check fail.
    pub fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.status = Status::Fail;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    /// Records a comparison with a printed constant; a mismatch is a finding.
    pub fn compare(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            if self.status == Status::Pass {
                self.status = Status::Finding;
            }
            self.notes.push(format!("differs: {}", what.into()));
        }
    }

    /// Fails the check with `e`, remembering a cost refusal.
    pub fn record_error(&mut self, e: &crate::Error) {
        if let crate::Error::Budget { estimated, budget } | crate::Error::TermCap { estimated, cap: budget } = e {
            self.refused = Some((*estimated, *budget));
        }
        self.require(false, format!("error: {e}"));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// A check that could not run.
    pub fn error(check: &str, anchor: &str, seed: u64, e: &crate::Error) -> Self {
        let mut r = CheckReport::new(check, anchor, seed);
        r.record_error(e);
        r
    }
}
