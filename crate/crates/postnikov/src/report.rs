use crate::args::Globals;
use crate::Failure;
use postnikov_core::invariants::AbelianGroup;
use postnikov_core::{Budgets, Verdict};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::cell::RefCell;
use std::path::Path;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// A suite found a counterexample.
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BudgetsUsed {
    pub tietze_steps: usize,
    pub max_dim: usize,
    pub horizon: usize,
    pub seed: u64,
}

/// Everything but `wall_time_ms` is a function of the argument list and the
/// contents of the files it names.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Vec<String>,
    /// SHA-256 over the arguments and every input file read.
    pub inputs_digest: String,
    pub status: Status,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub budgets: BudgetsUsed,
    pub wall_time_ms: u64,
}

/// Per-invocation state: budgets and the running input digest.
pub struct Context {
    pub budgets: Budgets,
    pub seed: u64,
    argv: Vec<String>,
    digest: RefCell<Sha256>,
}

impl Context {
    pub fn new(argv: &[String], g: Globals) -> Self {
        let mut h = Sha256::new();
        for a in argv.iter().skip(1) {
            h.update(a.as_bytes());
            h.update([0]);
        }
        Context {
            budgets: Budgets {
                tietze_steps: g.tietze_budget,
                max_dim: g.max_dim,
                horizon: g.horizon,
            },
            seed: g.seed,
            argv: argv.to_vec(),
            digest: RefCell::new(h),
        }
    }

    /// Reads an input file and folds its contents into the digest.
    pub fn read(&self, path: &Path) -> Result<String, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        let mut h = self.digest.borrow_mut();
        h.update(path.to_string_lossy().as_bytes());
        h.update([0]);
        h.update(text.as_bytes());
        h.update([0]);
        Ok(text)
    }

    /// `Ok((result, passed))`; `passed = false` marks a suite violation.
    pub fn finish(self, result: Result<(Value, bool), Failure>, start: Instant) -> Report {
        let (status, result, error) = match result {
            Ok((v, true)) => (Status::Ok, v, None),
            Ok((v, false)) => (Status::Violation, v, None),
            Err(e) => {
                let kind = match e {
                    Failure::Input(_) => "input",
                    Failure::Internal(_) => "internal",
                };
                (Status::Error, json!({ "kind": kind }), Some(e.to_string()))
            }
        };
        let b = self.budgets;
        Report {
            schema_version: SCHEMA_VERSION,
            command: self.argv.iter().skip(1).cloned().collect(),
            inputs_digest: hex::encode(self.digest.into_inner().finalize()),
            status,
            result,
            error,
            budgets: BudgetsUsed {
                tietze_steps: b.tietze_steps,
                max_dim: b.max_dim,
                horizon: b.horizon,
                seed: self.seed,
            },
            wall_time_ms: start.elapsed().as_millis() as u64,
        }
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let b = v.budgets;
    let mut out = json!({
        "tag": v.tag.as_str(),
        "evidence": v.evidence.iter().map(|e| json!({ "rule": e.rule, "detail": e.detail })).collect::<Vec<_>>(),
        "budgets": { "tietze_steps": b.tietze_steps, "max_dim": b.max_dim, "horizon": b.horizon },
    });
    if let Some(r) = &v.reason {
        out["reason"] = json!(r);
    }
    out
}

/// Integers that overflow `i64` are written as strings.
pub fn big_json(n: impl std::fmt::Display) -> Value {
    let s = n.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

/// `[[rank, [torsion, ...]], ...]`, one entry per degree.
pub fn homology_json(h: &[AbelianGroup]) -> Value {
    Value::Array(
        h.iter()
            .map(|g| json!([g.rank, g.torsion.iter().map(big_json).collect::<Vec<_>>()]))
            .collect(),
    )
}
