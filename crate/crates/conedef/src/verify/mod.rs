//! Rerunnable certifications of the computer-checked inequalities.

mod tasks;

pub use tasks::Claim;

use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::interval::{ProofResult, ProofStatus, ProveOptions};

type Runner = fn(Claim, &ProveOptions) -> Result<ProofResult>;

/// One named inequality with its proof strategy.
pub struct VerifyTask {
    pub id: &'static str,
    pub citation: &'static str,
    pub statement: &'static str,
    run: Runner,
}

impl std::fmt::Debug for VerifyTask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VerifyTask").field("id", &self.id).finish()
    }
}

/// All tasks, in a fixed order.
pub static TASKS: &[VerifyTask] = &[
    VerifyTask {
        id: "injec_linear_dominates",
        citation: "tube-injectivity",
        statement: "1.361 sqrt(1 - cos sech R) sinh R / S(R) >= 1.1227 tanh R - 0.1604 for tanh R in [0, 1)",
        run: tasks::injec_linear_dominates,
    },
    VerifyTask {
        id: "meyerhoff_m8",
        citation: "embedded-tube-radius",
        statement: "for tau in [0, pi] some m in 1..8 has cosh(0.0996 m) - cos(m tau) <= 0.34932",
        run: tasks::meyerhoff_m8,
    },
    VerifyTask {
        id: "area_bound_capped",
        citation: "area-bound-capped",
        statement: "f(t) < f(4 pi^2) + 2 pi 1e-5 for l in [0, 0.0735], m = 0.0996 - 0.352 l, t in [0, 4 pi^2]",
        run: tasks::area_bound_capped,
    },
    VerifyTask {
        id: "hold_geodesics_fhat",
        citation: "hold-short-geodesics",
        statement: "fhat(t) < 2 pi (l + 2m + 1e-5) for l in [0, 0.14], m = (0.14 - l)/2, t in [0, 4 pi^2]",
        run: tasks::hold_geodesics_fhat,
    },
    VerifyTask {
        id: "puiseux_938",
        citation: "mean-value-envelope",
        statement: "2 f(r)^2 C^2 - 3 r^3 (sinh 2r - 2r) >= 0 on [0, 0.469], C = 1.046",
        run: tasks::puiseux_938,
    },
    VerifyTask {
        id: "puiseux_106",
        citation: "mean-value-envelope",
        statement: "2 f(r)^2 C^2 - 3 r^3 (sinh 2r - 2r) >= 0 on [0, 0.053], C = 1.001",
        run: tasks::puiseux_106,
    },
    VerifyTask {
        id: "sysmin_supper",
        citation: "systole-threshold",
        statement: "4 pi^2 F(Z, l_max)/l_max < log((L^2 - 16.03)/(L^2 - 58)) (L^2 - 16.03)/(2 pi) on L in [10.1, 11]",
        run: tasks::sysmin_supper,
    },
    VerifyTask {
        id: "gj_max",
        citation: "thick-threshold-maximum",
        statement: "g(log 3, J) < 5.610e-5 for J in [1, e^(1/5)]",
        run: tasks::gj_max,
    },
    VerifyTask {
        id: "gj_dJ_positive",
        citation: "thick-threshold-maximum",
        statement: "(2/5 - 2 log J) cosh u - eps J log J sinh u > 0, u = J eps/2 + 0.1475, on [0, log 3] x [1, log 3]",
        run: tasks::gj_dj_positive,
    },
    VerifyTask {
        id: "delta_cut_bracket",
        citation: "tube-embedding-cut",
        statement: "0.261 d = haze((d + 0.1604)/1.1227)/(2 pi) has its crossing in [0.556369, 0.556370]",
        run: tasks::delta_cut_bracket,
    },
];

pub fn lookup_task(id: &str) -> Result<&'static VerifyTask> {
    TASKS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::Unknown { kind: "task", name: id.to_string() })
}

/// Outcome of one task with its cost.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaskRun {
    pub task_id: String,
    pub citation: String,
    pub result: ProofResult,
    pub seconds: f64,
}

impl TaskRun {
    pub fn status_name(&self) -> &'static str {
        status_name(&self.result.status)
    }
}

pub fn status_name(s: &ProofStatus) -> &'static str {
    match s {
        ProofStatus::Verified => "Verified",
        ProofStatus::Counterexample(_) => "Counterexample",
        ProofStatus::DepthExceeded(_) => "DepthExceeded",
    }
}

fn run(task: &VerifyTask, claim: Claim, opts: &ProveOptions) -> Result<TaskRun> {
    let start = Instant::now();
    let result = (task.run)(claim, opts)?;
    Ok(TaskRun {
        task_id: task.id.to_string(),
        citation: task.citation.to_string(),
        result,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Certifies the stated inequality.
pub fn run_task(id: &str, opts: &ProveOptions) -> Result<TaskRun> {
    run(lookup_task(id)?, Claim::Stated, opts)
}

/// Attempts the strictly stronger, false variant; it must not verify.
pub fn run_negated(id: &str, opts: &ProveOptions) -> Result<TaskRun> {
    run(lookup_task(id)?, Claim::Negated, opts)
}

/// Hash of the task definitions and crate version; cached entries with a
/// different hash are stale.
pub fn code_hash() -> String {
    let mut h = Sha256::new();
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.update(include_str!("tasks.rs").as_bytes());
    h.update(include_str!("../special/meanvalue.rs").as_bytes());
    h.update(include_str!("../special/lengths.rs").as_bytes());
    h.update(include_str!("../interval/prover.rs").as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// One line of `verify_ledger.json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub task_id: String,
    pub status: String,
    pub boxes: u64,
    pub seconds: f64,
    pub code_hash: String,
}

impl From<&TaskRun> for LedgerEntry {
    fn from(r: &TaskRun) -> LedgerEntry {
        LedgerEntry {
            task_id: r.task_id.clone(),
            status: r.status_name().to_string(),
            boxes: r.result.boxes_examined,
            seconds: r.seconds,
            code_hash: code_hash(),
        }
    }
}

/// Task results keyed by id; a missing file reads as empty.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ledger {
    pub entries: Vec<LedgerEntry>,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io { path: path.display().to_string(), message: e.to_string() }
}

impl Ledger {
    pub fn load(path: &Path) -> Result<Ledger> {
        match std::fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text).map_err(|e| io_err(path, e)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Ledger::default()),
            Err(e) => Err(io_err(path, e)),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("ledger serializes");
        std::fs::write(path, text + "\n").map_err(|e| io_err(path, e))
    }

    /// A verified entry for `id` computed by the current code, if any.
    pub fn cached(&self, id: &str) -> Option<&LedgerEntry> {
        let hash = code_hash();
        self.entries
            .iter()
            .find(|e| e.task_id == id && e.code_hash == hash && e.status == "Verified")
    }

    /// Replaces any entry for the same task.
    pub fn record(&mut self, run: &TaskRun) {
        self.entries.retain(|e| e.task_id != run.task_id);
        self.entries.push(LedgerEntry::from(run));
        self.entries.sort_by(|a, b| a.task_id.cmp(&b.task_id));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> ProveOptions {
        ProveOptions::default()
    }

    #[test]
    fn ids_unique() {
        let mut ids: Vec<_> = TASKS.iter().map(|t| t.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), TASKS.len());
        assert!(lookup_task("nope").is_err());
    }

    #[test]
    fn cheap_tasks_verify_and_negations_fail() {
        for id in ["meyerhoff_m8", "puiseux_106", "gj_max", "gj_dJ_positive", "delta_cut_bracket", "sysmin_supper"] {
            let r = run_task(id, &opts()).unwrap();
            assert!(r.result.is_verified(), "{id}: {:?}", r.result);
            let n = run_negated(id, &opts()).unwrap();
            assert!(!n.result.is_verified(), "{id} negated verified");
        }
    }

    #[test]
    fn ledger_round_trip() {
        let dir = std::env::temp_dir().join(format!("conedef-ledger-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("verify_ledger.json");
        let mut l = Ledger::load(&path).unwrap();
        assert!(l.entries.is_empty());
        let r = run_task("delta_cut_bracket", &opts()).unwrap();
        l.record(&r);
        l.record(&r);
        l.save(&path).unwrap();
        let back = Ledger::load(&path).unwrap();
        assert_eq!(back.entries.len(), 1);
        assert!(back.cached("delta_cut_bracket").is_some());
        assert_eq!(back.entries[0].code_hash.len(), 64);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
