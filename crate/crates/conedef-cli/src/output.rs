//! Human tables and JSON documents. Both modes print the same quantities;
//! tables round endpoints outward to `digits`, JSON keeps the exact doubles.

use std::collections::HashMap;
use std::io::Write;

use conedef::gates::GateReport;
use conedef::slopes::{CandidatePair, CosmeticCandidates, ShortSlopes, Slope};
use conedef::special::FunctionEntry;
use conedef::verify::{LedgerEntry, TaskRun, TASKS};
use conedef::Interval;
use serde_json::{json, Value};

const COSMETIC_CITATION: &str = "cosmetic-one-cusp";

pub struct Output {
    pub json: bool,
    pub digits: usize,
}

pub enum VerifyRow {
    Fresh(TaskRun),
    Cached(LedgerEntry),
}

impl VerifyRow {
    pub fn status(&self) -> &str {
        match self {
            VerifyRow::Fresh(r) => r.status_name(),
            VerifyRow::Cached(e) => &e.status,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            VerifyRow::Fresh(r) => {
                let mut v = serde_json::to_value(r).expect("task run serializes");
                v["status"] = json!(r.status_name());
                v["cached"] = json!(false);
                v
            }
            VerifyRow::Cached(e) => {
                let mut v = serde_json::to_value(e).expect("ledger entry serializes");
                v["cached"] = json!(true);
                v
            }
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

impl Output {
    fn iv(&self, x: Interval) -> String {
        x.to_string_digits(self.digits)
    }

    pub fn eval(&self, entry: &FunctionEntry, args: &[String], ys: &[Interval]) {
        if self.json {
            let a: serde_json::Map<_, _> =
                entry.args.iter().zip(args).map(|(n, v)| (n.to_string(), json!(v))).collect();
            let o: serde_json::Map<_, _> =
                entry.outputs.iter().zip(ys).map(|(n, y)| (n.to_string(), json!(y))).collect();
            print_json(&json!({
                "function": entry.name,
                "args": a,
                "outputs": o,
                "citation": entry.key,
            }));
            return;
        }
        let call = format!("{}({})", entry.name, args.join(", "));
        if ys.len() == 1 {
            println!("{call} = {}", self.iv(ys[0]));
        } else {
            println!("{call}:");
            for (n, y) in entry.outputs.iter().zip(ys) {
                println!("  {n} = {}", self.iv(*y));
            }
        }
        println!("citation: {}", entry.key);
    }

    pub fn gate(&self, r: &GateReport) {
        if self.json {
            print_json(&serde_json::to_value(r).expect("gate report serializes"));
            return;
        }
        println!("gate:     {}", r.gate_id);
        println!("status:   {:?}", r.status);
        println!("citation: {}", r.citation);
        if !r.inputs.is_empty() {
            println!("inputs:");
            for (k, v) in &r.inputs {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                println!("  {k} = {shown}");
            }
        }
        if !r.quantities.is_empty() {
            println!("quantities:");
            for (k, v) in &r.quantities {
                println!("  {k} = {}", self.iv(*v));
            }
        }
        for n in &r.notes {
            println!("note: {n}");
        }
    }

    fn slope_set(&self, name: &str, s: &ShortSlopes) {
        println!(
            "{name}: cutoff {}  |{name}| = {} ({} certain, {} on the boundary)",
            self.iv(s.cutoff),
            s.inside.len() + s.boundary.len(),
            s.inside.len(),
            s.boundary.len()
        );
    }

    fn pair_lines(&self, pairs: &[CandidatePair]) {
        // Each slope recurs in many pairs; format its length once.
        let mut shown: HashMap<Slope, String> = HashMap::new();
        let mut out = std::io::stdout().lock();
        for p in pairs {
            let l1 = shown.entry(p.s1).or_insert_with(|| self.iv(p.length1)).clone();
            let l2 = shown.entry(p.s2).or_insert_with(|| self.iv(p.length2));
            let flag = if p.certain { "" } else { "  boundary" };
            let _ = writeln!(out, "  {} {}  lengths {l1} {l2}{flag}", p.s1, p.s2);
        }
    }

    pub fn cosmetic(&self, c: &CosmeticCandidates, knot: bool) {
        let filtered = knot.then(|| c.knot_filtered());
        if self.json {
            let mut v = serde_json::to_value(c).expect("candidates serialize");
            v["s1_count"] = json!(c.s1.inside.len() + c.s1.boundary.len());
            v["s2_count"] = json!(c.s2.inside.len() + c.s2.boundary.len());
            if let Some(f) = &filtered {
                v["knot_filtered"] = json!(f);
            }
            v["citation"] = json!(COSMETIC_CITATION);
            print_json(&v);
            return;
        }
        self.slope_set("S1", &c.s1);
        self.slope_set("S2", &c.s2);
        println!("pairs ({}):", c.pairs.len());
        self.pair_lines(&c.pairs);
        if let Some(f) = &filtered {
            println!("knot-filtered pairs ({}):", f.len());
            self.pair_lines(f);
        }
        println!("citation: {COSMETIC_CITATION}");
    }

    pub fn task_list(&self) {
        if self.json {
            let v: Vec<Value> = TASKS
                .iter()
                .map(|t| json!({"task_id": t.id, "citation": t.citation, "statement": t.statement}))
                .collect();
            print_json(&json!(v));
            return;
        }
        for t in TASKS {
            println!("{:<24} {:<26} {}", t.id, t.citation, t.statement);
        }
    }

    pub fn verify(&self, rows: &[VerifyRow], negated: bool) {
        if self.json {
            let v: Vec<Value> = rows.iter().map(VerifyRow::to_json).collect();
            print_json(&json!({"negated": negated, "results": v}));
            return;
        }
        if negated {
            println!("checking strengthened claims; none may verify");
        }
        println!("{:<24} {:<15} {:>10} {:>6} {:>9}  citation", "task", "status", "boxes", "depth", "seconds");
        for r in rows {
            match r {
                VerifyRow::Fresh(t) => println!(
                    "{:<24} {:<15} {:>10} {:>6} {:>9.3}  {}",
                    t.task_id,
                    t.status_name(),
                    t.result.boxes_examined,
                    t.result.max_depth_used,
                    t.seconds,
                    t.citation
                ),
                VerifyRow::Cached(e) => {
                    let citation = TASKS.iter().find(|t| t.id == e.task_id).map_or("", |t| t.citation);
                    println!(
                        "{:<24} {:<15} {:>10} {:>6} {:>9.3}  {citation} (cached)",
                        e.task_id, e.status, e.boxes, "-", e.seconds
                    );
                }
            }
        }
    }
}
