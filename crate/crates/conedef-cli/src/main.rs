mod gate;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conedef::gates::Real;
use conedef::slopes::{cosmetic_candidates, CuspFile};
use conedef::special::lookup_function;
use conedef::verify::{run_negated, run_task, Ledger, TASKS};
use conedef::{Interval, ProveOptions};

use output::Output;

/// Exit status for an error of any kind; 0, 1 and 2 carry gate outcomes.
const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "conedef", version, about = "Rigorous bounds for hyperbolic Dehn filling and drilling")]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Significant digits shown for interval endpoints.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..=17))]
    digits: u16,
    /// Maximum subdivision depth for verification tasks.
    #[arg(long, global = true, default_value_t = 60, value_parser = clap::value_parser!(u32).range(1..))]
    depth: u32,
    /// Worker threads for verification tasks.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a special function on decimal arguments.
    Eval {
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Decide a theorem's hypotheses and report what it certifies.
    Gate(gate::GateArgs),
    /// List the slope pairs a cosmetic-surgery search must examine.
    Cosmetic(CosmeticArgs),
    /// Run the interval-arithmetic certification tasks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CosmeticArgs {
    /// Cusp JSON file: {cusps: [{meridian: [re, im], longitude: [re, im]}], sys, vol, V}.
    file: PathBuf,
    /// Overrides the file's systole.
    #[arg(long)]
    sys: Option<String>,
    /// Overrides the file's volume.
    #[arg(long)]
    vol: Option<String>,
    /// Overrides the file's lower volume bound.
    #[arg(long = "V")]
    v: Option<String>,
    /// Index of the cusp to search.
    #[arg(long, default_value_t = 0)]
    cusp: usize,
    /// Also list pairs surviving the knot-complement filter `p | q^2 + 1`.
    #[arg(long)]
    knot: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Task to run.
    #[arg(long, conflicts_with = "all", required_unless_present_any = ["all", "list"])]
    task: Option<String>,
    /// Run every task.
    #[arg(long)]
    all: bool,
    /// List task ids and statements.
    #[arg(long)]
    list: bool,
    /// Check the strictly stronger, false claim instead; it must not verify.
    #[arg(long)]
    margin_tighten: bool,
    /// Ledger of results.
    #[arg(long, default_value = "verify_ledger.json")]
    ledger: PathBuf,
    /// Reuse verified ledger entries produced by the same code.
    #[arg(long)]
    cached: bool,
}

/// Exact decimal, widened outward only by the final rounding.
fn parse_decimal(text: &str) -> Result<Interval, String> {
    Real::parse(text).map(|r| r.iv()).map_err(|e| e.to_string())
}

fn cmd_eval(out: &Output, name: &str, args: &[String]) -> Result<u8, String> {
    let entry = lookup_function(name).map_err(|e| e.to_string())?;
    if args.len() != entry.arity() {
        return Err(format!(
            "{name} takes {} argument(s): {}",
            entry.arity(),
            entry.args.join(", ")
        ));
    }
    let xs = args.iter().map(|a| parse_decimal(a)).collect::<Result<Vec<_>, _>>()?;
    let ys = (entry.eval)(&xs).map_err(|e| e.to_string())?;
    out.eval(entry, args, &ys);
    Ok(0)
}

fn cmd_cosmetic(out: &Output, a: &CosmeticArgs) -> Result<u8, String> {
    let text = std::fs::read_to_string(&a.file).map_err(|e| format!("{}: {e}", a.file.display()))?;
    let file = CuspFile::from_json(&text).map_err(|e| format!("{}: {e}", a.file.display()))?;
    let cusp = file
        .cusps
        .get(a.cusp)
        .ok_or_else(|| format!("{}: no cusp {}", a.file.display(), a.cusp))?;
    let pick = |o: &Option<String>, base: Real| -> Result<Interval, String> {
        match o {
            Some(t) => parse_decimal(t),
            None => Ok(base.iv()),
        }
    };
    let sys = pick(&a.sys, file.sys)?;
    let vol = pick(&a.vol, file.vol)?;
    let v = pick(&a.v, file.v)?;
    let c = cosmetic_candidates(cusp, sys, vol, v).map_err(|e| e.to_string())?;
    out.cosmetic(&c, a.knot);
    Ok(0)
}

fn cmd_verify(out: &Output, a: &VerifyArgs, opts: &ProveOptions) -> Result<u8, String> {
    if a.list {
        out.task_list();
        return Ok(0);
    }
    let ids: Vec<&str> = if a.all {
        TASKS.iter().map(|t| t.id).collect()
    } else {
        vec![a.task.as_deref().expect("clap requires --task")]
    };
    let mut ledger = Ledger::load(&a.ledger).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for id in ids {
        if a.cached && !a.margin_tighten {
            if let Some(e) = ledger.cached(id) {
                rows.push(output::VerifyRow::Cached(e.clone()));
                continue;
            }
        }
        let run = if a.margin_tighten { run_negated(id, opts) } else { run_task(id, opts) };
        let run = run.map_err(|e| format!("{id}: {e}"))?;
        if !a.margin_tighten {
            ledger.record(&run);
        }
        rows.push(output::VerifyRow::Fresh(run));
    }
    if !a.margin_tighten {
        ledger.save(&a.ledger).map_err(|e| e.to_string())?;
    }
    let all_verified = rows.iter().all(|r| r.status() == "Verified");
    out.verify(&rows, a.margin_tighten);
    Ok(if all_verified { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    let out = Output { json: cli.json, digits: cli.digits as usize };
    let opts = ProveOptions { max_depth: cli.depth, workers: cli.workers as usize, ..ProveOptions::default() };
    let result = match &cli.command {
        Command::Eval { name, args } => cmd_eval(&out, name, args),
        Command::Gate(g) => gate::run(&out, g),
        Command::Cosmetic(c) => cmd_cosmetic(&out, c),
        Command::Verify(v) => cmd_verify(&out, v, &opts),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
