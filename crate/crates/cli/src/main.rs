//! Command-line surface for the exact counting and verification library:
//! single counts, sequences, verification suites, a conjecture checker,
//! three output formats, and an optional append-only result cache.

mod budget;
mod cache;
mod output;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use dellac_core::boards::restricted_coset_reps;
use dellac_core::dellac::{enumerate_dc, enumerate_spdc};
use dellac_core::flagfix::enumerate_fixed_chains;
use dellac_core::genocchi::{e_target, h_value};
use dellac_core::symplectic::symmetric_coset_reps;

use budget::{count_within, Deadline};
use cache::Cache;
use output::Format;
use report::{CountResult, Outcome, SeqResult, SeqRow, VerificationReport};

/// Exact counts and machine checks for Dellac-style configurations and
/// the Weyl group combinatorics attached to them.
#[derive(Parser)]
#[command(name = "dellac")]
struct Cli {
    /// Output format for the standard output stream.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Directory for the append-only result cache; falls back to the
    /// DELLAC_CACHE_DIR environment variable, and without either the
    /// cache is off.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Soft time budget in seconds; work not finished in time is
    /// reported unchecked instead of failing.
    #[arg(long, global = true, default_value_t = 300)]
    budget_seconds: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count one family at a single size.
    #[command(subcommand)]
    Count(CountTarget),
    /// Print a value sequence from index 0 up to an index.
    #[command(subcommand)]
    Seq(SeqTarget),
    /// Run a verification suite for every size up to a bound.
    #[command(subcommand)]
    Verify(VerifySuite),
    /// Check a conjectured count alignment up to a bound.
    #[command(subcommand)]
    Conjecture(ConjectureTarget),
}

#[derive(Subcommand)]
enum CountTarget {
    /// Dellac configurations of order n.
    Dc {
        #[arg(long)]
        n: usize,
    },
    /// Mirror-fixed Dellac configurations at half-rank n.
    Spdc {
        #[arg(long)]
        n: usize,
    },
    /// Minimal coset representatives below the staircase top element.
    WjTau {
        #[arg(long)]
        n: usize,
    },
    /// Mirror-fixed minimal coset representatives below the folded top
    /// element.
    WjTaubar {
        #[arg(long)]
        n: usize,
    },
    /// Subset chains encoding torus fixed points at rank n.
    FixedChains {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum SeqTarget {
    /// Configuration counts: the polynomial recursion evaluated at 1.
    H {
        #[arg(long)]
        max: usize,
    },
    /// Conjectured mirror-fixed counts: the companion recursion at 1.
    ETarget {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Hull criterion against the sorted-prefix Bruhat oracle.
    Sjostrand {
        #[arg(long)]
        n: usize,
    },
    /// Row-merge and row-split maps: round trip and image.
    MeltBlow {
        #[arg(long)]
        n: usize,
    },
    /// Letter embedding sends the folded top word to the top element.
    Kappa {
        #[arg(long)]
        n: usize,
    },
    /// Mirror-fixed configurations match mirror-fixed representatives.
    SymplecticTheorem {
        #[arg(long)]
        n: usize,
    },
    /// Configurations, representatives, and polynomial values match.
    GenocchiTheorem {
        #[arg(long)]
        n: usize,
    },
    /// Fixed-point chains biject onto configurations, case by case.
    Diagram {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ConjectureTarget {
    /// Mirror-fixed counts against the target series, both alignments.
    Sp {
        #[arg(long)]
        max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let deadline = Deadline::after_seconds(cli.budget_seconds);
    let mut cache = Cache::from_flag_or_env(cli.cache_dir.clone());
    let started = Instant::now();
    let mut outcome = match &cli.command {
        Command::Count(target) => run_count(target, &deadline, &mut cache),
        Command::Seq(target) => run_seq(target, &deadline, &mut cache),
        Command::Verify(suite) => run_verify(suite, &deadline, &mut cache),
        Command::Conjecture(target) => run_conjecture(target, &deadline, &mut cache),
    };
    let elapsed = started.elapsed().as_millis() as u64;
    if let Outcome::Report(report) = &mut outcome {
        report.elapsed_ms = elapsed;
    }
    print!("{}", output::render(&outcome, cli.format));
    eprintln!("{}: finished in {elapsed} ms", outcome.command());
    if outcome.failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_count(target: &CountTarget, deadline: &Deadline, cache: &mut Cache) -> Outcome {
    let (command, file, n) = match target {
        CountTarget::Dc { n } => ("count dc", "count-dc.jsonl", *n),
        CountTarget::Spdc { n } => ("count spdc", "count-spdc.jsonl", *n),
        CountTarget::WjTau { n } => ("count wj-tau", "count-wj-tau.jsonl", *n),
        CountTarget::WjTaubar { n } => ("count wj-taubar", "count-wj-taubar.jsonl", *n),
        CountTarget::FixedChains { n } => ("count fixed-chains", "count-fixed-chains.jsonl", *n),
    };
    let params = json!({ "n": n as u64 });
    if let Some(hit) = cache.lookup(file, &params) {
        if let Ok(result) = serde_json::from_value::<CountResult>(hit) {
            eprintln!("cache hit: {command} --n {n}");
            return Outcome::Count(result);
        }
    }
    let value = match target {
        CountTarget::Dc { .. } => count_within(enumerate_dc(n), deadline),
        CountTarget::Spdc { .. } => count_within(enumerate_spdc(n), deadline),
        CountTarget::WjTau { .. } => count_within(restricted_coset_reps(n), deadline),
        CountTarget::WjTaubar { .. } => count_within(symmetric_coset_reps(n), deadline),
        CountTarget::FixedChains { .. } => count_within(enumerate_fixed_chains(n), deadline),
    };
    if value.is_none() {
        eprintln!("warning: {command} --n {n} did not finish within the time budget");
    }
    let result = CountResult {
        command: command.to_string(),
        n: n as u64,
        value: value.map(|v| v.to_string()),
    };
    if result.value.is_some() {
        cache.store(file, &params, &result);
    }
    Outcome::Count(result)
}

fn run_seq(target: &SeqTarget, deadline: &Deadline, cache: &mut Cache) -> Outcome {
    let (command, file, max, value_of): (&str, &str, usize, fn(usize) -> String) = match target {
        SeqTarget::H { max } => ("seq h", "seq-h.jsonl", *max, |k| h_value(k).to_string()),
        SeqTarget::ETarget { max } => ("seq e-target", "seq-e-target.jsonl", *max, |k| {
            e_target(k).to_string()
        }),
    };
    let params = json!({ "max": max as u64 });
    if let Some(hit) = cache.lookup(file, &params) {
        if let Ok(result) = serde_json::from_value::<SeqResult>(hit) {
            eprintln!("cache hit: {command} --max {max}");
            return Outcome::Seq(result);
        }
    }
    let mut rows = Vec::new();
    for k in 0..=max {
        if deadline.expired() {
            eprintln!("warning: {command} stopped before index {k} by the time budget");
            break;
        }
        rows.push(SeqRow {
            n: k as u64,
            value: value_of(k),
        });
    }
    let complete = rows.len() == max + 1;
    let result = SeqResult {
        command: command.to_string(),
        max: max as u64,
        rows,
    };
    if complete {
        cache.store(file, &params, &result);
    }
    Outcome::Seq(result)
}

fn run_verify(suite: &VerifySuite, deadline: &Deadline, cache: &mut Cache) -> Outcome {
    let (file, n, runner): (&str, usize, fn(usize, &Deadline) -> VerificationReport) = match suite {
        VerifySuite::Sjostrand { n } => ("verify-sjostrand.jsonl", *n, verify::sjostrand),
        VerifySuite::MeltBlow { n } => ("verify-melt-blow.jsonl", *n, verify::melt_blow),
        VerifySuite::Kappa { n } => ("verify-kappa.jsonl", *n, verify::kappa),
        VerifySuite::SymplecticTheorem { n } => (
            "verify-symplectic-theorem.jsonl",
            *n,
            verify::symplectic_theorem,
        ),
        VerifySuite::GenocchiTheorem { n } => (
            "verify-genocchi-theorem.jsonl",
            *n,
            verify::genocchi_theorem,
        ),
        VerifySuite::Diagram { n } => ("verify-diagram.jsonl", *n, verify::diagram),
    };
    let params = json!({ "n": n as u64 });
    if let Some(hit) = cache.lookup(file, &params) {
        if let Ok(result) = serde_json::from_value::<VerificationReport>(hit) {
            eprintln!("cache hit: {} --n {n}", result.command);
            return Outcome::Report(result);
        }
    }
    let report = runner(n, deadline);
    if report.is_complete() {
        cache.store(file, &params, &report);
    }
    Outcome::Report(report)
}

fn run_conjecture(target: &ConjectureTarget, deadline: &Deadline, cache: &mut Cache) -> Outcome {
    let ConjectureTarget::Sp { max } = target;
    let params = json!({ "max": *max as u64 });
    if let Some(hit) = cache.lookup("conjecture-sp.jsonl", &params) {
        if let Ok(result) = serde_json::from_value::<VerificationReport>(hit) {
            eprintln!("cache hit: {} --max {max}", result.command);
            return Outcome::Report(result);
        }
    }
    let report = verify::conjecture_sp(*max, deadline);
    if report.is_complete() {
        cache.store("conjecture-sp.jsonl", &params, &report);
    }
    Outcome::Report(report)
}
