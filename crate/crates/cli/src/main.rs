//! `rotmerge` command-line tool.
//!
//! Exit codes: 0 on success, 1 when `verify` finds the circuits differ,
//! 2 on unreadable or unsupported input, 3 on an internal failure.

mod bench;
mod io;

use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rotmerge::circuit::stats;
use rotmerge::merge::MergePass;
use rotmerge::rotation::{
    extended_commutativity_matrix, rank_vector, RankVector, RotationSequence,
};
use rotmerge::verify::equivalent_up_to_phase;
use serde::Serialize;

use io::{read_circuit, render_circuit, write_file, Format};

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "rotmerge",
    version,
    about = "Merge Pauli rotations in Clifford+Rz circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a merge pass and write the optimized circuit.
    Optimize(OptimizeArgs),
    /// Print gate counts as JSON.
    Stats(InputArgs),
    /// Print commutativity-matrix ranks and the rank vector as JSON.
    Rank(RankArgs),
    /// Check two circuits for equality up to global phase.
    Verify(VerifyArgs),
    /// Run passes over a manifest of circuits and print a report.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long, default_value = "fasttmerge", value_parser = parse_pass)]
    method: MergePass,
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
    #[arg(long, value_name = "FILE")]
    stats_json: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also report the rank of the extended commutativity matrix.
    #[arg(long)]
    extended: bool,
    /// Include the rank vector itself.
    #[arg(long)]
    vector: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_name = "FIRST")]
    first: PathBuf,
    #[arg(value_name = "SECOND")]
    second: PathBuf,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Random parameter assignments for parametrized circuits.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Md,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_name = "FILE")]
    manifest: PathBuf,
    #[arg(long, value_delimiter = ',', value_parser = parse_pass, default_value = "bbmerge,fasttmerge,tmerge")]
    methods: Vec<MergePass>,
    /// Verify outputs of circuits with at most this many qubits (0 = off).
    #[arg(long, default_value_t = 0)]
    verify_max_qubits: usize,
    #[arg(long, value_enum, default_value = "csv")]
    out: ReportFormat,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Stop starting new work once this many seconds have passed.
    #[arg(long)]
    time_budget_secs: Option<f64>,
}

fn parse_pass(s: &str) -> Result<MergePass, String> {
    s.parse()
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text =
        serde_json::to_string_pretty(value).map_err(|e| CliError::internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn optimize(args: OptimizeArgs) -> Result<u8, CliError> {
    let circuit = read_circuit(&args.input, args.format)?;
    let outcome = args.method.run(&circuit);
    let out_format = match (&args.out, args.format) {
        (Some(p), f) => f.resolve(Some(p)),
        (None, Format::Auto) => Format::Auto.resolve(Some(&args.input)),
        (None, f) => f,
    };
    let text = render_circuit(&outcome.circuit, out_format)?;
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    if let Some(path) = &args.stats_json {
        let json = serde_json::to_string_pretty(&outcome)
            .map_err(|e| CliError::internal(e.to_string()))?;
        write_file(path, &json)?;
    }
    eprintln!(
        "{}: T {} -> {}, {} rotations left, {} checks, {:.3} ms",
        outcome.pass,
        outcome.t_count_before,
        outcome.t_count_after,
        outcome.rz_count_after,
        outcome.checks,
        outcome.wall_time_ms
    );
    Ok(0)
}

#[derive(Serialize)]
struct RankReport {
    m: usize,
    h: usize,
    #[serde(rename = "rank_A")]
    rank_a: usize,
    #[serde(rename = "rank_M", skip_serializing_if = "Option::is_none")]
    rank_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<RankVector>,
}

fn rank(args: RankArgs) -> Result<u8, CliError> {
    let circuit = read_circuit(&args.input.input, args.input.format)?;
    let seq = RotationSequence::extract(&circuit);
    let v = rank_vector(&seq);
    let report = RankReport {
        m: seq.len(),
        h: v.h(),
        rank_a: seq.commutativity_matrix().rank(),
        rank_m: args
            .extended
            .then(|| extended_commutativity_matrix(&circuit).rank()),
        v: args.vector.then_some(v),
    };
    if report.h != report.rank_a {
        return Err(CliError::internal(format!(
            "|v| = {} but rank(A) = {}",
            report.h, report.rank_a
        )));
    }
    print_json(&report)?;
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8, CliError> {
    let a = read_circuit(&args.first, args.format)?;
    let b = read_circuit(&args.second, args.format)?;
    let report = equivalent_up_to_phase(&a, &b, args.tol, args.samples)
        .map_err(|e| CliError::input(e.to_string()))?;
    print_json(&report)?;
    Ok(if report.equivalent { 0 } else { 1 })
}

fn run_bench(args: BenchArgs) -> Result<u8, CliError> {
    let text = std::fs::read_to_string(&args.manifest)
        .map_err(|e| CliError::input(format!("{}: {e}", args.manifest.display())))?;
    let base = args.manifest.parent().unwrap_or(Path::new("."));
    let entries = bench::parse_manifest(&text, base);
    let config = bench::BenchConfig {
        methods: args.methods.clone(),
        verify_max_qubits: args.verify_max_qubits,
        budget: args.time_budget_secs.map(Duration::from_secs_f64),
    };
    let rows = bench::run(&entries, &config, args.jobs)?;
    match args.out {
        ReportFormat::Csv => print!("{}", bench::to_csv(&rows)?),
        ReportFormat::Md => print!("{}", bench::to_markdown(&rows, &args.methods)),
    }
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Optimize(a) => optimize(a),
        Command::Stats(a) => {
            let circuit = read_circuit(&a.input, a.format)?;
            print_json(&stats(&circuit))?;
            Ok(0)
        }
        Command::Rank(a) => rank(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => run_bench(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli))) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(e)) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(3)
        }
    }
}
