//! Batch runs over a manifest of circuits.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rotmerge::circuit::stats;
use rotmerge::merge::MergePass;
use rotmerge::rotation::{rank_vector, RotationSequence};
use rotmerge::verify::equivalent_up_to_phase;
use serde::Serialize;

use crate::io::{read_circuit, Format};
use crate::CliError;

pub const CSV_HEADER: [&str; 10] = [
    "circuit", "n", "t_in", "method", "t_out", "rz_out", "checks", "h", "ms", "verified",
];

const VERIFY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct ManifestEntry {
    pub path: PathBuf,
    pub name: String,
    /// Externally reported T-count, shown in the markdown table only.
    pub reference: Option<String>,
}

/// Lines are `path[,name[,reference]]`; blank lines and `#` comments are
/// skipped and relative paths resolve against the manifest's directory.
pub fn parse_manifest(text: &str, base: &Path) -> Vec<ManifestEntry> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let mut fields = line.split(',').map(str::trim);
            let raw = fields.next().unwrap_or_default();
            let path = if Path::new(raw).is_absolute() {
                PathBuf::from(raw)
            } else {
                base.join(raw)
            };
            let name = fields
                .next()
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .unwrap_or_else(|| {
                    path.file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| raw.to_string())
                });
            let reference = fields.next().filter(|s| !s.is_empty()).map(str::to_string);
            ManifestEntry {
                path,
                name,
                reference,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodResult {
    pub method: MergePass,
    pub t_out: usize,
    pub rz_out: usize,
    pub checks: u64,
    pub ms: f64,
    pub verified: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub circuit: String,
    pub reference: Option<String>,
    pub n: Option<usize>,
    pub t_in: Option<usize>,
    pub h: Option<usize>,
    pub parse_ms: Option<f64>,
    pub results: Vec<MethodResult>,
    /// Set when the circuit could not be run; the message goes in the
    /// `verified` column.
    pub status: Option<String>,
}

pub struct BenchConfig {
    pub methods: Vec<MergePass>,
    pub verify_max_qubits: usize,
    pub budget: Option<Duration>,
}

fn run_one(entry: &ManifestEntry, config: &BenchConfig, started: Instant) -> BenchRow {
    let mut row = BenchRow {
        circuit: entry.name.clone(),
        reference: entry.reference.clone(),
        n: None,
        t_in: None,
        h: None,
        parse_ms: None,
        results: Vec::new(),
        status: None,
    };
    if config.budget.is_some_and(|b| started.elapsed() > b) {
        row.status = Some("skipped".into());
        return row;
    }
    let parse_start = Instant::now();
    let circuit = match read_circuit(&entry.path, Format::Auto) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}: {}", entry.name, e.message);
            row.status = Some("error".into());
            return row;
        }
    };
    row.parse_ms = Some(parse_start.elapsed().as_secs_f64() * 1e3);
    row.n = Some(circuit.n_qubits());
    row.t_in = Some(stats(&circuit).t_count);
    row.h = Some(rank_vector(&RotationSequence::extract(&circuit)).h());
    for &method in &config.methods {
        if config.budget.is_some_and(|b| started.elapsed() > b) {
            row.status = Some("skipped".into());
            break;
        }
        let out = method.run(&circuit);
        let verified = (circuit.n_qubits() <= config.verify_max_qubits).then(|| {
            equivalent_up_to_phase(&circuit, &out.circuit, VERIFY_TOLERANCE, 3)
                .map(|r| r.equivalent)
                .unwrap_or(false)
        });
        row.results.push(MethodResult {
            method,
            t_out: out.t_count_after,
            rz_out: out.rz_count_after,
            checks: out.checks,
            ms: out.wall_time_ms,
            verified,
        });
    }
    row
}

/// Runs every manifest entry, in parallel across circuits when `jobs > 1`.
/// Rows come back in manifest order.
pub fn run(
    entries: &[ManifestEntry],
    config: &BenchConfig,
    jobs: usize,
) -> Result<Vec<BenchRow>, CliError> {
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::internal(e.to_string()))?;
    Ok(pool.install(|| {
        entries
            .par_iter()
            .map(|e| run_one(e, config, started))
            .collect()
    }))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn verified_cell(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

pub fn to_csv(rows: &[BenchRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::internal(e.to_string());
    w.write_record(CSV_HEADER).map_err(fail)?;
    for row in rows {
        let base = [row.circuit.clone(), opt(row.n), opt(row.t_in)];
        for r in &row.results {
            w.write_record(base.iter().cloned().chain([
                r.method.to_string(),
                r.t_out.to_string(),
                r.rz_out.to_string(),
                r.checks.to_string(),
                opt(row.h),
                format!("{:.3}", r.ms),
                verified_cell(r.verified).to_string(),
            ]))
            .map_err(fail)?;
        }
        if let Some(status) = &row.status {
            w.write_record(base.iter().cloned().chain([
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                opt(row.h),
                String::new(),
                status.clone(),
            ]))
            .map_err(fail)?;
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::internal(e.to_string()))
}

/// One row per circuit, one T-count and time column pair per method.
pub fn to_markdown(rows: &[BenchRow], methods: &[MergePass]) -> String {
    let mut out = String::from("| Circuit | n | T-count | ref |");
    for m in methods {
        let _ = write!(out, " {m} T | {m} ms |");
    }
    out.push_str(" h | parse ms | verified |\n|---|---:|---:|---:|");
    for _ in methods {
        out.push_str("---:|---:|");
    }
    out.push_str("---:|---:|---|\n");
    for row in rows {
        let _ = write!(
            out,
            "| {} | {} | {} | {} |",
            row.circuit,
            opt(row.n),
            opt(row.t_in),
            opt(row.reference.as_ref())
        );
        for m in methods {
            match row.results.iter().find(|r| r.method == *m) {
                Some(r) => {
                    let _ = write!(out, " {} | {:.3} |", r.t_out, r.ms);
                }
                None => out.push_str(" - | - |"),
            }
        }
        let verified = match &row.status {
            Some(s) => s.clone(),
            None => {
                let v: Vec<&str> = row
                    .results
                    .iter()
                    .map(|r| verified_cell(r.verified))
                    .filter(|s| !s.is_empty())
                    .collect();
                if v.is_empty() {
                    String::new()
                } else if v.iter().all(|s| *s == "true") {
                    "true".into()
                } else {
                    "false".into()
                }
            }
        };
        let parse = row.parse_ms.map(|p| format!("{p:.3}")).unwrap_or_default();
        let _ = writeln!(out, " {} | {parse} | {verified} |", opt(row.h));
    }
    out
}
