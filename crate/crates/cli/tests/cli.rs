use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const EXAMPLE: &str = ".v a\n\nBEGIN\nT a\nH a\nS a\nT a\nT a\nH a\nT a\nEND\n";

fn rotmerge(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotmerge"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn workdir() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("example.qc"), EXAMPLE).unwrap();
    dir
}

fn t_lines(text: &str) -> usize {
    text.lines()
        .filter(|l| matches!(l.trim(), "T a" | "T* a"))
        .count()
}

#[test]
fn optimize_writes_the_merged_circuit() {
    let dir = workdir();
    let o = rotmerge(
        &[
            "optimize",
            "--method",
            "bbmerge",
            "--in",
            "example.qc",
            "--out",
            "bb.qc",
            "--stats-json",
            "bb.json",
        ],
        dir.path(),
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(
        t_lines(&fs::read_to_string(dir.path().join("bb.qc")).unwrap()),
        2
    );
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("bb.json")).unwrap()).unwrap();
    assert_eq!(json["pass"], "bbmerge");
    assert_eq!(json["t_count_before"], 4);
    assert_eq!(json["t_count_after"], 2);

    let o = rotmerge(&["optimize", "--in", "example.qc"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(t_lines(&stdout(&o)), 0);
}

#[test]
fn optimize_converts_to_qasm() {
    let dir = workdir();
    let o = rotmerge(
        &[
            "optimize",
            "--method",
            "tmerge",
            "--in",
            "example.qc",
            "--out",
            "out.qasm",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("out.qasm")).unwrap();
    assert!(text.starts_with("OPENQASM 2.0;"));
    let o = rotmerge(&["verify", "example.qc", "out.qasm"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = workdir();
    assert_eq!(
        rotmerge(&["optimize", "--in", "missing.qc"], dir.path())
            .status
            .code(),
        Some(2)
    );
    fs::write(dir.path().join("bad.qc"), ".v a\nBEGIN\nfoo a\nEND\n").unwrap();
    let o = rotmerge(&["stats", "--in", "bad.qc"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    fs::write(
        dir.path().join("pi8.qasm"),
        "OPENQASM 2.0;\nqreg q[1];\nrz(pi/8) q[0];\n",
    )
    .unwrap();
    let o = rotmerge(
        &["optimize", "--in", "pi8.qasm", "--out", "pi8.qc"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stats_and_rank_report_json() {
    let dir = workdir();
    let o = rotmerge(&["stats", "--in", "example.qc"], dir.path());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["t_count"], 4);
    assert_eq!(json["h_count"], 2);

    let o = rotmerge(
        &["rank", "--in", "example.qc", "--vector", "--extended"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["m"], 4);
    assert_eq!(json["h"], 2);
    assert_eq!(json["rank_A"], 2);
    assert!(json["rank_M"].is_u64());
    assert_eq!(json["v"]["v"], serde_json::json!([0, 1, 0, 1]));

    let o = rotmerge(&["rank", "--in", "example.qc"], dir.path());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(json.get("v").is_none() && json.get("rank_M").is_none());
}

#[test]
fn verify_reports_differences() {
    let dir = workdir();
    fs::write(dir.path().join("other.qc"), ".v a\nBEGIN\nT a\nEND\n").unwrap();
    let o = rotmerge(&["verify", "example.qc", "other.qc"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["equivalent"], false);
    assert_eq!(json["method"], "dense_unitary");
}

#[test]
fn bench_emits_fixed_csv_columns() {
    let dir = workdir();
    fs::write(
        dir.path().join("manifest.txt"),
        "# name, path\nexample.qc,Example,4\n\nmissing.qc\n",
    )
    .unwrap();
    let o = rotmerge(
        &[
            "bench",
            "--manifest",
            "manifest.txt",
            "--verify-max-qubits",
            "4",
            "--jobs",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("circuit,n,t_in,method,t_out,rz_out,checks,h,ms,verified")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    let t_out = |method: &str| {
        rows.iter()
            .find(|r| r[0] == "Example" && r[3] == method)
            .unwrap()[4]
    };
    assert_eq!(t_out("bbmerge"), "2");
    assert_eq!(t_out("fasttmerge"), "0");
    assert_eq!(t_out("tmerge"), "0");
    assert!(rows
        .iter()
        .filter(|r| r[0] == "Example")
        .all(|r| r[9] == "true" && r[7] == "2"));
    assert_eq!(rows[3][0], "missing");
    assert_eq!(rows[3][9], "error");

    let again = stdout(&rotmerge(
        &["bench", "--manifest", "manifest.txt"],
        dir.path(),
    ));
    let t_columns = |s: &str| {
        s.lines()
            .map(|l| l.split(',').take(5).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
    };
    assert_eq!(t_columns(&again), t_columns(&text));
}

#[test]
fn bench_markdown_and_empty_manifest() {
    let dir = workdir();
    fs::write(dir.path().join("m.txt"), "example.qc,Example,4\n").unwrap();
    let o = rotmerge(
        &[
            "bench",
            "--manifest",
            "m.txt",
            "--out",
            "md",
            "--methods",
            "bbmerge,fasttmerge",
        ],
        dir.path(),
    );
    let text = stdout(&o);
    assert!(text.starts_with("| Circuit | n | T-count | ref | bbmerge T |"));
    assert!(text.contains("| Example | 1 | 4 | 4 | 2 |"));

    fs::write(dir.path().join("empty.txt"), "").unwrap();
    let o = rotmerge(&["bench", "--manifest", "empty.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "circuit,n,t_in,method,t_out,rz_out,checks,h,ms,verified"
    );
}

#[test]
fn bench_time_budget_skips_remaining_work() {
    let dir = workdir();
    fs::write(dir.path().join("m.txt"), "example.qc\nexample.qc,again\n").unwrap();
    let o = rotmerge(
        &["bench", "--manifest", "m.txt", "--time-budget-secs", "0"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with("skipped")));
}
