use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn rcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = rcm(args);
    assert!(
        out.status.success(),
        "rcm {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden_json(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn reorder_scrambled_path_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let perm = dir.path().join("p.txt");
    let input = data("path8_scrambled.mtx");
    let report = ok_json(&["reorder", "--input", s(&input), "--output", s(&perm)]);
    assert_eq!(report, golden_json("path8_scrambled.report.json"));
    assert_eq!(report["bandwidth_after"], 1);
    assert_eq!(
        std::fs::read_to_string(&perm).unwrap(),
        std::fs::read_to_string(data("path8_scrambled.perm")).unwrap()
    );
}

#[test]
fn reorder_identity_stays_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let perm = dir.path().join("p.txt");
    let permuted = dir.path().join("b.mtx");
    let input = data("identity3.mtx");
    let report = ok_json(&[
        "reorder",
        "--input",
        s(&input),
        "--output",
        s(&perm),
        "--permuted-matrix",
        s(&permuted),
    ]);
    assert_eq!(report["bandwidth_before"], 0);
    assert_eq!(report["bandwidth_after"], 0);
    assert_eq!(report["components"], 3);
    let mut labels: Vec<usize> = std::fs::read_to_string(&perm)
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    labels.sort_unstable();
    assert_eq!(labels, vec![0, 1, 2]);
    let again = ok_json(&["stats", "--input", s(&permuted)]);
    assert_eq!(again["bandwidth"], 0);
    assert_eq!(again["n"], 3);
}

#[test]
fn grid_run_writes_the_same_permutation() {
    let dir = tempfile::tempdir().unwrap();
    for input in ["path8_scrambled.mtx", "tridiag5.mtx", "identity3.mtx"] {
        let input = data(input);
        let serial = dir.path().join("serial.txt");
        let grid = dir.path().join("grid.txt");
        let trace = dir.path().join("trace.csv");
        let comm = dir.path().join("comm.json");
        ok_json(&["reorder", "--input", s(&input), "--output", s(&serial)]);
        ok_json(&[
            "reorder",
            "--input",
            s(&input),
            "--output",
            s(&grid),
            "--grid",
            "2",
            "--csv",
            s(&trace),
            "--comm-stats",
            s(&comm),
        ]);
        assert_eq!(
            std::fs::read_to_string(&serial).unwrap(),
            std::fs::read_to_string(&grid).unwrap()
        );
        let csv = std::fs::read_to_string(&trace).unwrap();
        assert_eq!(
            csv.lines().next(),
            Some("step,primitive,scope,messages,words")
        );
        let comm: Value = serde_json::from_str(&std::fs::read_to_string(&comm).unwrap()).unwrap();
        assert!(comm["messages"].as_u64().unwrap() > 0);
    }
}

#[test]
fn randomized_grid_run_still_reaches_bandwidth_one() {
    let input = data("path8_scrambled.mtx");
    let report = ok_json(&[
        "reorder",
        "--input",
        s(&input),
        "--grid",
        "2x3",
        "--randomize",
        "--seed",
        "11",
    ]);
    assert_eq!(report["bandwidth_after"], 1);
}

#[test]
fn stats_tridiagonal_matches_golden() {
    let input = data("tridiag5.mtx");
    let out = ok_json(&["stats", "--input", s(&input)]);
    assert_eq!(out, golden_json("tridiag5.stats.json"));
    assert_eq!(out["bandwidth"], 1);
    assert_eq!(out["envelope"], 4);
}

#[test]
fn stats_with_permutation_reports_after_values() {
    let input = data("path8_scrambled.mtx");
    let perm = data("path8_scrambled.perm");
    let out = ok_json(&["stats", "--input", s(&input), "--permutation", s(&perm)]);
    assert_eq!(out["bandwidth"], 6);
    assert_eq!(out["bandwidth_after"], 1);
    assert_eq!(out["envelope_after"], 7);
}

#[test]
fn stats_rejects_wrong_length_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let perm = dir.path().join("p.txt");
    std::fs::write(&perm, "0\n1\n2\n").unwrap();
    let input = data("tridiag5.mtx");
    let out = rcm(&["stats", "--input", s(&input), "--permutation", s(&perm)]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("permutation has 3 entries"));
}

#[test]
fn bench_rows_share_one_hash() {
    let input = data("path8_scrambled.mtx");
    let out = rcm(&["bench", "--input", s(&input), "--grid", "1,4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let header: Vec<&str> = lines[0].split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<&str>> = lines[1..].iter().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0][col("grid")], "1x1");
    assert_eq!(rows[1][col("grid")], "4x4");
    assert_eq!(rows[0][col("messages")], "0");
    assert_eq!(rows[0][col("perm_hash")], rows[1][col("perm_hash")]);
    assert_eq!(rows[0][col("iters")], rows[1][col("iters")]);
}

#[test]
fn bench_messages_nondecreasing_in_workers() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let input = data("path8_scrambled.mtx");
    let out = rcm(&[
        "bench",
        "--input",
        s(&input),
        "--grid",
        "1,2,3,4",
        "--alpha",
        "10",
        "--beta",
        "0.5",
        "--csv",
        s(&csv),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    let messages: Vec<u64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(messages.len(), 4);
    assert!(messages.windows(2).all(|w| w[0] <= w[1]), "{messages:?}");
}

#[test]
fn bad_inputs_exit_nonzero() {
    let missing = rcm(&["stats", "--input", "/nonexistent/x.mtx"]);
    assert!(!missing.status.success());
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mtx");
    std::fs::write(
        &bad,
        "%%MatrixMarket matrix coordinate pattern symmetric\n3 4 0\n",
    )
    .unwrap();
    let out = rcm(&["reorder", "--input", s(&bad)]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
    let grid = rcm(&["bench", "--input", s(&data("tridiag5.mtx")), "--grid", "0"]);
    assert!(!grid.status.success());
}
