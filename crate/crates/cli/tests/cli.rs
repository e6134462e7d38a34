use std::process::{Command, Output};

fn fibgold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibgold"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

#[test]
fn compute_alternate_92() {
    let out = fibgold(&["compute", "--algo", "alternate", "--n", "92"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "7540113804746346429");
}

#[test]
fn every_algorithm_agrees_at_64() {
    for algo in ["linear", "alternate", "threesquare", "takahashi", "golden", "rgolden", "binet"] {
        let out = fibgold(&["compute", "--algo", algo, "--n", "64"]);
        assert_eq!(stdout(&out), "10610209857723", "{algo}");
    }
}

#[test]
fn checked_overflow_exits_2() {
    let out = fibgold(&["compute", "--algo", "linear", "--n", "47", "--checked-bits", "32"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn binet_off_power_of_two_exits_2() {
    let out = fibgold(&["compute", "--algo", "binet", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mismatched_flags_exit_1() {
    let out = fibgold(&["compute", "--algo", "golden", "--n", "5", "--checked-bits", "64"]);
    assert_eq!(out.status.code(), Some(1));
    let out = fibgold(&["compute", "--algo", "alternate", "--n", "5", "--policy", "double"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flag_exits_1() {
    assert_eq!(fibgold(&["compute", "--bogus"]).status.code(), Some(1));
    assert_eq!(fibgold(&["compute", "--algo", "nope", "--n", "3"]).status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = fibgold(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("capacity"));
}

#[test]
fn capacity_both_directions() {
    assert_eq!(stdout(&fibgold(&["capacity", "--bits", "63"])), "91");
    assert_eq!(stdout(&fibgold(&["capacity", "--bits", "31"])), "45");
    assert_eq!(stdout(&fibgold(&["capacity", "--n", "256"])), "177");
    assert_eq!(fibgold(&["capacity"]).status.code(), Some(1));
    assert_eq!(fibgold(&["capacity", "--bits", "8", "--n", "8"]).status.code(), Some(1));
}

#[test]
fn lucas_and_general() {
    assert_eq!(stdout(&fibgold(&["lucas", "--n", "10"])), "123");
    assert_eq!(stdout(&fibgold(&["lucas", "--n", "10", "--via", "linear"])), "123");
    assert_eq!(stdout(&fibgold(&["general", "--l0", "2", "--l1", "1", "--n", "10"])), "123");
}

#[test]
fn probe_double_golden() {
    let out = fibgold(&["probe", "--mode", "f64", "--algo", "golden"]);
    assert_eq!(stdout(&out), "n_max=74 failure=mismatch delta=1");
    let out = fibgold(&["probe", "--mode", "i64", "--algo", "alternate"]);
    assert_eq!(stdout(&out), "n_max=92 failure=overflow delta=n/a");
}

#[test]
fn bench_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let out = fibgold(&[
        "bench", "--algos", "alternate,golden", "--n", "100,1000", "--reps", "3", "--format", "csv",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<_> = text.lines().collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[0].starts_with("algorithm,n,mode,reps"));
    assert!(rows[1].starts_with("alternate,100,exact,3,"));
}

#[test]
fn bench_rejects_too_few_reps() {
    let out = fibgold(&["bench", "--algos", "linear", "--n", "10", "--reps", "2", "--format", "jsonl"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_2000_passes() {
    let out = fibgold(&["verify", "--max-n", "2000"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("failed=0"));
}
