//! End-to-end tests of the command-line interface: exit codes, report
//! formats, determinism, and the eval verbs.

use combid::identities::EvalRecord;
use std::process::{Command, Output};

fn combid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_combid"))
        .args(args)
        .env_remove("COMBID_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_path(name: &str) -> std::path::PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("combid-test-{}-{}", std::process::id(), name));
    p
}

#[test]
fn list_prints_one_row_per_registry_entry() {
    let out = combid(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 29);
    let eq08 = rows
        .iter()
        .find(|r| r.starts_with("eq08_binomial1"))
        .unwrap();
    assert!(eq08.contains("numeric,exact"));
    let fd21 = rows.iter().find(|r| r.starts_with("fd_eq21")).unwrap();
    assert!(fd21.contains(" fd "));
    assert!(rows.iter().any(|r| r.starts_with("eq38_harmonictrad1")));
}

#[test]
fn verify_unknown_id_is_a_usage_error() {
    let out = combid(&["verify", "--id", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_zero_samples_is_a_usage_error() {
    let out = combid(&["verify", "--id", "eq12", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unwritable_report_is_a_usage_error() {
    let out = combid(&[
        "verify",
        "--id",
        "eq12",
        "--samples",
        "5",
        "--report",
        "/nonexistent-dir/report.jsonl",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhaustive_exact_sweep_of_the_squares_pair() {
    let report = tmp_path("eq12.jsonl");
    let out = combid(&[
        "verify",
        "--id",
        "eq12",
        "--mode",
        "exact",
        "--n-max",
        "60",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = std::fs::read_to_string(&report).unwrap();
    let records: Vec<EvalRecord> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 61);
    assert!(records
        .iter()
        .all(|r| matches!(r.status, combid::identities::Status::Pass)));
    std::fs::remove_file(&report).ok();
}

#[test]
fn n_max_rejected_for_multi_symbol_specs() {
    let out = combid(&["verify", "--id", "eq08", "--mode", "exact", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_for_identical_configs() {
    let r1 = tmp_path("det1.jsonl");
    let r2 = tmp_path("det2.jsonl");
    for r in [&r1, &r2] {
        let out = combid(&[
            "verify",
            "--id",
            "eq09",
            "--samples",
            "40",
            "--seed",
            "7",
            "--report",
            r.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let b1 = std::fs::read(&r1).unwrap();
    let b2 = std::fs::read(&r2).unwrap();
    assert_eq!(b1, b2);
    assert!(!b1.is_empty());
    std::fs::remove_file(&r1).ok();
    std::fs::remove_file(&r2).ok();
}

#[test]
fn seed_changes_the_records() {
    let r1 = tmp_path("seed0.jsonl");
    let r2 = tmp_path("seed1.jsonl");
    for (r, seed) in [(&r1, "0"), (&r2, "1")] {
        let out = combid(&[
            "verify",
            "--id",
            "eq09",
            "--samples",
            "20",
            "--seed",
            seed,
            "--report",
            r.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_ne!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
    std::fs::remove_file(&r1).ok();
    std::fs::remove_file(&r2).ok();
}

#[test]
fn env_seed_is_the_default() {
    let r1 = tmp_path("env1.jsonl");
    let r2 = tmp_path("env2.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_combid"))
        .args([
            "verify",
            "--id",
            "eq09",
            "--samples",
            "20",
            "--report",
            r1.to_str().unwrap(),
        ])
        .env("COMBID_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = combid(&[
        "verify",
        "--id",
        "eq09",
        "--samples",
        "20",
        "--seed",
        "12345",
        "--report",
        r2.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
    std::fs::remove_file(&r1).ok();
    std::fs::remove_file(&r2).ok();
}

#[test]
fn json_lines_round_trip_losslessly() {
    let report = tmp_path("round.jsonl");
    let out = combid(&[
        "verify",
        "--id",
        "eq22",
        "--samples",
        "30",
        "--seed",
        "9",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&report).unwrap();
    for line in text.lines() {
        let rec: EvalRecord = serde_json::from_str(line).unwrap();
        let again = serde_json::to_string(&rec).unwrap();
        assert_eq!(line, again, "round trip changed the record");
    }
    std::fs::remove_file(&report).ok();
}

#[test]
fn csv_report_shape() {
    let report = tmp_path("report.csv");
    let out = combid(&[
        "verify",
        "--id",
        "eq08",
        "--samples",
        "10",
        "--seed",
        "3",
        "--format",
        "csv",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&report).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,sample,mode,status,assignment,lhs,rhs,abs_err,rel_err,condition,note"
    );
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 10);
    for line in &body {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 11, "line: {line}");
        // complex assignment values use the 17-significant-digit re+imi form
        let x_entry = fields[4]
            .split(';')
            .find(|e| e.starts_with("x="))
            .unwrap_or_else(|| panic!("no x in {line}"));
        assert!(x_entry.ends_with('i') && x_entry.contains('e'), "{x_entry}");
    }
    std::fs::remove_file(&report).ok();
}

#[test]
fn domain_overrides_apply_and_validate() {
    let out = combid(&[
        "verify",
        "--id",
        "eq12",
        "--mode",
        "exact",
        "--samples",
        "30",
        "--domain",
        "n=5:5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = combid(&["verify", "--id", "eq12", "--domain", "zz=1:2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = combid(&[
        "verify",
        "--id",
        "eq08",
        "--samples",
        "10",
        "--domain",
        "x=0.5:1.5,0.5:1.5",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unsupported_mode_is_reported_not_an_error() {
    let out = combid(&[
        "verify",
        "--id",
        "fd_eq21",
        "--mode",
        "numeric",
        "--samples",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mode unsupported"));
}

#[test]
fn eval_binomial_and_genharmonic() {
    let out = combid(&["eval", "binomial", "4,0", "2,0"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 6.0).abs() < 1e-12);

    let out = combid(&["eval", "genharmonic", "0,0", "3", "1,0"]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 11.0 / 6.0).abs() < 1e-14);
}

#[test]
fn eval_proddiff_matches_both_sides() {
    let out = combid(&[
        "eval", "proddiff", "--x", "3,0", "--y", "2,0", "--z", "0,0", "0,0", "--w", "1,0", "1,0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lhs 5"), "{text}");
    assert!(text.contains("rhs 5"), "{text}");
    let rel: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("reldiff "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(rel < 1e-12);
}

#[test]
fn eval_domain_errors_exit_1_with_the_error_name() {
    let out = combid(&["eval", "gamma", "--", "-3,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole"));

    let out = combid(&["eval", "fallingproduct", "1,1", "--", "2", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("domain"));
}

#[test]
fn eval_usage_errors_exit_2() {
    let out = combid(&["eval", "nosuchfn", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = combid(&["eval", "binomial", "4,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = combid(&["eval", "binomial", "4", "2,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_1_iff_a_record_fails() {
    // an impossible tolerance forces failures without touching the math
    let out = combid(&[
        "verify",
        "--id",
        "eq08",
        "--samples",
        "10",
        "--seed",
        "1",
        "--tolerance",
        "1e-30",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
