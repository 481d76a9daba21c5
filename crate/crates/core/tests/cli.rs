//! The `verify` command: exit codes, formats, output files, determinism.

use std::path::PathBuf;
use std::process::Command;

use antisym::cli::main_with_args;
use antisym::prover::Status;
use antisym::report::{exit, RunReport};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn verify(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = ["antisym", "verify"].iter().chain(args).map(|s| s.to_string());
    let code = main_with_args(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("antisym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    let _ = std::fs::remove_file(&p);
    p
}

#[test]
fn all_claims_verify() {
    let r = verify(&["--all"]);
    assert_eq!(r.code, exit::VERIFIED, "{}", r.stderr);
    let report = RunReport::from_json(&r.stdout).unwrap();
    assert_eq!(report.claims.len(), 20);
    assert!(report.claims.iter().all(|c| c.status == Status::Verified));
    assert_eq!(report.summary.verified, 20);
    let ids: Vec<_> = report.claims.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn exit_codes_follow_the_worst_status() {
    assert_eq!(verify(&["--claim", "C04", "--inject", "C04=verified"]).code, exit::VERIFIED);
    assert_eq!(verify(&["--claim", "C04", "--inject", "C04=failed"]).code, exit::FAILED);
    assert_eq!(verify(&["--claim", "C04", "--inject", "C04=undecided"]).code, exit::UNDECIDED);
    let mixed = verify(&["--claim", "C04", "--claim", "C10", "--inject", "C04=undecided", "--inject", "C10=failed"]);
    assert_eq!(mixed.code, exit::FAILED);
}

#[test]
fn undecided_dependency_makes_composition_undecided() {
    let r = verify(&["--claim", "C19", "--inject", "C03=undecided"]);
    assert_eq!(r.code, exit::UNDECIDED);
    let report = RunReport::from_json(&r.stdout).unwrap();
    assert_eq!(report.claims.len(), 1);
    assert_eq!(report.claims[0].status, Status::Undecided);
    assert_eq!(report.claims[0].check("dependency C03").unwrap().status, Status::Undecided);
}

#[test]
fn usage_errors() {
    for args in [
        &[][..],
        &["--all", "--claim", "C01"],
        &["--claim", "C99"],
        &["--all", "--delta", "0"],
        &["--all", "--delta", "abc"],
        &["--all", "--max-depth", "3"],
        &["--all", "--mode", "extended", "--prec", "16"],
        &["--all", "--format", "xml"],
        &["--all", "--inject", "C01"],
        &["--all", "--inject", "C01=maybe"],
    ] {
        let r = verify(args);
        assert_eq!(r.code, exit::USAGE, "{args:?}");
        assert!(!r.stderr.is_empty(), "{args:?}");
        assert!(r.stdout.is_empty(), "{args:?}");
    }
    let r = verify(&["--claim", "C99"]);
    assert!(r.stderr.contains("C99"), "{}", r.stderr);
}

#[test]
fn usage_error_writes_no_file() {
    let path = scratch("bad.json");
    let r = verify(&["--claim", "C99", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, exit::USAGE);
    assert!(!path.exists());
}

#[test]
fn report_goes_to_the_out_file() {
    let path = scratch("c04.json");
    let r = verify(&["--claim", "C04", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, exit::VERIFIED);
    assert!(r.stdout.is_empty());
    let report = RunReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.claims[0].id, "C04");
}

#[test]
fn text_format() {
    let r = verify(&["--claim", "C04", "--format", "text"]);
    assert_eq!(r.code, exit::VERIFIED);
    let lines: Vec<_> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 2, "{}", r.stdout);
    assert!(lines[0].starts_with("C04  verified  EXACT_POLY"));
    assert!(lines[1].starts_with("summary: 1 verified, 0 failed, 0 undecided"));
}

#[test]
fn json_round_trips() {
    let r = verify(&["--claim", "C11", "--claim", "C20"]);
    let report = RunReport::from_json(&r.stdout).unwrap();
    assert_eq!(report.to_json(), r.stdout);
    assert_eq!(report.config.delta.to_string(), "1/10000");
}

#[test]
fn options_reach_the_report() {
    let r = verify(&["--claim", "C03", "--max-depth", "30", "--mode", "extended", "--prec", "192", "--delta", "1e-3"]);
    assert_eq!(r.code, exit::VERIFIED, "{}", r.stderr);
    let report = RunReport::from_json(&r.stdout).unwrap();
    assert_eq!(report.config.max_depth, 30);
    assert_eq!(report.config.delta.to_string(), "1/1000");
    assert_eq!(report.config.precision.len(), 2);
    assert_eq!(report.claims[0].precision.to_string(), "extended(192)");
}

#[test]
fn repeated_runs_are_identical_apart_from_timing() {
    let a = verify(&["--all"]);
    let b = verify(&["--all"]);
    let a = RunReport::from_json(&a.stdout).unwrap().without_timing();
    let b = RunReport::from_json(&b.stdout).unwrap().without_timing();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_antisym");
    let ok = Command::new(bin).args(["verify", "--claim", "C10", "--format", "text"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("C10  verified"));
    let bad = Command::new(bin).args(["verify", "--claim", "C99"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(64));
    let failed = Command::new(bin).args(["verify", "--claim", "C10", "--inject", "C10=failed"]).output().unwrap();
    assert_eq!(failed.status.code(), Some(1));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
