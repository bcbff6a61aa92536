//! The `avdecode` command-line tool: outputs and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.conf"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn avdecode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avdecode")).args(args).output().unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn build(config: &str, out: &str) -> PathBuf {
    let tables = scratch(out);
    let output = avdecode(&["build", "--config", fixture(config).to_str().unwrap(), "--out", tables.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "{}", String::from_utf8_lossy(&output.stderr));
    tables
}

#[test]
fn build_decode_and_verify_a_single_error_code() {
    let tables = build("sdg_surface1_f4", "surface1.tables");
    let tables = tables.to_str().unwrap();

    let verify = avdecode(&["verify", "--tables", tables]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout(&verify).starts_with("97 ok"), "{}", stdout(&verify));

    let decoded = avdecode(&["decode", "--tables", tables, "--syndrome", "0,0,0,0"]);
    assert_eq!(decoded.status.code(), Some(0));
    assert!(stdout(&decoded).starts_with("status: no_error\n"));

    let word = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,g";
    let decoded = avdecode(&["decode", "--tables", tables, "--word", word]);
    assert_eq!(decoded.status.code(), Some(0));
    let text = stdout(&decoded);
    assert!(text.contains("status: corrected\n"), "{text}");
    assert!(text.contains("error: position 32 "), "{text}");
    assert!(text.contains("value g\n"), "{text}");
    assert!(text.contains(&format!("corrected: {}\n", vec!["0"; 32].join(","))), "{text}");
}

#[test]
fn roundtrip_reports_identical_tables() {
    let output = avdecode(&["roundtrip", "--config", fixture("norm_trace_f8").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("round trip: identical\n"), "{text}");
    assert!(text.contains("verify: 225 ok"), "{text}");
}

#[test]
fn analyze_reports_the_ghost_ideal_structure() {
    let output = avdecode(&["analyze", "--config", fixture("sdg_curve_f8").to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.starts_with("ghost point: (0,0)\noptimal ghost: no\n"), "{text}");
    assert!(text.contains("locator degree bounds: 1, 1\n"), "{text}");
    assert!(text.contains("matches the correctable errors: yes"), "{text}");
    assert!(text.contains("strongly multi-stratified: yes; ζ=η: yes\n"), "{text}");
}

#[test]
fn decode_without_an_evaluator_prints_no_prediction() {
    let tables = build("sdg_surface2_f4", "surface2.tables");
    let output = avdecode(&["decode", "--tables", tables.to_str().unwrap(), "--syndrome", "1,0,0,0,0,0"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(!stdout(&output).contains("evaluator:"));
}

#[test]
fn invalid_inputs_exit_with_code_2() {
    let tables = build("sdg_curve_f8", "curve.tables");
    let tables = tables.to_str().unwrap();
    let short = avdecode(&["decode", "--tables", tables, "--syndrome", "1,1"]);
    assert_eq!(short.status.code(), Some(2));
    let garbage = avdecode(&["decode", "--tables", tables, "--syndrome", "1,q,0,0"]);
    assert_eq!(garbage.status.code(), Some(2));

    let bad_config = scratch("bad.conf");
    std::fs::write(&bad_config, "[field] p=2\n[ring] vars=x\n[variety] gen=x^2+\n[code] L=1 t=0\n").unwrap();
    let output = avdecode(&["analyze", "--config", bad_config.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("line 3"));

    let missing = avdecode(&["verify", "--tables", scratch("does-not-exist").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn stuffing_a_non_ghost_ideal_is_rejected() {
    let output = avdecode(&[
        "build",
        "--config",
        fixture("sdg_curve_f8").to_str().unwrap(),
        "--flavor",
        "stuffed",
        "--out",
        scratch("never.tables").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn tampered_tables_fail_verification() {
    let tables = build("sdg_curve_f8", "tampered.tables");
    let text = std::fs::read_to_string(&tables).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let at = lines.iter().position(|l| l.starts_with("[locators]")).unwrap();
    let locator = lines[at + 1..].iter().position(|l| l.starts_with("L=")).unwrap() + at + 1;
    lines[locator] = "L=x+1".to_string();
    std::fs::write(&tables, lines.join("\n") + "\n").unwrap();
    let output = avdecode(&["verify", "--tables", tables.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1), "{}", stdout(&output));
    assert!(stdout(&output).contains("mismatch"));
}
