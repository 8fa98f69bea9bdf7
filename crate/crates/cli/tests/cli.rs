//! End-to-end checks of the command-line surface: table contents, exit
//! codes, determinism, and the dualize round-trip.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plethcalc"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = bin().args(args).output().expect("spawn plethcalc");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn lambda_table_contains_displayed_formulas() {
    let (stdout, _, code) = run(&["lambda-table", "--max", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("psi_x(c2) = c2\u{2297}c1^2 + c1^2\u{2297}c2 - 2*c2\u{2297}c2"), "{stdout}");
    assert!(stdout.contains("psi_+(c2) = c2\u{2297}1 + c1\u{2297}c1 + 1\u{2297}c2"));
    assert!(stdout.contains("eps_-3(c2) = 6"));
}

#[test]
fn witt_length_one_addition_is_plain() {
    let (stdout, _, code) = run(&["witt", "add", "--len", "1", "3", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "(8)");
}

#[test]
fn witt_mul_second_component() {
    // a = (1, 2), b = (3, 4): second component a1^2 b2 + a2 b1^2 - 2 a2 b2
    let (stdout, _, code) = run(&["witt", "mul", "--len", "2", "1", "2", "3", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "(3, 6)");
}

#[test]
fn plethysm_classical_value() {
    let (stdout, _, code) = run(&["plethysm", "c2", "c2", "--max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "c1*c3 - c4");
}

#[test]
fn primitives_prints_newton() {
    let (stdout, _, code) = run(&["primitives", "--scheme", "lambda", "--max", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("weight 2: rank 1  basis: c1^2 - 2*c2"));
    assert!(stdout.contains("weight 3: rank 1  basis: c1^3 - 3*c1*c2 + 3*c3"));
}

#[test]
fn indecomposables_reports_torsion() {
    let (stdout, _, code) = run(&["indecomposables", "--scheme", "divided", "--max", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("weight 2: free rank 0  torsion: Z/2"), "{stdout}");
}

#[test]
fn invalid_flags_exit_two() {
    let (_, _, code) = run(&["lambda-table", "--nonsense"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["witt", "add", "--len", "2", "1", "2", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn check_suite_exits_zero_and_is_deterministic() {
    let (out1, _, code1) = run(&["check", "--suite", "all", "--max", "3"]);
    assert_eq!(code1, 0, "{out1}");
    let (out2, _, code2) = run(&["check", "--suite", "all", "--max", "3"]);
    assert_eq!(code2, 0);
    assert_eq!(out1, out2, "check output must be byte-identical");
    assert!(out1.contains("[pass]"));
}

#[test]
fn check_respects_thread_cap() {
    let out = bin()
        .args(["check", "--suite", "all", "--max", "2"])
        .env("PLETHCALC_THREADS", "1")
        .output()
        .expect("spawn");
    assert!(out.status.success());
}

#[test]
fn dualize_roundtrip_via_stdio() {
    let input = r#"{"ring":{"kind":"Integers"},"components":[[1,2],[3,1]]}"#;
    let mut child = bin()
        .arg("dualize")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["components"], serde_json::json!([[1, 2], [3, 1]]));
}
