//! Golden-file tests: every recorded invocation must reproduce its captured
//! bytes and exit code exactly, run after run.

use std::path::PathBuf;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run_argv(argv: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let args: Vec<String> = argv.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = basel_cli::run(&args, &mut out, &mut err);
    (code, out, err)
}

fn read_golden(name: &str) -> Vec<u8> {
    let path = golden_dir().join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("missing golden file {path:?}: {e}"))
}

/// (golden stdout file, argv) for every success case.
const STDOUT_CASES: &[(&str, &[&str])] = &[
    ("zeta_2_text.stdout", &["zeta", "2"]),
    (
        "zeta_2_digits15_text.stdout",
        &["zeta", "2", "--digits", "15"],
    ),
    (
        "zeta_2_digits15_json.stdout",
        &["zeta", "2", "--digits", "15", "--format", "json"],
    ),
    ("zeta_4_latex.stdout", &["zeta", "4", "--format", "latex"]),
    ("zeta_12_text.stdout", &["zeta", "12"]),
    ("zeta_neg1_text.stdout", &["zeta", "-1"]),
    ("zeta_neg2_text.stdout", &["zeta", "-2"]),
    (
        "zeta_neg3_digits6_text.stdout",
        &["zeta", "-3", "--digits", "6"],
    ),
    ("zeta_neg1_json.stdout", &["zeta", "-1", "--format", "json"]),
    ("number_6_text.stdout", &["number", "6"]),
    ("number_6_json.stdout", &["number", "6", "--format", "json"]),
    ("number_0_json.stdout", &["number", "0", "--format", "json"]),
    (
        "number_1_latex.stdout",
        &["number", "1", "--format", "latex"],
    ),
    ("poly_3_text.stdout", &["poly", "3"]),
    ("poly_0_text.stdout", &["poly", "0"]),
    ("poly_2_json.stdout", &["poly", "2", "--format", "json"]),
    ("poly_3_latex.stdout", &["poly", "3", "--format", "latex"]),
    ("powersum_2_text.stdout", &["powersum", "2"]),
    ("powersum_0_text.stdout", &["powersum", "0"]),
    (
        "powersum_2_eval4_text.stdout",
        &["powersum", "2", "--eval", "4"],
    ),
    (
        "powersum_12_eval1000_json.stdout",
        &["powersum", "12", "--eval", "1000", "--format", "json"],
    ),
    ("fourier_2_1_text.stdout", &["fourier", "2", "1"]),
    (
        "fourier_1_5_json.stdout",
        &["fourier", "1", "5", "--format", "json"],
    ),
    ("fourier_4_0_text.stdout", &["fourier", "4", "0"]),
    (
        "fourier_4_0_json.stdout",
        &["fourier", "4", "0", "--format", "json"],
    ),
    (
        "fourier_3_neg2_latex.stdout",
        &["fourier", "3", "-2", "--format", "latex"],
    ),
    ("innerproduct_1_1_text.stdout", &["innerproduct", "1", "1"]),
    ("innerproduct_1_2_text.stdout", &["innerproduct", "1", "2"]),
    (
        "innerproduct_2_2_json.stdout",
        &["innerproduct", "2", "2", "--format", "json"],
    ),
    ("pi_5_text.stdout", &["pi", "--digits", "5"]),
    ("pi_1_text.stdout", &["pi", "--digits", "1"]),
    ("pi_20_text.stdout", &["pi", "--digits", "20"]),
    (
        "pi_5_json.stdout",
        &["pi", "--digits", "5", "--format", "json"],
    ),
    (
        "verify_k1_n10_text.stdout",
        &["verify", "--max-k", "1", "--terms", "10"],
    ),
    (
        "verify_k1_n10_json.stdout",
        &[
            "verify", "--max-k", "1", "--terms", "10", "--format", "json",
        ],
    ),
];

/// (golden stderr file, argv, expected exit code) for every error case.
const STDERR_CASES: &[(&str, &[&str], i32)] = &[
    ("zeta_3_err.stderr", &["zeta", "3"], 2),
    ("zeta_1_err.stderr", &["zeta", "1"], 2),
    ("zeta_0_err.stderr", &["zeta", "0"], 2),
    ("fourier_0_1_err.stderr", &["fourier", "0", "1"], 2),
    ("badflag_err.stderr", &["number", "6", "--frmt", "json"], 1),
    ("pi_0_err.stderr", &["pi", "--digits", "0"], 1),
];

#[test]
fn stdout_goldens_are_reproduced_byte_for_byte() {
    for (file, argv) in STDOUT_CASES {
        let (code, out, err) = run_argv(argv);
        assert_eq!(code, 0, "{argv:?} should succeed, stderr: {err:?}");
        assert!(err.is_empty(), "{argv:?} wrote to stderr");
        let expected = read_golden(file);
        assert_eq!(
            out,
            expected,
            "{argv:?} diverged from {file}:\n got: {}\nwant: {}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&expected)
        );
    }
}

#[test]
fn stderr_goldens_and_exit_codes_are_reproduced() {
    for (file, argv, expected_code) in STDERR_CASES {
        let (code, out, err) = run_argv(argv);
        assert_eq!(code, *expected_code, "{argv:?} exit code");
        assert!(out.is_empty(), "{argv:?} wrote to stdout on error");
        let expected = read_golden(file);
        assert_eq!(
            err,
            expected,
            "{argv:?} diverged from {file}:\n got: {}\nwant: {}",
            String::from_utf8_lossy(&err),
            String::from_utf8_lossy(&expected)
        );
    }
}

#[test]
fn goldens_are_stable_across_repeat_runs() {
    for (_, argv) in STDOUT_CASES {
        assert_eq!(run_argv(argv), run_argv(argv), "{argv:?} not deterministic");
    }
}

/// The installed binary must behave exactly like the in-process runner.
#[test]
fn binary_matches_in_process_runner() {
    let bin = env!("CARGO_BIN_EXE_basel");
    for argv in [
        &["zeta", "2"] as &[&str],
        &["number", "6", "--format", "json"],
        &["pi", "--digits", "5"],
    ] {
        let output = std::process::Command::new(bin)
            .args(argv)
            .output()
            .expect("binary runs");
        let (code, out, err) = run_argv(argv);
        assert_eq!(output.status.code(), Some(code), "{argv:?}");
        assert_eq!(output.stdout, out, "{argv:?}");
        assert_eq!(output.stderr, err, "{argv:?}");
    }
    let failing = std::process::Command::new(bin)
        .args(["zeta", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(failing.status.code(), Some(2));
}
