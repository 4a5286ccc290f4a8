//! End-to-end checks of the binary: exit codes, document output, and
//! byte determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_orthocut"))
}

fn instances_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn instance(name: &str) -> String {
    instances_dir().join(name).to_string_lossy().into_owned()
}

fn tmp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("orthocut-test-{}-{name}", std::process::id()))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn solve_solvable_exits_zero_with_document() {
    let out = run(&["solve", &instance("letter_v.json")]);
    assert_eq!(exit_code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains(r#""verdict":"solvable""#));
    assert!(stdout.contains(r#""vertical_creases":["3"]"#));
    assert!(stdout.ends_with('\n'));
}

#[test]
fn solve_unsolvable_exits_one_but_still_writes_verdict() {
    let out = run(&["solve", &instance("mixed_slopes.json")]);
    assert_eq!(exit_code(&out), 1);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains(r#""stage":"slope-mismatch""#));
}

#[test]
fn solve_missing_file_exits_two() {
    let out = run(&["solve", "/definitely/not/here.json"]);
    assert_eq!(exit_code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn solve_invalid_document_exits_two() {
    let path = tmp_path("invalid.json");
    fs::write(
        &path,
        br#"{"kind":"foldcut","paper":{"width":"-1","height":"3"},"cuts":[]}"#,
    )
    .unwrap();
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    fs::remove_file(&path).ok();
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["solve"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_round_trip_exits_zero() {
    let sol = tmp_path("v-solution.json");
    let out = run(&[
        "solve",
        &instance("letter_v.json"),
        "--out",
        sol.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let out = run(&["verify", &instance("letter_v.json"), sol.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains(r#""verified":true"#));
    fs::remove_file(&sol).ok();
}

#[test]
fn verify_tampered_solution_exits_one() {
    let sol = tmp_path("v-tampered.json");
    let out = run(&[
        "solve",
        &instance("letter_v.json"),
        "--out",
        sol.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(&sol).unwrap();
    // Move the crease off the stripe center.
    let tampered = text.replace(r#""vertical_creases":["3"]"#, r#""vertical_creases":["2"]"#);
    assert_ne!(text, tampered);
    fs::write(&sol, tampered).unwrap();
    let out = run(&["verify", &instance("letter_v.json"), sol.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains(r#""verified":false"#));
    fs::remove_file(&sol).ok();
}

#[test]
fn punch_subcommand_checks_kind() {
    let out = run(&["punch", &instance("punch_grid.json")]);
    assert_eq!(exit_code(&out), 0);
    let out = run(&["punch", &instance("letter_v.json")]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn oned_subcommand_variants() {
    assert_eq!(
        exit_code(&run(&["oned", "unsigned", &instance("oned_unsigned.json")])),
        0
    );
    assert_eq!(
        exit_code(&run(&["oned", "signed", &instance("oned_signed.json")])),
        0
    );
    assert_eq!(
        exit_code(&run(&[
            "oned",
            "signed",
            &instance("oned_signed_blocked.json")
        ])),
        1
    );
    assert_eq!(
        exit_code(&run(&["oned", "interval", &instance("oned_interval.json")])),
        0
    );
    // Variant mismatch is a usage error.
    assert_eq!(
        exit_code(&run(&["oned", "unsigned", &instance("oned_signed.json")])),
        2
    );
}

#[test]
fn solve_is_byte_deterministic() {
    let a = run(&["solve", &instance("letter_x.json")]);
    let b = run(&["solve", &instance("letter_x.json")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let args = [
        "gen", "--seed", "7", "--kx", "2", "--ky", "2", "--folded", "3x2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    let path = tmp_path("gen.json");
    fs::write(&path, &a.stdout).unwrap();
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    fs::remove_file(&path).ok();
}

#[test]
fn gen_rejects_bad_folded_size() {
    let out = run(&[
        "gen", "--seed", "1", "--kx", "1", "--ky", "1", "--folded", "3by2",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "gen", "--seed", "1", "--kx", "1", "--ky", "1", "--folded", "0x2",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn svg_output_is_written_and_deterministic() {
    let svg_a = tmp_path("v-a.svg");
    let svg_b = tmp_path("v-b.svg");
    for p in [&svg_a, &svg_b] {
        let out = run(&[
            "solve",
            &instance("letter_v.json"),
            "--out",
            "/dev/null",
            "--svg",
            p.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    let a = fs::read(&svg_a).unwrap();
    let b = fs::read(&svg_b).unwrap();
    assert_eq!(a, b);
    assert!(String::from_utf8(a).unwrap().starts_with("<?xml"));
    fs::remove_file(&svg_a).ok();
    fs::remove_file(&svg_b).ok();
}
