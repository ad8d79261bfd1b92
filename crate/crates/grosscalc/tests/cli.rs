//! End-to-end command-line tests: the documented invocation examples through
//! the public `run_command` entry point, plus the compiled binary itself
//! (argument handling, exit codes, and the interactive loop over a pipe).

use std::io::Write;
use std::process::{Command, Stdio};

use grosscalc::cli::run_command;
use grosscalc::{textio, Config};

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["grosscalc"];
    argv.extend_from_slice(args);
    run_command(&argv)
}

#[test]
fn documented_examples_pass_verbatim() {
    assert_eq!(run(&["compare", "G^(G^-1)", "1"]), (0, "GT".to_string()));
    assert_eq!(
        run(&["classify", "G^(G^-1) - 1", "--scheme", "both"]),
        (0, "sergeyev: Infinite; semantic: Infinitesimal".to_string())
    );
    assert_eq!(
        run(&["eval", "G", "--base-factorial", "7"]),
        (0, "[5040, 5040]".to_string())
    );
}

#[test]
fn every_subcommand_round_trips_through_text() {
    assert_eq!(run(&["normalize", "G + G + 1"]).1, "2*G + 1");
    assert_eq!(run(&["add", "G^2", "2*G^2"]).1, "3*G^2");
    assert_eq!(run(&["mul", "G + 1", "G + 1"]).1, "G^2 + 2*G + 1");
    assert_eq!(run(&["div", "G^2 + 2*G + 1", "G + 1"]).1, "G + 1");
    assert_eq!(run(&["measure", "--union", "1,3;2,3;3,3"]).1, "G");
    assert_eq!(run(&["compare", "G^(1/2)", "1000000"]).1, "GT");
    assert_eq!(run(&["classify", "G^(-2)", "--scheme", "sergeyev"]).1, "sergeyev: Infinitesimal");
    assert_eq!(run(&["classify", "5", "--scheme", "semantic"]).1, "semantic: FiniteNonzero");
}

#[test]
fn json_flag_round_trips_numeral_outputs() {
    for args in [
        &["--json", "normalize", "G + 1"][..],
        &["--json", "add", "G^(G^-1)", "-1"][..],
        &["--json", "measure", "--progression", "5,3"][..],
    ] {
        let (code, out) = run(args);
        assert_eq!(code, 0, "failed: {args:?}");
        let parsed = textio::from_json(&out, &Config::default()).unwrap();
        assert_eq!(textio::to_json(&parsed), out, "JSON must round-trip: {args:?}");
    }
}

#[test]
fn exit_codes_separate_syntax_domain_and_abstention() {
    // 1: unparsable expression, bad usage, malformed measure specs.
    assert_eq!(run(&["normalize", "G ^"]).0, 1);
    assert_eq!(run(&["compare", "G"]).0, 1);
    assert_eq!(run(&["measure", "--progression", "nope"]).0, 1);
    assert_eq!(run(&["eval", "G", "--base-factorial", "1"]).0, 1);
    // 2: well-formed input, impossible request.
    assert_eq!(run(&["div", "G", "G + 1"]).0, 2);
    assert_eq!(run(&["measure", "--union", "1,2;3,4"]).0, 2);
    assert_eq!(run(&["normalize", "G^(G^(G^(G)))"]).0, 2);
    // 3: the engine abstains rather than guessing.
    assert_eq!(run(&["--expansion-budget", "0", "compare", "G^(G^-1)", "1"]).0, 3);
    // 0: success paths including help.
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["normalize", "0"]).0, 0);
}

#[test]
fn deep_nesting_respects_the_level_flag() {
    // Level 3 by default: a numeral with a level-2 grosspower is fine…
    assert_eq!(run(&["normalize", "G^(G^(G))"]).0, 0);
    // …but not if the ceiling is lowered.
    assert_eq!(run(&["--max-level", "2", "normalize", "G^(G^(G))"]).0, 2);
}

#[test]
fn binary_reports_results_on_stdout_and_errors_on_stderr() {
    let exe = env!("CARGO_BIN_EXE_grosscalc");
    let ok = Command::new(exe).args(["normalize", "G + G"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "2*G");
    assert!(ok.stderr.is_empty());

    let bad = Command::new(exe).args(["normalize", "G +"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("syntax error"));

    let abstain = Command::new(exe)
        .args(["--expansion-budget", "0", "compare", "G^(G^-1)", "1"])
        .output()
        .unwrap();
    assert_eq!(abstain.status.code(), Some(3));
}

#[test]
fn repl_session_over_a_pipe() {
    let exe = env!("CARGO_BIN_EXE_grosscalc");
    let mut child = Command::new(exe)
        .arg("repl")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"G + G\nadd G, 1\ncompare G^(G^-1), 2\ndiv G, G + 1\nhistory\nquit\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("2*G"), "missing normalize result: {text}");
    assert!(text.contains("G + 1"), "missing add result: {text}");
    assert!(text.contains("LT"), "missing compare result: {text}");
    assert!(text.contains("error: not exactly divisible"), "missing inline error: {text}");
    assert!(text.contains("1: G + G"), "missing history: {text}");
}
