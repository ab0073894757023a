//! End-to-end tests driving the compiled binary through its public
//! interface: argument parsing, JSON output, exit codes, and stdin
//! streaming.

use std::io::Write;
use std::process::{Command, Stdio};

use hamstar_core::graph::{complete, empty, join};
use hamstar_core::to_graph6;

fn hamstar() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hamstar"))
}

/// Run the binary with the given arguments, returning (exit code, stdout,
/// stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let out = hamstar().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

/// Same, but with the given bytes piped to standard input.
fn run_with_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = hamstar()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn json_lines(stdout: &str) -> Vec<serde_json::Value> {
    stdout
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

/// The 8-vertex join K_3 ∨ K̄_5 as a graph6 line.
fn join_example_line() -> String {
    to_graph6(&join(&complete(3), &empty(5)).unwrap())
}

#[test]
fn gen_family_emits_the_boundary_graph() {
    let (code, stdout, _) = run(&["gen-family", "--t", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "E]r?\n");
    // An explicit hub graph: H = K_2 joins into K_2 ∨ K̄_4.
    let (code, stdout, _) = run(&["gen-family", "--t", "5", "--h-graph", "A_"]);
    assert_eq!(code, 0);
    let expected = to_graph6(&join(&complete(2), &empty(4)).unwrap());
    assert_eq!(stdout.trim_end(), expected);
}

#[test]
fn gen_family_rejects_a_wrong_sized_hub() {
    // K_3 has three vertices but t = 5 needs a two-vertex hub.
    let (code, _, stderr) = run(&["gen-family", "--t", "5", "--h-graph", "Bw"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"), "stderr: {stderr}");
}

#[test]
fn check_reports_a_missed_hypothesis() {
    let (code, stdout, _) = run(&["check", "--t", "5", "--graph", "D?{"]);
    assert_eq!(code, 0);
    let docs = json_lines(&stdout);
    assert_eq!(docs.len(), 1);
    assert_eq!(docs[0]["schema"], 1);
    assert_eq!(docs[0]["strict"], true);
    assert_eq!(docs[0]["verdict"]["kind"], "hypothesis_not_met");
}

#[test]
fn check_finds_the_star_on_the_join_example() {
    let line = join_example_line();
    let (code, stdout, _) = run(&["check", "--t", "5", "--graph", &line]);
    assert_eq!(code, 0);
    let docs = json_lines(&stdout);
    assert_eq!(docs[0]["verdict"]["kind"], "star");
    assert_eq!(docs[0]["verdict"]["witness"]["center"], 0);
    assert_eq!(
        docs[0]["verdict"]["witness"]["leaves"],
        serde_json::json!([3, 4, 5, 6, 7])
    );
}

#[test]
fn check_output_is_byte_identical_across_runs() {
    let line = join_example_line();
    let args = ["check", "--t", "5", "--graph", line.as_str()];
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn check_text_format_is_one_plain_line() {
    let (code, stdout, _) = run(&["check", "--t", "5", "--format", "text", "--graph", "D?{"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "D?{: hypothesis not met\n");
}

#[test]
fn non_strict_boundary_reports_the_regime() {
    let (code, stdout, _) = run(&["check", "--t", "5", "--no-strict", "--graph", "E]r?"]);
    assert_eq!(code, 0);
    let docs = json_lines(&stdout);
    assert_eq!(docs[0]["strict"], false);
    assert!(docs[0]["verdict"].is_null());
    assert!(
        docs[0]["regime"].as_str().unwrap().contains("boundary"),
        "regime note: {}",
        docs[0]["regime"]
    );
}

#[test]
fn extract_reports_the_full_trace() {
    let line = join_example_line();
    let (code, stdout, _) = run(&["extract", "--t", "5", "--graph", &line]);
    assert_eq!(code, 0);
    let docs = json_lines(&stdout);
    let trace = &docs[0]["extraction"]["trace"];
    assert_eq!(docs[0]["extraction"]["kind"], "star");
    assert_eq!(trace["cycle"]["vertices"], serde_json::json!([0, 3, 1, 4, 2, 5]));
    assert_eq!(trace["u"], 7);
    assert_eq!(trace["v"], 6);
    assert_eq!(trace["I"]["members"], serde_json::json!([1, 3, 5]));
    assert_eq!(trace["l"], 1);
    assert_eq!(trace["j_indices"], serde_json::json!([3]));
    assert_eq!(trace["witness"]["center"], 0);
}

#[test]
fn sweep_over_the_enumerator_is_clean() {
    let (code, stdout, _) = run(&["sweep", "--t", "5", "--n-max", "6", "--mode", "main"]);
    assert_eq!(code, 0);
    let docs = json_lines(&stdout);
    assert_eq!(docs[0]["schema"], 1);
    assert_eq!(docs[0]["mode"], "main");
    assert_eq!(docs[0]["examined"], 143);
    assert_eq!(docs[0]["counterexamples"], serde_json::json!([]));
}

#[test]
fn sweep_reads_graph6_lines_from_stdin() {
    let (code, stdout, _) = run_with_stdin(
        &["sweep", "--t", "5", "--input", "-", "--mode", "main"],
        "E]r?\nD?{\n",
    );
    assert_eq!(code, 0);
    let docs = json_lines(&stdout);
    assert_eq!(docs[0]["examined"], 2);
    assert_eq!(docs[0]["histogram"]["hypothesis_not_met"], 2);
}

#[test]
fn sweep_jobs_env_var_is_accepted() {
    let out = hamstar()
        .env("HAMSTAR_JOBS", "2")
        .args(["sweep", "--t", "5", "--n-max", "5", "--mode", "main"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn lemma_sweeps_run_from_the_command_line() {
    for mode in ["lemma1", "lemma2", "equality", "classical"] {
        let (code, stdout, _) = run(&["sweep", "--t", "5", "--n-max", "5", "--mode", mode]);
        assert_eq!(code, 0, "mode {mode}");
        let docs = json_lines(&stdout);
        assert_eq!(docs[0]["counterexamples"], serde_json::json!([]), "mode {mode}");
    }
}

#[test]
fn codec_round_trips_through_both_directions() {
    let (code, decoded, _) = run_with_stdin(&["codec", "--decode"], "E]r?\nD?{\n");
    assert_eq!(code, 0);
    let docs = json_lines(&decoded);
    assert_eq!(docs[0]["n"], 6);
    assert_eq!(docs[1]["n"], 5);
    assert_eq!(docs[1]["edges"], serde_json::json!([[0, 4], [1, 4], [2, 4], [3, 4]]));
    let (code, encoded, _) = run_with_stdin(&["codec", "--encode"], &decoded);
    assert_eq!(code, 0);
    assert_eq!(encoded, "E]r?\nD?{\n");
}

#[test]
fn malformed_graph6_exits_two_with_an_offset() {
    let (code, stdout, stderr) = run(&["check", "--t", "5", "--graph", "C*"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("byte 1"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_two() {
    // No graph source at all.
    let (code, _, stderr) = run(&["check", "--t", "5"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
    // Unknown subcommand.
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    // Unknown sweep mode.
    let (code, _, _) = run(&["sweep", "--t", "5", "--n-max", "4", "--mode", "units"]);
    assert_eq!(code, 2);
}

#[test]
fn disconnected_input_is_an_argument_error() {
    // Two isolated vertices: graph6 "A?".
    let (code, _, stderr) = run(&["check", "--t", "5", "--graph", "A?"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("disconnected"), "stderr: {stderr}");
}
