//! End-to-end tests of the `lq` binary: exit codes, file formats, and the
//! pipe round-trips between subcommands.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lq_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

#[test]
fn repro_exit_codes_and_messages() {
    let lex = lq(&["repro", "lex6"]);
    assert_eq!(lex.status.code(), Some(1));
    assert!(stdout(&lex).contains("index 9"));
    assert!(stdout(&lex).contains("x1*x3"));

    let revlex = lq(&["repro", "revlex6"]);
    assert_eq!(revlex.status.code(), Some(1));
    assert!(stdout(&revlex).contains("index 21"));

    let theorem = lq(&["repro", "theorem6"]);
    assert_eq!(theorem.status.code(), Some(0));
    assert!(stdout(&theorem).contains("42"));
}

#[test]
fn repro_json_output() {
    let out = lq(&["repro", "lex6", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["index"], 9);
    assert_eq!(doc["confirmed"], true);
}

#[test]
fn gens_output_verifies() {
    let gens = lq(&["gens", "--antipath", "6", "--power", "2"]);
    assert_eq!(gens.status.code(), Some(0));
    let text = stdout(&gens);
    assert!(text.starts_with("ring: x1 x2 x3 x4 x5 x6"));

    let verify = lq_with_stdin(&["verify", "--from", "-"], &text);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout(&verify).contains("linear quotients: yes"));
}

#[test]
fn order_output_verifies_through_stdin() {
    let order = lq(&["order", "--anticycle-square", "6"]);
    assert_eq!(order.status.code(), Some(0));
    let text = stdout(&order);
    assert!(text.contains("# stage (2a)"));

    let verify = lq_with_stdin(&["verify", "--from", "-"], &text);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn order_json_round_trips_to_certificate() {
    let order = lq(&["order", "--anticycle-square", "6", "--json"]);
    let verify = lq_with_stdin(&["verify", "--from", "-", "--json"], &stdout(&order));
    assert_eq!(verify.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["ordering"].as_array().unwrap().len(), 42);
    assert_eq!(doc["per_index_var_counts"].as_array().unwrap().len(), 41);
}

#[test]
fn verify_single_generator_file() {
    let verify = lq_with_stdin(&["verify", "--from", "-"], "ring: a b\na*b\n");
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn verify_refutation_exits_one() {
    let input = "ring: x1 x2 x3 x4\nx1*x3\nx2*x4\n";
    let verify = lq_with_stdin(&["verify", "--from", "-"], input);
    assert_eq!(verify.status.code(), Some(1));
    assert!(stdout(&verify).contains("first failure at index 2"));

    let all = lq_with_stdin(&["verify", "--from", "-", "--all-failures"], input);
    assert_eq!(all.status.code(), Some(1));
    assert!(stdout(&all).contains("index 2: witnesses"));
}

#[test]
fn verify_rejects_malformed_input() {
    let bad = lq_with_stdin(&["verify", "--from", "-"], "no header\n");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_nonexistence_exits_one() {
    let out = lq(&["search", "--exhaustive", "--anticycle", "4", "--power", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["status"], "none_exists");
}

#[test]
fn search_found_ordering_reverifies() {
    let search = lq(&["search", "--exhaustive", "--anticycle", "6", "--power", "2"]);
    assert_eq!(search.status.code(), Some(0));
    let text = stdout(&search);
    assert!(text.contains("# status: found"));

    let verify = lq_with_stdin(&["verify", "--from", "-"], &text);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn search_greedy_runs_on_files() {
    let gens = lq(&["gens", "--antipath", "6", "--power", "2"]);
    let search = lq_with_stdin(&["search", "--greedy", "--from", "-", "--json"], &stdout(&gens));
    assert_eq!(search.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&search)).unwrap();
    assert_eq!(doc["status"], "found");
}

#[test]
fn betti_from_certificate() {
    let order = lq(&["order", "--anticycle-square", "6", "--json"]);
    let cert = lq_with_stdin(&["verify", "--from", "-", "--json"], &stdout(&order));
    assert_eq!(cert.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, stdout(&cert)).unwrap();

    let betti = lq(&["betti", "--from-certificate", path.to_str().unwrap()]);
    assert_eq!(betti.status.code(), Some(0));
    assert!(stdout(&betti).contains("42"));

    let json = lq(&["betti", "--from-certificate", path.to_str().unwrap(), "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(doc["degree"], 4);
    assert_eq!(doc["rows"][0], 42);
}

#[test]
fn chordal_families_and_files() {
    assert_eq!(lq(&["chordal", "--path", "7"]).status.code(), Some(0));
    assert_eq!(lq(&["chordal", "--cycle", "6"]).status.code(), Some(1));
    assert_eq!(lq(&["chordal", "--antipath", "8", "--complement"]).status.code(), Some(0));
    assert_eq!(lq(&["chordal", "--antipath", "8", "--froeberg"]).status.code(), Some(0));
    assert_eq!(lq(&["chordal", "--anticycle", "8", "--froeberg"]).status.code(), Some(1));

    // 4-cycle from a file: not chordal
    let out = lq_with_stdin(&["chordal", "--graph", "-"], "n 4\n0 1\n1 2\n2 3\n0 3\n");
    assert_eq!(out.status.code(), Some(1));

    let json = lq(&["chordal", "--path", "5", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(doc["chordal"], true);
    assert_eq!(doc["elimination_order"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lq(&["verify"]).status.code(), Some(2));
    assert_eq!(lq(&["search", "--exhaustive"]).status.code(), Some(2));
    assert_eq!(lq(&["chordal"]).status.code(), Some(2));
    assert_eq!(lq(&["nonsense"]).status.code(), Some(2));
    assert_eq!(lq(&["order", "--anticycle-square", "4"]).status.code(), Some(2));
}
