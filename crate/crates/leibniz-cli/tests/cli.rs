//! End-to-end tests of the `leibniz` binary: golden outputs on the fixture
//! library, the documented exit codes, and file input.

use std::io::Write;
use std::process::{Command, Output};

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(contents.as_bytes()).expect("write");
    f.flush().expect("flush");
    f
}

// [a,a] = a violates the defining identity: [a,[a,a]] = a, yet
// [[a,a],a] - [[a,a],a] = 0.
const BROKEN_TABLE: &str = r#"{
  "name": "broken",
  "dim": 2,
  "basis": ["a", "b"],
  "table": [
    { "left": "a", "right": "a", "result": [ { "basis": "a", "coeff": "1" } ] }
  ]
}"#;

#[test]
fn validate_passes_on_the_fixture_library() {
    for name in ["example-3.1", "example-3.2", "heisenberg", "sl2-as-leibniz"] {
        let out = leibniz(&["validate", name]);
        assert_eq!(code(&out), 0, "{name}: {}", stderr(&out));
        assert!(stdout(&out).contains("leibniz identity: PASS"), "{name}");
    }
}

#[test]
fn validate_rejects_a_broken_table_with_exit_one() {
    let f = write_temp(BROKEN_TABLE);
    let out = leibniz(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("leibniz identity: FAIL"), "{text}");
    assert!(text.contains("fails on"), "{text}");
}

#[test]
fn no_validate_lets_other_commands_read_a_broken_table() {
    let f = write_temp(BROKEN_TABLE);
    let path = f.path().to_str().unwrap();
    // Without the flag: input error.
    let strict = leibniz(&["info", path]);
    assert_eq!(code(&strict), 2);
    assert!(stderr(&strict).contains("VALIDATION_ERROR"), "{}", stderr(&strict));
    // With the flag the algebra loads and the report states the honest verdict.
    let lax = leibniz(&["info", path, "--no-validate"]);
    assert_eq!(code(&lax), 0, "{}", stderr(&lax));
    assert!(stdout(&lax).contains("leibniz identity: FAIL"));
}

#[test]
fn malformed_json_exits_two_with_position() {
    let f = write_temp("{ \"name\": ");
    let out = leibniz(&["info", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("PARSE_ERROR") && err.contains("line"), "{err}");
}

#[test]
fn unknown_label_and_duplicate_entry_exit_two() {
    let unknown = BROKEN_TABLE.replace("\"basis\": \"a\", \"coeff\": \"1\"", "\"basis\": \"ghost\", \"coeff\": \"1\"");
    let f1 = write_temp(&unknown);
    let out1 = leibniz(&["validate", f1.path().to_str().unwrap()]);
    assert_eq!(code(&out1), 2);
    assert!(stderr(&out1).contains("UNKNOWN_LABEL"), "{}", stderr(&out1));

    let duplicated = r#"{
  "name": "dup",
  "dim": 2,
  "basis": ["a", "b"],
  "table": [
    { "left": "a", "right": "b", "result": [] },
    { "left": "a", "right": "b", "result": [] }
  ]
}"#;
    let f2 = write_temp(duplicated);
    let out2 = leibniz(&["validate", f2.path().to_str().unwrap()]);
    assert_eq!(code(&out2), 2);
    assert!(stderr(&out2).contains("DUPLICATE_ENTRY"), "{}", stderr(&out2));
}

#[test]
fn unknown_fixture_name_exits_two() {
    let out = leibniz(&["info", "no-such-algebra"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not a fixture name"));
}

#[test]
fn cartan_golden_run_on_the_three_dimensional_example() {
    let out = leibniz(&["cartan", "example-3.1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rank: 1"), "{text}");
    assert!(text.contains("[1, 0, -1]"), "{text}");
    assert!(text.contains("certified cartan: yes"), "{text}");
    assert!(text.contains("seed 0"), "{text}");
}

#[test]
fn quotient_golden_run_on_the_five_dimensional_example() {
    let out = leibniz(&["quotient", "example-3.2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("squares ideal (dim 2)"), "{text}");
    assert!(text.contains("[0, 0, 0, 1, 0]"), "{text}");
    assert!(text.contains("[0, 0, 0, 0, 1]"), "{text}");
    assert!(text.contains("quotient: dim 3, lie: yes"), "{text}");
    assert!(text.contains("[e1, e2] = e3"), "{text}");
}

#[test]
fn is_cartan_true_exits_zero_and_false_exits_one() {
    let good = leibniz(&["is-cartan", "example-3.2", "--subspace", "0,0,1,0,0"]);
    assert_eq!(code(&good), 0, "{}", stderr(&good));
    assert!(stdout(&good).contains("cartan: PASS"));

    // Nilpotent but not self-normalizing.
    let bad = leibniz(&["is-cartan", "example-3.2", "--subspace", "1,0,0,0,0;0,0,0,1,0;0,0,0,0,1"]);
    assert_eq!(code(&bad), 1);
    let text = stdout(&bad);
    assert!(text.contains("cartan: FAIL"), "{text}");
    assert!(text.contains("self-normalizing: no"), "{text}");

    // Not even a subalgebra.
    let worse = leibniz(&["is-cartan", "example-3.2", "--subspace", "1,0,0,0,0;0,1,0,0,0"]);
    assert_eq!(code(&worse), 1);
    assert!(stdout(&worse).contains("subalgebra: no"));
}

#[test]
fn normalizers_of_the_certified_cartan_match_on_both_sides() {
    let left = leibniz(&["normalizer", "example-3.1", "--side", "left", "--subspace", "1,0,-1"]);
    assert_eq!(code(&left), 0);
    let ltext = stdout(&left);
    assert!(ltext.contains("left normalizer (dim 1)"), "{ltext}");
    assert!(ltext.contains("self-normalizing: yes"), "{ltext}");

    let right = leibniz(&["normalizer", "example-3.1", "--side", "right", "--subspace", "1,0,-1"]);
    assert_eq!(code(&right), 0);
    let rtext = stdout(&right);
    assert!(rtext.contains("right normalizer (dim 2)"), "{rtext}");
    assert!(rtext.contains("[1, 0, 0]") && rtext.contains("[0, 0, 1]"), "{rtext}");
    assert!(rtext.contains("self-normalizing: no"), "{rtext}");
}

#[test]
fn fitting_golden_run() {
    let out = leibniz(&["fitting", "example-3.1", "--element", "0,0,1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("null component (dim 1)"), "{text}");
    assert!(text.contains("[1, 0, -1]"), "{text}");
    assert!(text.contains("one component (dim 2)"), "{text}");
}

#[test]
fn push_sends_the_witness_into_the_quotient() {
    let out = leibniz(&["push", "example-3.1", "--subspace", "0,0,1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("quotient basis: y, z"), "{text}");
    assert!(text.contains("image in the quotient (dim 1)"), "{text}");
    assert!(text.contains("[0, 1]"), "{text}");
}

#[test]
fn weights_golden_run_in_json() {
    let out = leibniz(&["weights", "example-3.2", "--element", "0,0,1,0,0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let weights: Vec<f64> = v["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["re"].as_f64().unwrap())
        .collect();
    assert_eq!(weights, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn weights_with_coarse_tolerance_fail_to_separate_and_exit_two() {
    let out = leibniz(&["weights", "example-3.2", "--element", "0,0,1,0,0", "--tol-eig", "0.2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("separate"), "{}", stderr(&out));
}

#[test]
fn conjugate_finds_the_grid_witness() {
    let out = leibniz(&["conjugate", "example-3.2", "--c1", "0,0,1,0,0", "--c2", "2,0,1,0,0"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("conjugating automorphism found: yes"), "{text}");
    assert!(text.contains("verified exactly: yes"), "{text}");
}

#[test]
fn conjugate_exhausts_budget_with_exit_three() {
    let out = leibniz(&[
        "conjugate",
        "sl2-as-leibniz",
        "--c1",
        "0,0,1",
        "--c2",
        "1,-1,0",
        "--budget",
        "60",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("search exhausted"), "{}", stderr(&out));
}

#[test]
fn conjugate_rejects_a_non_cartan_input_with_exit_two() {
    let out = leibniz(&["conjugate", "example-3.2", "--c1", "1,0,0,0,0", "--c2", "0,0,1,0,0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not a Cartan subalgebra"), "{}", stderr(&out));
}

#[test]
fn examples_list_names_the_library() {
    let out = leibniz(&["examples", "list"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["example-3.1", "example-3.2", "abelian-", "filiform-leibniz-", "heisenberg", "sl2-as-leibniz", "solvable-"] {
        assert!(text.contains(name), "missing {name} in {text}");
    }
}

#[test]
fn examples_show_round_trips_through_a_file() {
    let shown = leibniz(&["examples", "show", "example-3.2"]);
    assert_eq!(code(&shown), 0);
    let doc_text = stdout(&shown);
    let f = write_temp(&doc_text);
    let path = f.path().to_str().unwrap();

    let from_file = leibniz(&["cartan", path]);
    let from_fixture = leibniz(&["cartan", "example-3.2"]);
    assert_eq!(code(&from_file), 0, "{}", stderr(&from_file));
    assert_eq!(stdout(&from_file), stdout(&from_fixture));
}

#[test]
fn seeded_machine_output_is_byte_identical_across_runs() {
    for args in [
        vec!["rank", "solvable-6-3", "--seed", "11", "--format", "json"],
        vec!["regular", "example-3.2", "--seed", "4", "--format", "json"],
        vec!["cartan", "solvable-4-2", "--seed", "7", "--format", "json"],
    ] {
        let a = leibniz(&args);
        let b = leibniz(&args);
        assert_eq!(code(&a), 0, "{}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn parameterized_fixture_names_resolve() {
    for name in ["abelian-4", "filiform-leibniz-5", "solvable-6-7", "solvable-3"] {
        let out = leibniz(&["info", name]);
        assert_eq!(code(&out), 0, "{name}: {}", stderr(&out));
    }
}

#[test]
fn series_reports_the_filiform_staircase() {
    let out = leibniz(&["series", "filiform-leibniz-4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("nilpotent: yes"), "{text}");
    assert!(text.contains("dim 4") && text.contains("dim 3") && text.contains("dim 2") && text.contains("dim 1"), "{text}");
}
