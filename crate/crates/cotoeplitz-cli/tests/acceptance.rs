//! The end-to-end acceptance gate for the command line tool, plus the
//! surrounding contract: exit codes, determinism, format round trips,
//! and the documented example invocations. The engine-level criteria
//! live in the library crate's own acceptance target.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

use cotoeplitz::operators::{matrix_of_symbol, Truncation};
use cotoeplitz::coalgebra::Suq2Instance;
use cotoeplitz::linear::Element;
use cotoeplitz::serial;
use cotoeplitz::suq2::{BasisMonomial, WeightFunction};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cotoeplitz"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary spawns")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("cotoeplitz-test-{name}"));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn criterion_15_verify_all_passes_and_reparses() {
    let start = Instant::now();
    let out = run(&["verify", "all", "--seed", "7", "--trunc", "5"]);
    let elapsed = start.elapsed();

    let mut pass = out.status.code() == Some(0);
    pass &= elapsed.as_secs() < 300;
    let report = stdout_json(&out);
    pass &= report["all_satisfied"] == Value::Bool(true);
    pass &= report["suites"].as_array().map(|s| s.len()) == Some(11);
    for suite in report["suites"].as_array().unwrap() {
        pass &= suite["satisfied"] == Value::Bool(true);
        for check in suite["checks"].as_array().unwrap() {
            pass &= check["satisfied"] == Value::Bool(true);
        }
    }

    println!(
        "acceptance 15 {} full verification run exits clean and re-parses ({:.1?})",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(pass);
}

#[test]
fn identical_configurations_give_identical_bytes() {
    let args = ["verify", "projection", "--seed", "3", "--trunc", "4"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let matrix_args = ["matrix", "--symbol", "aac", "--trunc", "4"];
    assert_eq!(run(&matrix_args).stdout, run(&matrix_args).stdout);
}

#[test]
fn configuration_errors_exit_with_code_two() {
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "rewrite", "--q", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "rewrite", "--q", "3/0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "rewrite", "--q", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "rewrite", "--trunc", "0"]).status.code(), Some(2));
    assert_eq!(run(&["matrix", "--symbol", "a", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["matrix", "--symbol", "xyz"]).status.code(), Some(2));
    assert_eq!(run(&["matrix"]).status.code(), Some(2));
    assert_eq!(
        run(&["matrix", "--symbol", "a", "--cosymbol", "counit"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["relations", "/no/such/file"]).status.code(), Some(2));

    let bad_weight = temp_file("bad-weight.txt", "1 0 0\n");
    assert_eq!(
        run(&["verify", "rewrite", "--weight", bad_weight.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn exported_matrices_round_trip_and_match_the_engine() {
    for (symbol, k, l, m) in [("1,2,0", 1, 2, 0), ("0,1,1", 0, 1, 1)] {
        let out = run(&["matrix", "--symbol", symbol, "--trunc", "4"]);
        assert_eq!(out.status.code(), Some(0));
        let parsed = serial::matrix_from_json(&stdout_json(&out)).expect("round trip");

        let inst = Suq2Instance::with_weight(WeightFunction::one());
        let g = Element::basis(BasisMonomial::new(k, l, m));
        assert_eq!(parsed, matrix_of_symbol(&inst, &g, &Truncation::new(4)));
    }
}

#[test]
fn documented_matrix_examples_behave_as_recorded() {
    // The lone starred letter gives the zero operator.
    let zero = stdout_json(&run(&["matrix", "--symbol", "C", "--trunc", "3"]));
    assert_eq!(zero["entries"].as_array().unwrap().len(), 0);

    // The balanced symbol c c* gives a diagonal operator.
    let balanced = stdout_json(&run(&["matrix", "--symbol", "0,1,1", "--trunc", "3"]));
    for entry in balanced["entries"].as_array().unwrap() {
        assert_eq!(entry["row"], entry["col"]);
        assert_eq!(entry["row_kind"], entry["col_kind"]);
    }

    // The counit co-symbol acts as the identity: one diagonal entry per
    // basis label, ten labels at truncation 3.
    let counit = stdout_json(&run(&["matrix", "--cosymbol", "counit", "--trunc", "3"]));
    let entries = counit["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 10);
    for entry in entries {
        assert_eq!(entry["row"], entry["col"]);
    }
    assert_eq!(counit["escaped_cols"].as_array().unwrap().len(), 0);
}

#[test]
fn csv_export_needs_a_rational_q_and_then_specializes() {
    let out = run(&["matrix", "--symbol", "a", "--q", "1/2", "--format", "csv", "--trunc", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("row_kind,row_1,row_2,col_kind,col_1,col_2,re,im")
    );
    // The annihilation symbol preserves the total-degree-1 slice.
    let rest: Vec<&str> = lines.collect();
    assert_eq!(rest, ["phi,0,1,phi,0,1,1,0", "phi,1,0,phi,1,0,1,0"]);
}

#[test]
fn relations_classify_and_deform_from_a_file() {
    let rels = temp_file(
        "relations.txt",
        "# one classical candidate, one violated quantum relation\n\
         G(0,0,1)\n\
         G(1,0,0) G(0,1,0) - G(0,1,0) G(1,0,0) - 1\n",
    );
    let path = rels.to_str().unwrap();

    let out = run(&["relations", path]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    let rows = report["relations"].as_array().unwrap();
    assert_eq!(rows.len(), 2);

    assert_eq!(rows[0]["class"], "classical");
    assert_eq!(rows[0]["degree"], 1);
    assert_eq!(rows[0]["verdict"]["verdict"], "candidate");

    assert_eq!(rows[1]["class"], "quantum");
    assert_eq!(rows[1]["verdict"]["verdict"], "violated");
    // The surviving unit of the commutator relation shows up on the
    // vacuum diagonal.
    assert_eq!(rows[1]["verdict"]["row"], rows[1]["verdict"]["col"]);

    // At square root zero the deformation collapses to the classical
    // part; at one it returns the relation unchanged.
    let collapsed = stdout_json(&run(&["relations", path, "--hbar-sqrt", "0"]));
    for row in collapsed["relations"].as_array().unwrap() {
        assert_eq!(row["deformed"], row["classical_part"]);
    }
    let intact = stdout_json(&run(&["relations", path, "--hbar-sqrt", "1"]));
    for row in intact["relations"].as_array().unwrap() {
        assert_eq!(row["deformed"], row["relation"]);
    }
}

#[test]
fn degenerate_specialization_warns_on_stderr_but_still_runs() {
    let out = run(&["matrix", "--symbol", "ca", "--q=-1", "--trunc", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("warning"));
    assert!(err.contains("-1"));
}

#[test]
fn weight_tables_and_both_subspace_spellings_are_accepted() {
    let weight = temp_file("weight.txt", "# demo\ndefault 1/2\n1 0 2\n0 1 3/4\n");
    let out = run(&[
        "verify",
        "theorem-9-1",
        "--weight",
        weight.to_str().unwrap(),
        "--trunc",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));

    for spelling in ["Pprime", "pprime"] {
        let out = run(&["verify", "cosymbols", "--subspace", spelling, "--trunc", "3"]);
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn info_lists_the_suites_and_the_resolved_configuration() {
    let out = run(&["info", "--q", "2/3", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let info = stdout_json(&out);
    let suites: Vec<&str> =
        info["suites"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect();
    assert!(suites.contains(&"identity-9-6"));
    assert!(suites.contains(&"theorem-9-1"));
    assert!(suites.contains(&"all"));
    assert_eq!(info["config"]["q"], "2/3");
    assert_eq!(info["config"]["seed"], 9);
}
