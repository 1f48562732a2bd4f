//! End-to-end tests for the `balancing` binary: golden outputs for every
//! subcommand in each format, and the exit-code policy (0 when everything
//! HOLDS or nothing is verified, 1 when any record FAILS, 2 on usage or
//! parse errors).

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balancing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn workspace_file(relative: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(relative)
        .to_str()
        .expect("utf-8 path")
        .to_string()
}

/// Drops the trailing millis column from a csv row so goldens stay
/// deterministic.
fn strip_millis(line: &str) -> &str {
    line.rsplit_once(',').expect("csv row has columns").0
}

#[test]
fn gen_balancing_at_one_matches_integer_sequence() {
    let out = run(&["gen", "--family", "B", "--count", "5", "--at", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\n1\n6\n35\n204\n");
}

#[test]
fn gen_polynomial_text_golden() {
    let out = run(&["gen", "--family", "C", "--count", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["gen", "--family", "B", "--count", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\n1\n6*x\n-1 + 36*x^2\n");
}

#[test]
fn gen_csv_golden() {
    let out = run(&["gen", "--family", "B", "--count", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n,coefficients\n0,0\n1,1\n2,0 6\n3,-1 0 36\n4,0 -12 0 216\n"
    );
}

#[test]
fn gen_json_golden() {
    let out = run(&["gen", "--family", "B", "--count", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(
        rows,
        serde_json::json!([
            { "n": 0, "coefficients": ["0"] },
            { "n": 1, "coefficients": ["1"] },
        ])
    );

    let out = run(&[
        "gen", "--family", "C", "--count", "2", "--at", "1/2", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(
        rows,
        serde_json::json!([
            { "n": 0, "value": "1" },
            { "n": 1, "value": "3/2" },
        ])
    );
}

#[test]
fn gen_chebyshev_families_are_available() {
    let out = run(&["gen", "--family", "V", "--count", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n-1 + 2*x\n");

    let out = run(&["gen", "--family", "W", "--count", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n1 + 2*x\n");
}

#[test]
fn series_ogf_text_golden() {
    let out = run(&["series", "--which", "ogf-b", "--order", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\n1\n6*x\n-1 + 36*x^2\n");

    let out = run(&["series", "--which", "ogf-b-odd", "--order", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n-1 + 36*x^2\n");
}

#[test]
fn series_rows_are_the_sequence_members() {
    // OGF coefficients are the family members themselves, and the EGF
    // rows are reported normalized, so both tables match gen.
    let series = run(&["series", "--which", "ogf-c", "--order", "4"]);
    let table = run(&["gen", "--family", "C", "--count", "5"]);
    assert_eq!(stdout(&series), stdout(&table));

    let series = run(&["series", "--which", "egf-b", "--order", "4"]);
    let table = run(&["gen", "--family", "B", "--count", "5"]);
    assert_eq!(stdout(&series), stdout(&table));
}

#[test]
fn series_json_golden() {
    let out = run(&["series", "--which", "egf-c", "--order", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(
        rows,
        serde_json::json!([
            { "k": 0, "coefficients": ["1"] },
            { "k": 1, "coefficients": ["0", "3"] },
            { "k": 2, "coefficients": ["-1", "0", "18"] },
        ])
    );
}

const LEMMAS_QUICK_GOLDEN: &str = "\
lem-ogf-all  canonical  Q[x]  case in 0..3, order in 0..12  points=52  HOLDS
lem-ogf-odd  canonical  Q[x]  case in 0..3, order in 0..12  points=52  HOLDS
lem-ogf-even  canonical  Q[x]  case in 0..3, order in 0..12  points=52  HOLDS
lem-egf-all  canonical  Q[x]  case in 0..3, order in 0..10  points=44  HOLDS
lem-egf-odd  canonical  Q[x]  case in 0..3, order in 0..10  points=44  HOLDS
lem-egf-even  canonical  Q[x]  case in 0..3, order in 0..10  points=44  HOLDS
lem-cheb-u  canonical  Q[x]  n in 1..16  points=16  HOLDS
lem-cheb-t  canonical  Q[x]  n in 1..16  points=16  HOLDS
lem-fib-half-b  canonical  Q  n in 0..64  points=65  HOLDS
lem-fib-half-c  canonical  Q  n in 0..64  points=65  HOLDS
lem-fib-eps-b  canonical  Q(i)  n in 0..16, s in 1..8  points=136  HOLDS
lem-fib-eps-c  canonical  Q(i)  n in 0..16, s in 1..8  points=136  HOLDS
";

#[test]
fn verify_lemmas_quick_text_golden() {
    let out = run(&["verify", "--suite", "lemmas", "--depth", "quick"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), LEMMAS_QUICK_GOLDEN);
}

#[test]
fn verify_csv_header_and_rows() {
    let out = run(&["verify", "--suite", "chebyshev", "--depth", "quick", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("id,reading,ring,params,points,verdict,witness,difference,millis")
    );
    assert_eq!(
        strip_millis(lines.next().expect("first data row")),
        "cor-cheb-sum-1,canonical,Q[x],n in 1..16,16,HOLDS,,"
    );
    // 4 sums, 9 binomial identities, and the two remark records.
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn verify_json_schema_is_stable() {
    let out = run(&[
        "verify", "--suite", "fibonacci-x-half", "--depth", "quick", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    let rows = rows.as_array().expect("array of reports");
    assert_eq!(rows.len(), 13);
    for row in rows {
        let obj = row.as_object().expect("report object");
        for key in [
            "id", "source", "reading", "ring", "params_tested", "points", "verdict", "millis",
        ] {
            assert!(obj.contains_key(key), "missing field {key}");
        }
        assert_eq!(row["verdict"], "HOLDS");
        assert!(obj.get("counterexample").is_none());
    }
}

#[test]
fn verify_literal_readings_report_minimal_witnesses() {
    let out = run(&[
        "verify", "--suite", "ogf-theorems", "--readings", "literal", "--depth", "quick",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("thm-ogf-sum-3-literal"));
    assert!(lines[0].contains("FAILS at n = 1"));
    assert!(lines[1].starts_with("thm-ogf-sum-4-literal"));
    assert!(lines[1].contains("FAILS at n = 2"));
}

#[test]
fn eps_grid_alias_covers_both_readings() {
    let out = run(&["verify", "--suite", "cor-fib-eps-grid", "--depth", "quick"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 28);
    assert!(text.lines().any(|l| l.contains("  canonical  ")));
    assert!(text.lines().any(|l| l.contains("  literal  ")));
}

fn zero_millis(mut value: serde_json::Value) -> serde_json::Value {
    for row in value.as_array_mut().expect("report array") {
        row["millis"] = 0.into();
    }
    value
}

#[test]
fn committed_eps_report_regenerates() {
    let committed = std::fs::read_to_string(workspace_file("reports/eps-corollaries.json"))
        .expect("committed report");
    let committed: serde_json::Value = serde_json::from_str(&committed).expect("valid json");
    let out = run(&["verify", "--suite", "fibonacci-eps", "--readings", "all", "--format", "json"]);
    // The grid deliberately includes readings that fail.
    assert_eq!(code(&out), 1);
    let fresh: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(zero_millis(fresh), zero_millis(committed));
}

#[test]
fn check_theorem_corpus_holds() {
    let out = run(&["check", &workspace_file("corpus/thm-ogf.idl")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    for line in text.lines() {
        assert!(line.starts_with("thm-ogf-"), "unexpected id in {line}");
        assert!(line.ends_with("HOLDS"), "unexpected verdict in {line}");
    }
}

#[test]
fn check_json_keeps_corpus_labels() {
    let out = run(&[
        "check",
        &workspace_file("corpus/thm-ogf.idl"),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    let rows = rows.as_array().expect("array of reports");
    assert_eq!(rows.len(), 9);
    for row in rows {
        let id = row["id"].as_str().expect("string id");
        assert!(id.starts_with("thm-ogf-"), "unexpected id {id}");
        assert_eq!(row["verdict"], "HOLDS");
    }
}

#[test]
fn check_mutations_fail_with_witnesses() {
    let out = run(&["check", &workspace_file("corpus/mutations.idl")]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    for line in text.lines() {
        assert!(line.contains("FAILS at"), "expected a witness in {line}");
        assert!(line.contains("difference ="), "expected a difference in {line}");
    }
}

#[test]
fn check_missing_file_is_a_usage_error() {
    let out = run(&["check", "no-such-file.idl"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no-such-file.idl"));
}

#[test]
fn check_malformed_file_reports_a_location() {
    let out = run(&["check", &workspace_file("corpus/malformed.txt")]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("malformed.txt"));
    assert!(err.contains(" at "), "expected a line:column location in {err}");
}

#[test]
fn bfile_balancing_at_one_golden() {
    let out = run(&["bfile", "--family", "B", "--count", "6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 0\n1 1\n2 6\n3 35\n4 204\n5 1189\n");
}

#[test]
fn bfile_fibonacci_golden() {
    let out = run(&["bfile", "--family", "F", "--count", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 0\n1 1\n2 1\n");
}

#[test]
fn bfile_rejects_non_integer_values() {
    let out = run(&["bfile", "--family", "C", "--count", "3", "--at", "1/2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not an integer"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["gen", "--family", "Q", "--count", "1"],
        &["gen", "--family", "B", "--count", "0"],
        &["gen", "--family", "B"],
        &["gen", "--family", "B", "--count", "2", "--at", "1/0"],
        &["gen", "--family", "B", "--count", "2", "--at", "x"],
        &["series", "--which", "ogf-q", "--order", "2"],
        &["series", "--which", "b", "--order", "2"],
        &["verify", "--suite", "nope"],
        &["verify", "--suite", "lemmas", "--depth", "turbo"],
        &["verify", "--suite", "lemmas", "--readings", "sideways"],
        &["bfile", "--family", "B", "--count", "0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 2, "expected usage error for {args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    for name in ["gen", "series", "verify", "check", "bfile"] {
        assert!(stdout(&out).contains(name), "help misses {name}");
    }
}
