//! Cross-checks the identity files under `corpus/` against the engine.
//!
//! Every line must parse and render back to a fixed point, every
//! annotated line must produce its promised verdict, and every line that
//! names a catalog record must agree with the native evaluation of that
//! record: same verdict, and on failure the same minimal witness. The
//! native records and the language evaluator share no evaluation code
//! beyond the sequence constructors, so agreement here checks one against
//! the other.

use std::fs;
use std::path::{Path, PathBuf};

use balancing_core::dsl::{eval_identity, parse, parse_corpus, render, CorpusEntry};
use balancing_core::identity::{self, Profile, Verdict};

const IDL_FILES: &[&str] = &[
    "basics.idl",
    "thm-ogf.idl",
    "thm-egf.idl",
    "cor-cheb-sum.idl",
    "cor-fib-sum.idl",
    "cor-fib-binom.idl",
    "cor-fib-eps.idl",
    "cor-fib-eps-binom.idl",
    "literal-variants.idl",
    "mutations.idl",
];

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn read(name: &str) -> String {
    let path = corpus_dir().join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

fn entries(name: &str) -> Vec<CorpusEntry> {
    parse_corpus(&read(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn every_entry_renders_to_a_fixed_point() {
    let mut total = 0usize;
    for file in IDL_FILES {
        for entry in entries(file) {
            total += 1;
            let rendered = render(&entry.ast);
            let reparsed = parse(&rendered).unwrap_or_else(|e| {
                panic!(
                    "{file}:{}: `{}` renders as `{rendered}`, which fails to parse: {e}",
                    entry.line, entry.text
                )
            });
            assert_eq!(reparsed, entry.ast, "{file}:{}", entry.line);
            assert_eq!(render(&reparsed), rendered, "{file}:{}", entry.line);
        }
    }
    assert!(total >= 20, "corpus holds {total} identities, expected at least 20");
}

#[test]
fn annotated_verdicts_and_native_witnesses_agree() {
    let profile = Profile::quick();
    for file in IDL_FILES {
        for entry in entries(file) {
            let at = format!("{file}:{}", entry.line);
            let report =
                eval_identity(&entry.ast).unwrap_or_else(|e| panic!("{at}: {e}"));
            if let Some(expected) = entry.expect {
                assert_eq!(report.verdict, expected, "{at}: {}", entry.text);
            }
            let Some(id) = &entry.label else { continue };
            let native =
                identity::verify(id, &profile).unwrap_or_else(|e| panic!("{at}: {e}"));
            assert_eq!(native.verdict, report.verdict, "{at}: `{id}`");
            if let (Some(ours), Some(theirs)) =
                (&report.counterexample, &native.counterexample)
            {
                assert_eq!(ours.params, theirs.params, "{at}: witness for `{id}`");
            }
        }
    }
}

#[test]
fn theorem_corpus_promises_all_holds() {
    let list = entries("thm-ogf.idl");
    assert_eq!(list.len(), 9);
    for entry in &list {
        assert_eq!(entry.expect, Some(Verdict::Holds), "line {}", entry.line);
        let labeled = entry.label.as_deref().is_some_and(|l| l.starts_with("thm-ogf-"));
        assert!(labeled, "line {} is missing its record id", entry.line);
    }
}

#[test]
fn malformed_lines_are_rejected_with_positions() {
    let mut checked = 0usize;
    for line in read("malformed.txt").lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = parse(line).expect_err(&format!("`{line}` should not parse"));
        assert!(err.to_string().contains(" at 1:"), "`{line}`: {err}");
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} malformed inputs");
}

#[test]
fn mutation_witnesses_stay_small() {
    for entry in entries("mutations.idl") {
        let report = eval_identity(&entry.ast)
            .unwrap_or_else(|e| panic!("line {}: {e}", entry.line));
        assert_eq!(report.verdict, Verdict::Fails, "line {}: {}", entry.line, entry.text);
        let witness = report.counterexample.expect("failing identity carries a witness");
        for p in &witness.params {
            assert!(p.value <= 8, "line {}: witness {} = {}", entry.line, p.name, p.value);
        }
    }
}
