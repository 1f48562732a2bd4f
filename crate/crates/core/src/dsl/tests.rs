use proptest::prelude::*;

use super::ast::{Binding, Expr, IdentityAst, SeqName, Symbol};
use super::{eval_identity, parse, parse_corpus, render, DslError};
use crate::arith::{QuadExt, RationalFunction};
use crate::identity::{catalog, RingValue, Verdict};
use crate::seq;

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn must_parse(text: &str) -> IdentityAst {
    parse(text).unwrap_or_else(|e| panic!("{text:?} should parse: {e}"))
}

fn verdict_of(text: &str) -> crate::identity::VerificationReport {
    eval_identity(&must_parse(text)).unwrap_or_else(|e| panic!("{text:?} should evaluate: {e}"))
}

#[test]
fn exponentiation_is_right_associative_and_tighter_than_unary_minus() {
    let ast = must_parse("2^3^2 == 512 for n in 0..0");
    assert_eq!(
        ast.lhs,
        Expr::Pow(
            bx(Expr::Number(2)),
            bx(Expr::Pow(bx(Expr::Number(3)), bx(Expr::Number(2)))),
        )
    );
    assert_eq!(verdict_of("2^3^2 == 512 for n in 0..0").verdict, Verdict::Holds);

    let ast = must_parse("-x^2 == 0 - x^2 for n in 0..0");
    assert_eq!(ast.lhs, Expr::Neg(bx(Expr::Pow(bx(Expr::X), bx(Expr::Number(2))))));
    assert_eq!(verdict_of("-x^2 == 0 - x^2 for n in 0..0").verdict, Verdict::Holds);
}

#[test]
fn negative_exponents_and_parenthesized_bases_parse_distinctly() {
    let ast = must_parse("(-x)^2 == x^2 for n in 0..0");
    assert_eq!(
        ast.lhs,
        Expr::Pow(bx(Expr::Neg(bx(Expr::X))), bx(Expr::Number(2)))
    );
    assert_eq!(verdict_of("(-x)^2 == x^2 for n in 0..0").verdict, Verdict::Holds);
    assert_eq!(
        verdict_of("lam^-1 == 3*x - sqD for n in 0..0").verdict,
        Verdict::Holds
    );
}

#[test]
fn multiplication_binds_tighter_than_addition() {
    let ast = must_parse("1 + 2*3 == 7 for n in 0..0");
    assert_eq!(
        ast.lhs,
        Expr::Add(
            bx(Expr::Number(1)),
            bx(Expr::Mul(bx(Expr::Number(2)), bx(Expr::Number(3)))),
        )
    );
    assert_eq!(verdict_of("1 + 2*3 == 7 for n in 0..0").verdict, Verdict::Holds);
}

#[test]
fn rendering_is_canonical_and_a_fixed_point() {
    let cases = [
        "B(n) - 3*x*B(n-1) == C(n-1) for n in 1..50",
        "C(n)^2 - (9*x^2 - 1)*B(n)^2 == 1 for n in 0..40",
        "sum(k=0..n, binom(n, k)*F(k)) == F(2*n) for n in 0..12",
        "lam^n == C(n) + sqD*B(n) for n in 0..16",
        "omega^n + omega^-n == 2*T(n) for n in 1..12",
        "eps(s)^2*F(2*n) == eps(s)^2*F(2*n) for n in 0..4, s in 1..4",
        "-x^2 + (-x)^2 == 0 for n in 0..0",
        "alpha^n == alpha*F(n) + F(n-1) for n in 1..20",
        "2^3^2 == 512 for n in 0..0",
        "1/2*L(n) - F(n)/2 == F(n-1) for n in 1..10",
    ];
    for text in cases {
        let ast = must_parse(text);
        let canonical = render(&ast);
        let reparsed = parse(&canonical)
            .unwrap_or_else(|e| panic!("rendered form {canonical:?} should parse: {e}"));
        assert_eq!(reparsed, ast, "render of {text:?} changed structure");
        assert_eq!(render(&reparsed), canonical, "render of {text:?} is not a fixed point");
    }
}

#[test]
fn rendering_parenthesizes_only_where_the_grammar_requires() {
    let checks = [
        ("(B(n) + 1)*2 == 0 for n in 0..0", "(B(n) + 1)*2 == 0 for n in 0..0"),
        ("((B(n)) + (1)) == 0 for n in 0..0", "B(n) + 1 == 0 for n in 0..0"),
        ("x*(x*x) == x^3 for n in 0..0", "x*(x*x) == x^3 for n in 0..0"),
        ("-(x + 1) == -x - 1 for n in 0..0", "-(x + 1) == -x - 1 for n in 0..0"),
        ("(x^2)^3 == x^6 for n in 0..0", "(x^2)^3 == x^6 for n in 0..0"),
    ];
    for (input, canonical) in checks {
        assert_eq!(render(&must_parse(input)), canonical);
    }
}

fn arb_leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u64..100).prop_map(Expr::Number),
        Just(Expr::X),
        Just(Expr::Var("n".to_string())),
        prop_oneof![
            Just(Symbol::SqD),
            Just(Symbol::Lam),
            Just(Symbol::Sq5),
            Just(Symbol::Alpha),
            Just(Symbol::Beta),
            Just(Symbol::Im),
            Just(Symbol::Omega),
        ]
        .prop_map(Expr::Symbol),
    ]
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    arb_leaf().prop_recursive(4, 32, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(bx(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(bx(a), bx(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Pow(bx(a), bx(b))),
            inner.clone().prop_map(|e| Expr::Seq(SeqName::B, bx(e))),
            inner.clone().prop_map(|e| Expr::Seq(SeqName::L, bx(e))),
            inner.clone().prop_map(|e| Expr::Eps(bx(e))),
            (inner.clone(), inner.clone()).prop_map(|(n, k)| Expr::Binom(bx(n), bx(k))),
            (inner.clone(), inner.clone(), inner).prop_map(|(lo, hi, body)| Expr::Sum {
                index: "k".to_string(),
                lo: bx(lo),
                hi: bx(hi),
                body: bx(body),
            }),
        ]
    })
}

proptest! {
    // The round-trip law: rendering any well-formed tree and parsing the
    // result reproduces the tree, and rendering is a fixed point.
    #[test]
    fn render_then_parse_reproduces_the_tree(lhs in arb_expr(), rhs in arb_expr()) {
        let ast = IdentityAst {
            lhs,
            rhs,
            bindings: vec![Binding {
                var: "n".to_string(),
                lo: Expr::Number(0),
                hi: Expr::Number(3),
            }],
        };
        let text = render(&ast);
        let reparsed = parse(&text).expect("rendered text parses");
        prop_assert_eq!(&reparsed, &ast);
        prop_assert_eq!(render(&reparsed), text);
    }
}

#[test]
fn lexical_errors_carry_positions() {
    match parse("B(n) $ 1 == 0 for n in 0..1") {
        Err(DslError::Lexical { line: 1, col: 6, message }) => {
            assert!(message.contains('$'), "message was {message:?}");
        }
        other => panic!("expected a lexical error, got {other:?}"),
    }
    match parse("B(n) == 99999999999999999999 for n in 0..1") {
        Err(DslError::Lexical { line: 1, col: 9, .. }) => {}
        other => panic!("expected a lexical error, got {other:?}"),
    }
}

#[test]
fn syntax_errors_carry_positions() {
    // The unbalanced sum from the module documentation.
    match parse("sum(k=1..n, B(k) == 0 for n in 0..1") {
        Err(DslError::Syntax { line: 1, .. }) => {}
        other => panic!("expected a syntax error, got {other:?}"),
    }
    match parse("B(n == 0 for n in 0..1") {
        Err(DslError::Syntax { line: 1, col, .. }) => assert_eq!(col, 5),
        other => panic!("expected a syntax error, got {other:?}"),
    }
    match parse("B(n) == 1 for n in 0..") {
        Err(DslError::Syntax { line: 1, col: 23, .. }) => {}
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn unbound_variables_are_rejected_at_parse_time() {
    match parse("B(m) == 0 for n in 0..1") {
        Err(DslError::Unbound { line: 1, col: 3, name }) => assert_eq!(name, "m"),
        other => panic!("expected an unbound error, got {other:?}"),
    }
    // The sum binder scopes over its body only.
    match parse("sum(k=0..n, B(k)) + k == 0 for n in 0..1") {
        Err(DslError::Unbound { name, .. }) => assert_eq!(name, "k"),
        other => panic!("expected an unbound error, got {other:?}"),
    }
    // Quantifier ranges cannot reference variables at all.
    match parse("B(n) == B(n) for n in 1..n") {
        Err(DslError::Syntax { message, .. }) => {
            assert!(message.contains("constant"), "message was {message:?}");
        }
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn reserved_names_cannot_be_binders() {
    for text in [
        "1 == 1 for x in 0..1",
        "1 == 1 for sum in 0..1",
        "1 == 1 for B in 0..1",
        "1 == 1 for alpha in 0..1",
        "sum(x=0..1, 1) == 2 for n in 0..0",
    ] {
        assert!(
            matches!(parse(text), Err(DslError::Syntax { .. })),
            "{text:?} should be rejected"
        );
    }
}

#[test]
fn recurrence_and_pell_examples_hold() {
    let report = verdict_of("B(n) - 3*x*B(n-1) == C(n-1) for n in 1..50");
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.points, 50);
    assert_eq!(report.ring, "Q(x)");

    let report = verdict_of("C(n)^2 - (9*x^2 - 1)*B(n)^2 == 1 for n in 0..40");
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.points, 41);

    let report = verdict_of("F(n) == F(n-1) + F(n-2) for n in 2..30");
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.points, 29);
}

#[test]
fn failing_identity_reports_the_first_point_and_exact_difference() {
    let report = verdict_of("B(n) == C(n) for n in 1..3");
    assert_eq!(report.verdict, Verdict::Fails);
    let witness = report.counterexample.expect("counterexample");
    assert_eq!(witness.params.len(), 1);
    assert_eq!(witness.params[0].name, "n");
    assert_eq!(witness.params[0].value, 1);
    // B(1) - C(1) = 1 - 3x, rendered exactly as the engine renders it.
    let expected = RingValue::QuadRat(QuadExt::from_base(
        RationalFunction::from_poly(catalog::poly(&[1, -3])),
        seq::delta_balancing(),
    ));
    assert_eq!(witness.difference, expected.to_string());
}

#[test]
fn grids_traverse_last_axis_fastest() {
    // Fails at every point; the reported witness must be the first in
    // declaration order with the trailing axis moving fastest.
    let report = verdict_of("F(n+s) == 0 - 1 for n in 0..2, s in 1..2");
    let witness = report.counterexample.expect("counterexample");
    let pairs: Vec<(String, i64)> = witness
        .params
        .iter()
        .map(|p| (p.name.clone(), p.value))
        .collect();
    assert_eq!(pairs, vec![("n".to_string(), 0), ("s".to_string(), 1)]);
    assert_eq!(report.points, 1);
}

#[test]
fn empty_ranges_hold_vacuously() {
    let report = verdict_of("B(n) == C(n) for n in 5..1");
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.points, 0);
    assert!(report.counterexample.is_none());
}

#[test]
fn ring_inference_follows_the_constants() {
    assert_eq!(verdict_of("F(n) == F(n) for n in 0..2").ring, "Q(x)");
    assert_eq!(
        verdict_of("lam^n == C(n) + sqD*B(n) for n in 0..16").ring,
        "Q(x)[sqrt(9x^2-1)]"
    );
    let report = verdict_of("omega^n + omega^-n == 2*T(n) for n in 1..12");
    assert_eq!(report.ring, "Q(x)[sqrt(x^2-1)]");
    assert_eq!(report.verdict, Verdict::Holds);
    let report = verdict_of("alpha^n == alpha*F(n) + F(n-1) for n in 1..20");
    assert_eq!(report.ring, "Q(i)[sqrt(5)]");
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(
        verdict_of("eps(2*s)^2 == eps(s)^4 for s in 0..6").verdict,
        Verdict::Holds
    );
}

#[test]
fn mixed_rings_are_rejected_before_evaluation() {
    for text in [
        "alpha*x == x for n in 0..1",
        "sq5*B(n) == B(n) for n in 0..1",
        "sqD*omega == 1 for n in 0..1",
        "eps(n)*T(n) == T(n) for n in 0..1",
    ] {
        let ast = must_parse(text);
        assert!(
            matches!(eval_identity(&ast), Err(DslError::Ring { .. })),
            "{text:?} should be a ring error"
        );
    }
}

#[test]
fn evaluation_errors_name_the_grid_point() {
    let ast = must_parse("1/B(n) == 1/B(n) for n in 0..2");
    match eval_identity(&ast) {
        Err(DslError::Eval { message }) => {
            assert!(message.contains("division by zero"), "message was {message:?}");
            assert!(message.contains("n=0"), "message was {message:?}");
        }
        other => panic!("expected an evaluation error, got {other:?}"),
    }

    let ast = must_parse("B(n/2) == B(n/2) for n in 1..1");
    match eval_identity(&ast) {
        Err(DslError::Eval { message }) => {
            assert!(message.contains("not an integer"), "message was {message:?}");
            assert!(message.contains("n=1"), "message was {message:?}");
        }
        other => panic!("expected an evaluation error, got {other:?}"),
    }
}

#[test]
fn sums_and_binomials_evaluate_exactly() {
    let report = verdict_of("sum(k=0..n, binom(n, k)*F(k)) == F(2*n) for n in 0..12");
    assert_eq!(report.verdict, Verdict::Holds);
    // Empty sums are zero.
    assert_eq!(
        verdict_of("sum(k=1..0, B(k)) == 0 for n in 0..0").verdict,
        Verdict::Holds
    );
    // Sum ranges may reference enclosing binders; bodies may shadow.
    assert_eq!(
        verdict_of("sum(k=1..n, 2*k - 1) == n^2 for n in 0..8").verdict,
        Verdict::Holds
    );
}

#[test]
fn corpus_files_parse_with_annotations() {
    let text = "\
# A comment line.

# id: pell
# expect: HOLDS
C(n)^2 - (9*x^2 - 1)*B(n)^2 == 1 for n in 0..8

B(n) == B(n) for n in 0..2
";
    let entries = parse_corpus(text).expect("corpus parses");
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0].label.as_deref(), Some("pell"));
    assert_eq!(entries[0].expect, Some(Verdict::Holds));
    assert_eq!(entries[0].line, 5);
    assert_eq!(entries[1].label, None);
    assert_eq!(entries[1].expect, None);

    let bad = "B(n) == B(n) for n in 0..2\nB(m) == 0 for n in 0..2\n";
    match parse_corpus(bad) {
        Err(DslError::Unbound { line: 2, .. }) => {}
        other => panic!("expected an unbound error on line 2, got {other:?}"),
    }
}

#[test]
fn single_coefficient_mutations_fail_within_small_indices() {
    let doubling = verdict_of("B(n)*C(n) + B(n)*C(n) == B(2*n) for n in 0..12");
    assert_eq!(doubling.verdict, Verdict::Holds);

    // Perturbing one coefficient must be caught almost immediately.
    for text in [
        "C(n)^2 - (9*x^2 - 2)*B(n)^2 == 1 for n in 0..16",
        "B(n) == 6*x*B(n-1) - B(n-2) + 1 for n in 2..16",
        "F(n) == F(n-1) + 2*F(n-2) for n in 2..16",
    ] {
        let report = verdict_of(text);
        assert_eq!(report.verdict, Verdict::Fails, "{text:?} should fail");
        let witness = report.counterexample.expect("counterexample");
        assert!(
            witness.params[0].value <= 8,
            "{text:?} failed late, at {}",
            witness.params[0].value
        );
    }
}
