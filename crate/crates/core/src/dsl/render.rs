//! Canonical text form for identities.
//!
//! The renderer is the inverse of the parser up to whitespace: for every
//! tree `ast`, `parse(&render(&ast))` succeeds and returns a structurally
//! equal tree.  Parentheses are emitted exactly where the grammar needs
//! them, which makes rendered text a fixed point of render-then-parse.
//!
//! Canonical spacing: additive operators and `==` get single spaces,
//! multiplicative operators and `^` are tight, and `sum`/`binom` arguments
//! separate with `, `.

use std::fmt::Write;

use super::ast::{Expr, IdentityAst};

/// Grammar level an expression is being rendered into.  A child whose own
/// level is looser than its slot gets parenthesized.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum Level {
    Expr,
    Term,
    Unary,
    Power,
    Atom,
}

/// The loosest slot this expression can sit in without parentheses.
fn level(expr: &Expr) -> Level {
    match expr {
        Expr::Add(..) | Expr::Sub(..) => Level::Expr,
        Expr::Mul(..) | Expr::Div(..) => Level::Term,
        Expr::Neg(..) => Level::Unary,
        Expr::Pow(..) => Level::Power,
        Expr::Number(..)
        | Expr::Var(..)
        | Expr::X
        | Expr::Symbol(..)
        | Expr::Seq(..)
        | Expr::Eps(..)
        | Expr::Binom(..)
        | Expr::Sum { .. } => Level::Atom,
    }
}

fn write_at(out: &mut String, expr: &Expr, slot: Level) {
    if level(expr) < slot {
        out.push('(');
        write_expr(out, expr);
        out.push(')');
    } else {
        write_expr(out, expr);
    }
}

fn write_expr(out: &mut String, expr: &Expr) {
    match expr {
        Expr::Number(value) => {
            let _ = write!(out, "{value}");
        }
        Expr::Var(name) => out.push_str(name),
        Expr::X => out.push('x'),
        Expr::Symbol(symbol) => out.push_str(symbol.name()),
        Expr::Seq(seq, index) => {
            out.push_str(seq.name());
            out.push('(');
            write_expr(out, index);
            out.push(')');
        }
        Expr::Eps(index) => {
            out.push_str("eps(");
            write_expr(out, index);
            out.push(')');
        }
        Expr::Binom(n, k) => {
            out.push_str("binom(");
            write_expr(out, n);
            out.push_str(", ");
            write_expr(out, k);
            out.push(')');
        }
        Expr::Sum { index, lo, hi, body } => {
            out.push_str("sum(");
            out.push_str(index);
            out.push('=');
            write_expr(out, lo);
            out.push_str("..");
            write_expr(out, hi);
            out.push_str(", ");
            write_expr(out, body);
            out.push(')');
        }
        Expr::Neg(inner) => {
            out.push('-');
            write_at(out, inner, Level::Unary);
        }
        Expr::Add(a, b) => {
            write_at(out, a, Level::Expr);
            out.push_str(" + ");
            write_at(out, b, Level::Term);
        }
        Expr::Sub(a, b) => {
            write_at(out, a, Level::Expr);
            out.push_str(" - ");
            write_at(out, b, Level::Term);
        }
        Expr::Mul(a, b) => {
            write_at(out, a, Level::Term);
            out.push('*');
            write_at(out, b, Level::Unary);
        }
        Expr::Div(a, b) => {
            write_at(out, a, Level::Term);
            out.push('/');
            write_at(out, b, Level::Unary);
        }
        Expr::Pow(base, exponent) => {
            write_at(out, base, Level::Atom);
            out.push('^');
            write_at(out, exponent, Level::Unary);
        }
    }
}

/// Render an identity in canonical form.
pub fn render(ast: &IdentityAst) -> String {
    let mut out = String::new();
    write_expr(&mut out, &ast.lhs);
    out.push_str(" == ");
    write_expr(&mut out, &ast.rhs);
    out.push_str(" for ");
    for (pos, binding) in ast.bindings.iter().enumerate() {
        if pos > 0 {
            out.push_str(", ");
        }
        out.push_str(&binding.var);
        out.push_str(" in ");
        write_expr(&mut out, &binding.lo);
        out.push_str("..");
        write_expr(&mut out, &binding.hi);
    }
    out
}
