//! A small text language for stating identities, backed by the same
//! verification engine as the built-in catalog.
//!
//! One identity is a line of the form
//!
//! ```text
//! C(n)^2 - (9*x^2 - 1)*B(n)^2 == 1 for n in 0..40
//! ```
//!
//! with expressions built from integer literals, the formal variable `x`,
//! sequence calls (`B`, `C`, `T`, `U`, `V`, `W` for the polynomial
//! families, `F`, `L` for Fibonacci and Lucas numbers), the constants
//! `sqD`, `lam`, `sq5`, `alpha`, `beta`, `im`, `omega`, the sign unit
//! `eps(k)`, binomial coefficients `binom(n, k)`, finite sums
//! `sum(k=lo..hi, body)`, and `+ - * / ^`.  `^` binds tightest and is
//! right-associative, then unary minus, then `* /`, then `+ -`; rational
//! constants are written as quotients like `1/2`.  Every variable must be
//! bound by the trailing quantifier clause or an enclosing `sum`, and
//! quantifier ranges are constant.  Sequence calls take the index only:
//! the argument of the polynomial families is always the formal `x`.
//!
//! [`parse`] turns text into an [`IdentityAst`], [`render`] prints the
//! canonical form (a fixed point of parse-then-render), and
//! [`eval_identity`] walks the quantifier grid exactly in the inferred
//! ring and reports `HOLDS` or `FAILS` with the first counterexample.
//!
//! Identity files (`.idl`) hold one identity per line; `#` starts a
//! comment line and blank lines are skipped.  Two comment forms are
//! annotations for tooling: `# id: <name>` names the next identity and
//! `# expect: HOLDS|FAILS` records the verdict it should produce.

mod ast;
mod eval;
mod lexer;
mod parser;
mod render;
#[cfg(test)]
mod tests;

use thiserror::Error;

pub use ast::{Binding, Expr, IdentityAst, SeqName, Symbol};
pub use eval::eval_identity;
pub use parser::parse;
pub use render::render;

use crate::identity::Verdict;

/// Everything that can go wrong between text and verdict.  Positions are
/// 1-based line and column within the parsed text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("lexical error at {line}:{col}: {message}")]
    Lexical { line: u32, col: u32, message: String },
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: u32, col: u32, message: String },
    #[error("unbound variable `{name}` at {line}:{col}")]
    Unbound { line: u32, col: u32, name: String },
    #[error("ring error: {message}")]
    Ring { message: String },
    #[error("evaluation error: {message}")]
    Eval { message: String },
}

impl DslError {
    /// Rebase the error onto a file line.  Identity files hold one
    /// identity per line, so parse positions always have line 1; this
    /// swaps in the line number within the file.
    fn with_line(mut self, file_line: u32) -> Self {
        match &mut self {
            DslError::Lexical { line, .. }
            | DslError::Syntax { line, .. }
            | DslError::Unbound { line, .. } => *line = file_line,
            DslError::Ring { .. } | DslError::Eval { .. } => {}
        }
        self
    }
}

/// One identity from an `.idl` file, with any annotations that preceded it.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// 1-based line number within the file.
    pub line: u32,
    /// Name from the nearest preceding `# id:` annotation.
    pub label: Option<String>,
    /// Verdict promised by the nearest preceding `# expect:` annotation.
    pub expect: Option<Verdict>,
    /// The identity text as written (trimmed).
    pub text: String,
    pub ast: IdentityAst,
}

/// Reads an identity file: one identity per line, `#` comments, blank
/// lines ignored.  `# id:` and `# expect:` comments annotate the next
/// identity line.  Parse errors point at the file line.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, DslError> {
    let mut entries = Vec::new();
    let mut label = None;
    let mut expect = None;
    for (index, raw) in text.lines().enumerate() {
        let line = index as u32 + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(name) = comment.strip_prefix("id:") {
                label = Some(name.trim().to_string());
            } else if let Some(verdict) = comment.strip_prefix("expect:") {
                expect = Some(match verdict.trim() {
                    "HOLDS" => Verdict::Holds,
                    "FAILS" => Verdict::Fails,
                    other => {
                        return Err(DslError::Syntax {
                            line,
                            col: 1,
                            message: format!("expected HOLDS or FAILS after `expect:`, found `{other}`"),
                        });
                    }
                });
            }
            continue;
        }
        let ast = parse(trimmed).map_err(|e| e.with_line(line))?;
        entries.push(CorpusEntry {
            line,
            label: label.take(),
            expect: expect.take(),
            text: trimmed.to_string(),
            ast,
        });
    }
    Ok(entries)
}
