//! Recursive-descent parser for the identity language.
//!
//! Grammar, in precedence order (loosest first):
//!
//! ```text
//! identity := expr "==" expr "for" binding ("," binding)*
//! binding  := IDENT "in" expr ".." expr
//! expr     := term (("+" | "-") term)*
//! term     := unary (("*" | "/") unary)*
//! unary    := "-" unary | power
//! power    := atom ("^" unary)?
//! atom     := NUMBER | IDENT | call | "(" expr ")"
//! call     := SEQ "(" expr ")" | "binom" "(" expr "," expr ")"
//!           | "sum" "(" IDENT "=" expr ".." expr "," expr ")"
//!           | "eps" "(" expr ")"
//! ```
//!
//! `^` binds tighter than unary minus (so `-x^2` negates the square) and is
//! right-associative through the `unary` on its right-hand side.  Scope is
//! resolved here as well: every variable must be bound by the quantifier
//! clause or an enclosing `sum`, and quantifier ranges must be constant.

use super::ast::{Binding, Expr, IdentityAst, SeqName, Symbol};
use super::lexer::{lex, Spanned, Tok, TokenStream};
use super::DslError;

const KEYWORDS: [&str; 5] = ["for", "in", "sum", "binom", "eps"];

/// Where a variable occurrence sits, for scope checking.
struct Occurrence {
    name: String,
    line: u32,
    col: u32,
}

struct Parser {
    toks: Vec<Spanned>,
    end: (u32, u32),
    pos: usize,
    /// Variables bound by enclosing `sum` expressions.
    sum_vars: Vec<String>,
    /// Occurrences not bound by any `sum`; must be quantifier variables.
    free: Vec<Occurrence>,
    /// True while parsing a quantifier range, where no variable may appear.
    in_quantifier_range: bool,
}

impl Parser {
    fn new(stream: TokenStream) -> Self {
        Parser {
            toks: stream.toks,
            end: stream.end,
            pos: 0,
            sum_vars: Vec::new(),
            free: Vec::new(),
            in_quantifier_range: false,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (u32, u32) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col),
            None => self.end,
        }
    }

    fn error(&self, message: impl Into<String>) -> DslError {
        let (line, col) = self.here();
        DslError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(tok) => tok.describe(),
            None => "end of input".into(),
        }
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: &Tok) -> Result<(), DslError> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", want.describe(), self.found())))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<(), DslError> {
        match self.peek() {
            Some(Tok::Ident(name)) if name == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected `{word}`, found {}", self.found()))),
        }
    }

    /// A fresh binder name: plain identifier, not a keyword, sequence, or
    /// constant.
    fn binder(&mut self) -> Result<String, DslError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if KEYWORDS.contains(&name.as_str())
                    || SeqName::parse(&name).is_some()
                    || Symbol::parse(&name).is_some()
                    || name == "x"
                {
                    Err(self.error(format!("`{name}` is reserved and cannot be a binder")))
                } else {
                    self.pos += 1;
                    Ok(name)
                }
            }
            _ => Err(self.error(format!("expected a variable name, found {}", self.found()))),
        }
    }

    fn identity(&mut self) -> Result<IdentityAst, DslError> {
        let lhs = self.expr()?;
        self.expect(&Tok::Equals)?;
        let rhs = self.expr()?;
        self.expect_keyword("for")?;

        let mut bindings = Vec::new();
        loop {
            let var = self.binder()?;
            if bindings.iter().any(|b: &Binding| b.var == var) {
                return Err(self.error(format!("duplicate quantifier variable `{var}`")));
            }
            self.expect_keyword("in")?;
            self.in_quantifier_range = true;
            let lo = self.expr()?;
            self.expect(&Tok::Range)?;
            let hi = self.expr()?;
            self.in_quantifier_range = false;
            bindings.push(Binding { var, lo, hi });
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        if self.pos < self.toks.len() {
            return Err(self.error(format!("unexpected trailing {}", self.found())));
        }

        let bound: Vec<&str> = bindings.iter().map(|b| b.var.as_str()).collect();
        if let Some(occ) = self.free.iter().find(|o| !bound.contains(&o.name.as_str())) {
            return Err(DslError::Unbound {
                line: occ.line,
                col: occ.col,
                name: occ.name.clone(),
            });
        }
        Ok(IdentityAst { lhs, rhs, bindings })
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        if self.eat(&Tok::Minus) {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let exponent = self.unary()?;
            Ok(Expr::Pow(Box::new(base), Box::new(exponent)))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let (line, col) = self.here();
        match self.peek().cloned() {
            Some(Tok::Number(value)) => {
                self.pos += 1;
                Ok(Expr::Number(value))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ident_atom(name, line, col)
            }
            _ => Err(self.error(format!("expected an expression, found {}", self.found()))),
        }
    }

    fn ident_atom(&mut self, name: String, line: u32, col: u32) -> Result<Expr, DslError> {
        if name == "x" {
            return Ok(Expr::X);
        }
        if let Some(symbol) = Symbol::parse(&name) {
            return Ok(Expr::Symbol(symbol));
        }
        if let Some(seq) = SeqName::parse(&name) {
            self.expect(&Tok::LParen)?;
            let index = self.expr()?;
            self.expect(&Tok::RParen)?;
            return Ok(Expr::Seq(seq, Box::new(index)));
        }
        match name.as_str() {
            "eps" => {
                self.expect(&Tok::LParen)?;
                let index = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(Expr::Eps(Box::new(index)))
            }
            "binom" => {
                self.expect(&Tok::LParen)?;
                let n = self.expr()?;
                self.expect(&Tok::Comma)?;
                let k = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(Expr::Binom(Box::new(n), Box::new(k)))
            }
            "sum" => {
                self.expect(&Tok::LParen)?;
                let index = self.binder()?;
                self.expect(&Tok::Assign)?;
                let lo = self.expr()?;
                self.expect(&Tok::Range)?;
                let hi = self.expr()?;
                self.expect(&Tok::Comma)?;
                self.sum_vars.push(index.clone());
                let body = self.expr()?;
                self.sum_vars.pop();
                self.expect(&Tok::RParen)?;
                Ok(Expr::Sum {
                    index,
                    lo: Box::new(lo),
                    hi: Box::new(hi),
                    body: Box::new(body),
                })
            }
            "for" | "in" => {
                self.pos -= 1;
                Err(self.error(format!("expected an expression, found keyword `{name}`")))
            }
            _ => {
                if self.in_quantifier_range {
                    return Err(DslError::Syntax {
                        line,
                        col,
                        message: format!(
                            "quantifier ranges must be constant; `{name}` is not allowed here"
                        ),
                    });
                }
                if !self.sum_vars.iter().any(|v| v == &name) {
                    self.free.push(Occurrence {
                        name: name.clone(),
                        line,
                        col,
                    });
                }
                Ok(Expr::Var(name))
            }
        }
    }
}

/// Parse one identity.  Newlines count as ordinary whitespace; splitting a
/// file into identity lines is the corpus reader's job.
pub fn parse(text: &str) -> Result<IdentityAst, DslError> {
    let toks = lex(text)?;
    Parser::new(toks).identity()
}
