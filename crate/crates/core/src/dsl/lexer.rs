//! Tokenizer for the identity language.
//!
//! Tokens carry the 1-based line and column where they start so parse
//! errors can point at the offending character.  Whitespace (including
//! newlines) separates tokens and is otherwise ignored.

use super::DslError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Number(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    /// Single `=`, used only inside `sum(k=lo..hi, ...)`.
    Assign,
    /// The identity separator `==`.
    Equals,
    /// The range separator `..`.
    Range,
}

impl Tok {
    /// How the token reads in an error message.
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Ident(name) => format!("`{name}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Assign => "`=`".into(),
            Tok::Equals => "`==`".into(),
            Tok::Range => "`..`".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(super) struct Spanned {
    pub tok: Tok,
    pub line: u32,
    pub col: u32,
}

/// Lexed text plus the position just past its final character, which is
/// where end-of-input errors point.
pub(super) struct TokenStream {
    pub toks: Vec<Spanned>,
    pub end: (u32, u32),
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, line: u32, col: u32, message: impl Into<String>) -> DslError {
        DslError::Lexical {
            line,
            col,
            message: message.into(),
        }
    }

    fn run(mut self) -> Result<TokenStream, DslError> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            let (line, col) = (self.line, self.col);
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            let tok = match c {
                '0'..='9' => {
                    let mut value: u64 = 0;
                    while let Some(d) = self.chars.peek().and_then(|c| c.to_digit(10)) {
                        value = value
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(u64::from(d)))
                            .ok_or_else(|| {
                                self.error(line, col, "integer literal does not fit in 64 bits")
                            })?;
                        self.bump();
                    }
                    Tok::Number(value)
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            name.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(name)
                }
                '+' => {
                    self.bump();
                    Tok::Plus
                }
                '-' => {
                    self.bump();
                    Tok::Minus
                }
                '*' => {
                    self.bump();
                    Tok::Star
                }
                '/' => {
                    self.bump();
                    Tok::Slash
                }
                '^' => {
                    self.bump();
                    Tok::Caret
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '=' => {
                    self.bump();
                    if self.chars.peek() == Some(&'=') {
                        self.bump();
                        Tok::Equals
                    } else {
                        Tok::Assign
                    }
                }
                '.' => {
                    self.bump();
                    if self.chars.peek() == Some(&'.') {
                        self.bump();
                        Tok::Range
                    } else {
                        return Err(self.error(line, col, "expected `..`"));
                    }
                }
                other => {
                    return Err(self.error(line, col, format!("unexpected character `{other}`")));
                }
            };
            out.push(Spanned { tok, line, col });
        }
        Ok(TokenStream {
            toks: out,
            end: (self.line, self.col),
        })
    }
}

pub(super) fn lex(text: &str) -> Result<TokenStream, DslError> {
    Lexer::new(text).run()
}
