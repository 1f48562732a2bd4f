//! Syntax tree for the identity language.
//!
//! An [`IdentityAst`] is two expressions joined by `==` together with the
//! quantifier bindings that close over every free variable.  Expressions are
//! ordinary arithmetic over integer literals, bound variables, the formal
//! variable `x`, a fixed set of algebraic constants, and calls into the
//! sequence families the library defines.  The tree is deliberately plain:
//! no spans, no interning, so structural equality is `derive(PartialEq)` and
//! the render/parse round-trip law can be stated directly on values.

/// Sequence families callable from the language, always at the formal
/// variable `x` (or argumentless for the integer families).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqName {
    /// Balancing polynomials.
    B,
    /// Lucas-balancing polynomials.
    C,
    /// Chebyshev polynomials of the first kind.
    T,
    /// Chebyshev polynomials of the second kind.
    U,
    /// Chebyshev polynomials of the third kind.
    V,
    /// Chebyshev polynomials of the fourth kind.
    W,
    /// Fibonacci numbers.
    F,
    /// Lucas numbers.
    L,
}

impl SeqName {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "B" => Some(Self::B),
            "C" => Some(Self::C),
            "T" => Some(Self::T),
            "U" => Some(Self::U),
            "V" => Some(Self::V),
            "W" => Some(Self::W),
            "F" => Some(Self::F),
            "L" => Some(Self::L),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::B => "B",
            Self::C => "C",
            Self::T => "T",
            Self::U => "U",
            Self::V => "V",
            Self::W => "W",
            Self::F => "F",
            Self::L => "L",
        }
    }
}

/// Named algebraic constants.
///
/// `sqD` and `lam` live in the quadratic extension by `sqrt(9x^2-1)`,
/// `omega` in the extension by `sqrt(x^2-1)`, and the rest in the scalar
/// field adjoining `i` and `sqrt(5)`.  The evaluator infers the ring from
/// which of these an identity mentions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    /// `sqrt(9x^2 - 1)`.
    SqD,
    /// `3x + sqrt(9x^2 - 1)`, the balancing growth unit.
    Lam,
    /// `sqrt(5)`.
    Sq5,
    /// `(1 + sqrt(5)) / 2`.
    Alpha,
    /// `(1 - sqrt(5)) / 2`.
    Beta,
    /// The imaginary unit.
    Im,
    /// `x + sqrt(x^2 - 1)`, the Chebyshev growth unit.
    Omega,
}

impl Symbol {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "sqD" => Some(Self::SqD),
            "lam" => Some(Self::Lam),
            "sq5" => Some(Self::Sq5),
            "alpha" => Some(Self::Alpha),
            "beta" => Some(Self::Beta),
            "im" => Some(Self::Im),
            "omega" => Some(Self::Omega),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::SqD => "sqD",
            Self::Lam => "lam",
            Self::Sq5 => "sq5",
            Self::Alpha => "alpha",
            Self::Beta => "beta",
            Self::Im => "im",
            Self::Omega => "omega",
        }
    }
}

/// One expression node.  Subtraction and division are their own variants
/// (rather than sugar) so that rendering reproduces the source shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Unsigned integer literal; negative numbers are unary minus applied
    /// to one of these.
    Number(u64),
    /// Variable bound by a quantifier or an enclosing `sum`.
    Var(String),
    /// The formal polynomial variable.
    X,
    /// A named algebraic constant.
    Symbol(Symbol),
    /// Sequence call, e.g. `B(n+1)`.  The argument is the index.
    Seq(SeqName, Box<Expr>),
    /// The sign unit `eps(k)`: `1` for even `k`, `i` for odd.
    Eps(Box<Expr>),
    /// Binomial coefficient.
    Binom(Box<Expr>, Box<Expr>),
    /// Finite sum over an inclusive integer range.
    Sum {
        index: String,
        lo: Box<Expr>,
        hi: Box<Expr>,
        body: Box<Expr>,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// `base ^ exponent`; the exponent must evaluate to an integer.
    Pow(Box<Expr>, Box<Expr>),
}

/// One quantifier binding `var in lo..hi`.  The range bounds are constant
/// integer expressions; the inclusive range may be empty, in which case the
/// identity holds vacuously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub var: String,
    pub lo: Expr,
    pub hi: Expr,
}

/// A complete identity: `lhs == rhs for bindings`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityAst {
    pub lhs: Expr,
    pub rhs: Expr,
    pub bindings: Vec<Binding>,
}
