//! Exact evaluation of parsed identities.
//!
//! The ring an identity is checked in is inferred from the symbols it
//! mentions: `sqD` or `lam` select the quadratic extension of the rational
//! functions by `sqrt(9x^2-1)`, `omega` the extension by `sqrt(x^2-1)`,
//! and `sq5`, `alpha`, `beta`, `im`, or `eps` the scalar field adjoining
//! `i` and `sqrt(5)`.  Everything else evaluates over plain rational
//! functions of the formal variable.  Mixing the scalar constants with
//! polynomial symbols, or the two function-field radicals with each other,
//! is rejected before any grid point is touched.
//!
//! Grids walk the quantifier bindings in declaration order with the last
//! axis moving fastest, matching the native verification engine, so the
//! reported counterexample is always the lexicographically first failing
//! point.  An empty range makes the identity hold vacuously at zero points.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ast::{Expr, IdentityAst, SeqName, Symbol};
use super::DslError;
use crate::arith::{GaussianRational, QuadExt, RationalFunction, Ring};
use crate::identity::{
    AxisSummary, Counterexample, ParamValue, Reading, RingValue, Verdict, VerificationReport,
};
use crate::seq::{self, Family};

/// Ring selected for an identity.
#[derive(Clone, Copy, PartialEq, Eq)]
enum RingChoice {
    /// Rational functions of `x`; also covers constant identities.
    Function,
    /// `Q(x)[sqrt(9x^2-1)]`, home of `sqD` and `lam`.
    BalancingQuad,
    /// `Q(x)[sqrt(x^2-1)]`, home of `omega`.
    ChebyshevQuad,
    /// `Q(i)[sqrt(5)]`, home of `sq5`, `alpha`, `beta`, `im`, and `eps`.
    Scalar,
}

#[derive(Default)]
struct Uses {
    balancing_radical: bool,
    chebyshev_radical: bool,
    scalar: bool,
    formal: bool,
}

fn scan(expr: &Expr, uses: &mut Uses) {
    match expr {
        Expr::Number(_) | Expr::Var(_) => {}
        Expr::X => uses.formal = true,
        Expr::Symbol(symbol) => match symbol {
            Symbol::SqD | Symbol::Lam => uses.balancing_radical = true,
            Symbol::Omega => uses.chebyshev_radical = true,
            Symbol::Sq5 | Symbol::Alpha | Symbol::Beta | Symbol::Im => uses.scalar = true,
        },
        Expr::Seq(name, index) => {
            if !matches!(name, SeqName::F | SeqName::L) {
                uses.formal = true;
            }
            scan(index, uses);
        }
        Expr::Eps(index) => {
            uses.scalar = true;
            scan(index, uses);
        }
        Expr::Binom(n, k) => {
            scan(n, uses);
            scan(k, uses);
        }
        Expr::Sum { lo, hi, body, .. } => {
            scan(lo, uses);
            scan(hi, uses);
            scan(body, uses);
        }
        Expr::Neg(a) => scan(a, uses),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
            scan(a, uses);
            scan(b, uses);
        }
    }
}

fn infer_ring(ast: &IdentityAst) -> Result<RingChoice, DslError> {
    let mut uses = Uses::default();
    scan(&ast.lhs, &mut uses);
    scan(&ast.rhs, &mut uses);
    let ring_err = |message: &str| DslError::Ring {
        message: message.to_string(),
    };
    if uses.scalar && (uses.formal || uses.balancing_radical || uses.chebyshev_radical) {
        return Err(ring_err(
            "scalar constants (sq5, alpha, beta, im, eps) cannot mix with polynomial symbols",
        ));
    }
    if uses.balancing_radical && uses.chebyshev_radical {
        return Err(ring_err(
            "sqD/lam and omega live in different quadratic extensions and cannot mix",
        ));
    }
    Ok(if uses.scalar {
        RingChoice::Scalar
    } else if uses.balancing_radical {
        RingChoice::BalancingQuad
    } else if uses.chebyshev_radical {
        RingChoice::ChebyshevQuad
    } else {
        RingChoice::Function
    })
}

impl RingChoice {
    fn label(self) -> &'static str {
        match self {
            RingChoice::Function => "Q(x)",
            RingChoice::BalancingQuad => "Q(x)[sqrt(9x^2-1)]",
            RingChoice::ChebyshevQuad => "Q(x)[sqrt(x^2-1)]",
            RingChoice::Scalar => "Q(i)[sqrt(5)]",
        }
    }
}

/// Ring operations the generic grid walker needs.  Errors are bare
/// messages; the walker appends the grid point before surfacing them.
trait Context {
    type Elem: Clone;

    fn integer(&self, value: BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, String>;
    fn pow(&self, base: &Self::Elem, exponent: i64) -> Result<Self::Elem, String>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn x(&self) -> Result<Self::Elem, String>;
    fn symbol(&self, symbol: Symbol) -> Result<Self::Elem, String>;
    fn seq(&self, name: SeqName, index: i64) -> Result<Self::Elem, String>;
    fn eps(&self, index: i64) -> Result<Self::Elem, String>;
    fn wrap(&self, a: Self::Elem) -> RingValue;
}

/// Rational functions of `x`, optionally extended by one of the two
/// quadratic radicals.  The plain ring is the same representation with the
/// radical part permanently zero.
struct FunctionContext {
    choice: RingChoice,
    delta: RationalFunction,
}

impl FunctionContext {
    fn new(choice: RingChoice) -> Self {
        let delta = match choice {
            RingChoice::ChebyshevQuad => seq::delta_chebyshev(),
            _ => seq::delta_balancing(),
        };
        FunctionContext { choice, delta }
    }

    fn lift(&self, f: RationalFunction) -> QuadExt<RationalFunction> {
        QuadExt::from_base(f, self.delta.clone())
    }
}

impl Context for FunctionContext {
    type Elem = QuadExt<RationalFunction>;

    fn integer(&self, value: BigInt) -> Self::Elem {
        self.lift(RationalFunction::from_rational(BigRational::from_integer(
            value,
        )))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, String> {
        a.div(b).map_err(|_| "division by zero".to_string())
    }

    fn pow(&self, base: &Self::Elem, exponent: i64) -> Result<Self::Elem, String> {
        base.pow_i(exponent)
            .map_err(|_| "division by zero".to_string())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn x(&self) -> Result<Self::Elem, String> {
        Ok(self.lift(RationalFunction::x()))
    }

    fn symbol(&self, symbol: Symbol) -> Result<Self::Elem, String> {
        match (symbol, self.choice) {
            (Symbol::SqD, RingChoice::BalancingQuad) => Ok(QuadExt::sqrt_delta(self.delta.clone())),
            (Symbol::Lam, RingChoice::BalancingQuad) => Ok(seq::lambda()),
            (Symbol::Omega, RingChoice::ChebyshevQuad) => Ok(seq::omega()),
            _ => Err(format!(
                "constant `{}` is not available in {}",
                symbol.name(),
                self.choice.label()
            )),
        }
    }

    fn seq(&self, name: SeqName, index: i64) -> Result<Self::Elem, String> {
        let poly = match name {
            SeqName::B => seq::balancing_i(index),
            SeqName::C => seq::lucas_balancing_i(index),
            SeqName::T => seq::chebyshev_i(Family::T, index).map_err(|e| e.to_string())?,
            SeqName::U => seq::chebyshev_i(Family::U, index).map_err(|e| e.to_string())?,
            SeqName::V => seq::chebyshev_i(Family::V, index).map_err(|e| e.to_string())?,
            SeqName::W => seq::chebyshev_i(Family::W, index).map_err(|e| e.to_string())?,
            SeqName::F => return Ok(self.integer(seq::fibonacci_i(index))),
            SeqName::L => return Ok(self.integer(seq::lucas_i(index))),
        };
        Ok(self.lift(RationalFunction::from_poly(poly)))
    }

    fn eps(&self, _index: i64) -> Result<Self::Elem, String> {
        Err(format!("`eps` is not available in {}", self.choice.label()))
    }

    fn wrap(&self, a: Self::Elem) -> RingValue {
        RingValue::QuadRat(a)
    }
}

/// The scalar field `Q(i)[sqrt(5)]`.
struct ScalarContext {
    delta: GaussianRational,
}

impl ScalarContext {
    fn new() -> Self {
        ScalarContext {
            delta: GaussianRational::from_i64(5),
        }
    }

    fn lift(&self, g: GaussianRational) -> QuadExt<GaussianRational> {
        QuadExt::from_base(g, self.delta.clone())
    }
}

impl Context for ScalarContext {
    type Elem = QuadExt<GaussianRational>;

    fn integer(&self, value: BigInt) -> Self::Elem {
        self.lift(GaussianRational::from_rational(BigRational::from_integer(
            value,
        )))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, String> {
        a.div(b).map_err(|_| "division by zero".to_string())
    }

    fn pow(&self, base: &Self::Elem, exponent: i64) -> Result<Self::Elem, String> {
        base.pow_i(exponent)
            .map_err(|_| "division by zero".to_string())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn x(&self) -> Result<Self::Elem, String> {
        Err("the formal variable `x` is not available in Q(i)[sqrt(5)]".to_string())
    }

    fn symbol(&self, symbol: Symbol) -> Result<Self::Elem, String> {
        match symbol {
            Symbol::Sq5 => Ok(seq::sqrt_five()),
            Symbol::Alpha => Ok(seq::alpha()),
            Symbol::Beta => Ok(seq::beta()),
            Symbol::Im => Ok(self.lift(GaussianRational::i())),
            Symbol::SqD | Symbol::Lam | Symbol::Omega => Err(format!(
                "constant `{}` is not available in Q(i)[sqrt(5)]",
                symbol.name()
            )),
        }
    }

    fn seq(&self, name: SeqName, index: i64) -> Result<Self::Elem, String> {
        match name {
            SeqName::F => Ok(self.integer(seq::fibonacci_i(index))),
            SeqName::L => Ok(self.integer(seq::lucas_i(index))),
            _ => Err(format!(
                "polynomial sequence `{}` is not available in Q(i)[sqrt(5)]",
                name.name()
            )),
        }
    }

    fn eps(&self, index: i64) -> Result<Self::Elem, String> {
        Ok(self.lift(seq::eps(index)))
    }

    fn wrap(&self, a: Self::Elem) -> RingValue {
        RingValue::QuadGauss(a)
    }
}

/// Variable environment: quantifier values plus any enclosing `sum`
/// binders, innermost last so shadowing resolves to the nearest binder.
type Env = Vec<(String, i64)>;

fn lookup(env: &Env, name: &str) -> Result<i64, String> {
    env.iter()
        .rev()
        .find(|(n, _)| n == name)
        .map(|(_, v)| *v)
        .ok_or_else(|| format!("unbound variable `{name}`"))
}

/// Exact integer evaluation for indices, exponents, and ranges.  `F` and
/// `L` calls are permitted since those sequences are integer-valued.
fn eval_int(expr: &Expr, env: &Env) -> Result<i64, String> {
    match expr {
        Expr::Number(value) => {
            i64::try_from(*value).map_err(|_| "integer literal too large".to_string())
        }
        Expr::Var(name) => lookup(env, name),
        Expr::Neg(a) => eval_int(a, env)?
            .checked_neg()
            .ok_or_else(|| "integer overflow".to_string()),
        Expr::Add(a, b) => eval_int(a, env)?
            .checked_add(eval_int(b, env)?)
            .ok_or_else(|| "integer overflow".to_string()),
        Expr::Sub(a, b) => eval_int(a, env)?
            .checked_sub(eval_int(b, env)?)
            .ok_or_else(|| "integer overflow".to_string()),
        Expr::Mul(a, b) => eval_int(a, env)?
            .checked_mul(eval_int(b, env)?)
            .ok_or_else(|| "integer overflow".to_string()),
        Expr::Div(a, b) => {
            let a = eval_int(a, env)?;
            let b = eval_int(b, env)?;
            if b == 0 {
                Err("division by zero".to_string())
            } else if a % b != 0 {
                Err(format!("{a}/{b} is not an integer"))
            } else {
                Ok(a / b)
            }
        }
        Expr::Pow(base, exponent) => {
            let base = eval_int(base, env)?;
            let exponent = eval_int(exponent, env)?;
            if exponent < 0 {
                match base {
                    1 => Ok(1),
                    -1 => Ok(if exponent % 2 == 0 { 1 } else { -1 }),
                    0 => Err("division by zero".to_string()),
                    _ => Err(format!("{base}^{exponent} is not an integer")),
                }
            } else {
                let exponent = u32::try_from(exponent)
                    .map_err(|_| "integer overflow".to_string())?;
                base.checked_pow(exponent)
                    .ok_or_else(|| "integer overflow".to_string())
            }
        }
        Expr::Binom(n, k) => {
            let value = seq::binomial(eval_int(n, env)?, eval_int(k, env)?);
            i64::try_from(&value).map_err(|_| "integer overflow".to_string())
        }
        Expr::Seq(SeqName::F, index) => i64::try_from(&seq::fibonacci_i(eval_int(index, env)?))
            .map_err(|_| "integer overflow".to_string()),
        Expr::Seq(SeqName::L, index) => i64::try_from(&seq::lucas_i(eval_int(index, env)?))
            .map_err(|_| "integer overflow".to_string()),
        Expr::Sum { index, lo, hi, body } => {
            let lo = eval_int(lo, env)?;
            let hi = eval_int(hi, env)?;
            let mut env = env.clone();
            let mut acc: i64 = 0;
            for k in lo..=hi {
                env.push((index.clone(), k));
                acc = acc
                    .checked_add(eval_int(body, &env)?)
                    .ok_or_else(|| "integer overflow".to_string())?;
                env.pop();
            }
            Ok(acc)
        }
        other => Err(format!("`{}` is not an integer", describe(other))),
    }
}

/// Short name for an expression head, for integer-position errors.
fn describe(expr: &Expr) -> &'static str {
    match expr {
        Expr::X => "x",
        Expr::Symbol(symbol) => symbol.name(),
        Expr::Seq(name, _) => name.name(),
        Expr::Eps(_) => "eps",
        Expr::Div(..) => "a quotient",
        _ => "this expression",
    }
}

fn eval_ring<C: Context>(cx: &C, expr: &Expr, env: &mut Env) -> Result<C::Elem, String> {
    match expr {
        Expr::Number(value) => Ok(cx.integer(BigInt::from(*value))),
        Expr::Var(name) => Ok(cx.integer(BigInt::from(lookup(env, name)?))),
        Expr::X => cx.x(),
        Expr::Symbol(symbol) => cx.symbol(*symbol),
        Expr::Seq(name, index) => {
            let index = eval_int(index, env)?;
            cx.seq(*name, index)
        }
        Expr::Eps(index) => {
            let index = eval_int(index, env)?;
            cx.eps(index)
        }
        Expr::Binom(n, k) => Ok(cx.integer(seq::binomial(eval_int(n, env)?, eval_int(k, env)?))),
        Expr::Sum { index, lo, hi, body } => {
            let lo = eval_int(lo, env)?;
            let hi = eval_int(hi, env)?;
            let mut acc = cx.integer(BigInt::from(0));
            for k in lo..=hi {
                env.push((index.clone(), k));
                let term = eval_ring(cx, body, env);
                env.pop();
                acc = cx.add(&acc, &term?);
            }
            Ok(acc)
        }
        Expr::Neg(a) => Ok(cx.neg(&eval_ring(cx, a, env)?)),
        Expr::Add(a, b) => Ok(cx.add(&eval_ring(cx, a, env)?, &eval_ring(cx, b, env)?)),
        Expr::Sub(a, b) => Ok(cx.sub(&eval_ring(cx, a, env)?, &eval_ring(cx, b, env)?)),
        Expr::Mul(a, b) => Ok(cx.mul(&eval_ring(cx, a, env)?, &eval_ring(cx, b, env)?)),
        Expr::Div(a, b) => cx.div(&eval_ring(cx, a, env)?, &eval_ring(cx, b, env)?),
        Expr::Pow(base, exponent) => {
            let exponent = eval_int(exponent, env)?;
            let base = eval_ring(cx, base, env)?;
            cx.pow(&base, exponent)
        }
    }
}

struct Axis {
    name: String,
    lo: i64,
    hi: i64,
}

/// Walk the whole grid; identical traversal order to the native engine.
fn run<C: Context>(
    cx: &C,
    ast: &IdentityAst,
    axes: &[Axis],
    ring: &str,
    started: Instant,
) -> Result<VerificationReport, DslError> {
    let mut points: u64 = 0;
    let mut verdict = Verdict::Holds;
    let mut counterexample = None;

    if !axes.iter().any(|a| a.hi < a.lo) {
        let mut cursor: Vec<i64> = axes.iter().map(|a| a.lo).collect();
        'grid: loop {
            let mut env: Env = axes
                .iter()
                .zip(&cursor)
                .map(|(a, v)| (a.name.clone(), *v))
                .collect();
            let point = env
                .iter()
                .map(|(n, v)| format!("{n}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            let at_point = |message: String| DslError::Eval {
                message: format!("{message} at {point}"),
            };
            let lhs = eval_ring(cx, &ast.lhs, &mut env).map_err(&at_point)?;
            let rhs = eval_ring(cx, &ast.rhs, &mut env).map_err(&at_point)?;
            let difference = cx.sub(&lhs, &rhs);
            points += 1;
            if !cx.is_zero(&difference) {
                verdict = Verdict::Fails;
                counterexample = Some(Counterexample {
                    params: axes
                        .iter()
                        .zip(&cursor)
                        .map(|(a, v)| ParamValue {
                            name: a.name.clone(),
                            value: *v,
                        })
                        .collect(),
                    difference: cx.wrap(difference).to_string(),
                });
                break;
            }
            // Odometer step, last axis fastest.
            for i in (0..cursor.len()).rev() {
                cursor[i] += 1;
                if cursor[i] <= axes[i].hi {
                    continue 'grid;
                }
                cursor[i] = axes[i].lo;
            }
            break;
        }
    }

    Ok(VerificationReport {
        id: "dsl".to_string(),
        source: "dsl".to_string(),
        reading: Reading::Canonical,
        ring: ring.to_string(),
        params_tested: axes
            .iter()
            .map(|a| AxisSummary {
                name: a.name.clone(),
                min: a.lo,
                max: a.hi,
            })
            .collect(),
        points,
        verdict,
        counterexample,
        millis: started.elapsed().as_millis() as u64,
    })
}

/// Verifies an identity over its quantifier grid in the inferred ring.
///
/// The returned report carries id `dsl`; callers that track several
/// identities (the corpus reader, the command-line `check`) rename it.
pub fn eval_identity(ast: &IdentityAst) -> Result<VerificationReport, DslError> {
    let started = Instant::now();
    let choice = infer_ring(ast)?;

    let empty: Env = Vec::new();
    let mut axes = Vec::with_capacity(ast.bindings.len());
    for binding in &ast.bindings {
        let range_err = |message: String| DslError::Eval {
            message: format!("range for `{}`: {message}", binding.var),
        };
        axes.push(Axis {
            name: binding.var.clone(),
            lo: eval_int(&binding.lo, &empty).map_err(&range_err)?,
            hi: eval_int(&binding.hi, &empty).map_err(range_err)?,
        });
    }

    match choice {
        RingChoice::Scalar => run(&ScalarContext::new(), ast, &axes, choice.label(), started),
        _ => run(&FunctionContext::new(choice), ast, &axes, choice.label(), started),
    }
}
