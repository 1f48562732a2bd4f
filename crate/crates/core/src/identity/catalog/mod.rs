//! The identity catalog: every displayed closed form, lemma, theorem,
//! corollary, and remark as an executable record, grouped by chapter.
//!
//! Identifiers follow the display they encode (`thm-ogf-3`, `cor-cheb-binom-8`),
//! and a `-literal` suffix marks a verbatim transcription kept alongside its
//! corrected sibling. The helpers here are the constants shared by several
//! groups: the quadratic fraction contexts for the two discriminants, the
//! Fibonacci and Lucas wrappers in the scalar rings, and the golden-ratio
//! powers.

mod chebyshev;
mod closed_forms;
mod egf_theorems;
mod eps;
mod fibonacci;
mod lemmas;
mod ogf_theorems;

use super::{IdentityRecord, ParamRange, QuadBasis, QuadFrac, RingValue};
use crate::arith::{
    BigRational, DensePolynomial, GaussianRational, QuadExt, RationalFunction, Ring,
};
use crate::seq;
use num_bigint::BigInt;
use once_cell::sync::Lazy;

pub(crate) type QPoly = DensePolynomial<BigRational>;

/// All records in display order.
pub fn build() -> Vec<IdentityRecord> {
    let mut records = Vec::new();
    closed_forms::install(&mut records);
    lemmas::install(&mut records);
    ogf_theorems::install(&mut records);
    egf_theorems::install(&mut records);
    chebyshev::install(&mut records);
    fibonacci::install(&mut records);
    eps::install(&mut records);
    records
}

pub(crate) fn pr(name: &'static str, min: i64, quick: i64, standard: i64) -> ParamRange {
    ParamRange { name, min, quick, standard }
}

pub(crate) fn poly(coeffs: &[i64]) -> QPoly {
    QPoly::from_i64_coeffs(coeffs)
}

pub(crate) fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `r^e` for a rational base and nonnegative exponent, by repeated squaring.
pub(crate) fn rat_pow(r: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::from_i64(1);
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    acc
}

pub(crate) fn big(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

pub(crate) fn factorial(k: usize) -> BigRational {
    let mut acc = BigRational::from_i64(1);
    for j in 2..=k {
        acc = acc.mul(&BigRational::from_i64(j as i64));
    }
    acc
}

/// Wraps a difference that lives in Q[x] but was computed through the
/// fraction field; a genuine denominator only survives if a closed form is
/// wrong in a way that leaves one.
pub(crate) fn poly_value(diff: RationalFunction) -> RingValue {
    match diff.as_poly() {
        Some(p) => RingValue::Poly(p.clone()),
        None => RingValue::RatFunc(diff),
    }
}

pub(crate) fn binom(n: i64, k: i64) -> BigRational {
    big(seq::binomial(n, k))
}

/// `(-1)^e` as a rational sign.
pub(crate) fn sign(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        BigRational::from_i64(1)
    } else {
        BigRational::from_i64(-1)
    }
}

// Scalar wrappers over the Gaussian rationals.

pub(crate) fn gq(r: BigRational) -> GaussianRational {
    GaussianRational::from_rational(r)
}

pub(crate) fn fib_g(n: i64) -> GaussianRational {
    gq(big(seq::fibonacci_i(n)))
}

pub(crate) fn luc_g(n: i64) -> GaussianRational {
    gq(big(seq::lucas_i(n)))
}

/// `i^e` for any integer exponent.
pub(crate) fn i_pow(e: i64) -> GaussianRational {
    match e.rem_euclid(4) {
        0 => GaussianRational::one(),
        1 => GaussianRational::i(),
        2 => GaussianRational::one().neg(),
        _ => GaussianRational::i().neg(),
    }
}

/// `eps(k)^e`: 1 for even k, `i^e` for odd k.
pub(crate) fn eps_pow(k: i64, e: i64) -> GaussianRational {
    if k.rem_euclid(2) == 0 {
        GaussianRational::one()
    } else {
        i_pow(e)
    }
}

// The rationals adjoined sqrt(5), over a Gaussian base.

pub(crate) type Sqrt5 = QuadExt<GaussianRational>;

pub(crate) fn five() -> GaussianRational {
    gq(BigRational::from_i64(5))
}

pub(crate) fn s5_zero() -> Sqrt5 {
    QuadExt::zero(five())
}

pub(crate) fn s5_from(c: GaussianRational) -> Sqrt5 {
    QuadExt::from_base(c, five())
}

pub(crate) fn s5_rat(r: BigRational) -> Sqrt5 {
    s5_from(gq(r))
}

pub(crate) fn sqrt5() -> Sqrt5 {
    seq::sqrt_five()
}

pub(crate) fn fib_s5(n: i64) -> Sqrt5 {
    s5_from(fib_g(n))
}

pub(crate) fn luc_s5(n: i64) -> Sqrt5 {
    s5_from(luc_g(n))
}

/// `alpha^e` for any integer exponent (the norm of alpha is -1).
pub(crate) fn alpha_pow(e: i64) -> Sqrt5 {
    seq::alpha().pow_i(e).expect("alpha is invertible")
}

pub(crate) fn beta_pow(e: i64) -> Sqrt5 {
    seq::beta().pow_i(e).expect("beta is invertible")
}

/// `c / sqrt(5)` lifted to the extension: `c sqrt(5) / 5`.
pub(crate) fn over_sqrt5(c: BigRational) -> Sqrt5 {
    QuadExt::new(GaussianRational::zero(), gq(c.mul(&rat(1, 5))), five())
}

/// `base^e` with the conjugate covering negative exponents of a norm-(+-1)
/// base; used for the scalar binomial bases, all of which are invertible.
pub(crate) fn s5_pow(base: &Sqrt5, e: i64) -> Sqrt5 {
    base.pow_i(e).expect("scalar base is invertible")
}

// Quadratic fraction contexts. Atom order: [x, delta, shift] where delta is
// the discriminant and shift the exponential-center polynomial.

/// Balancing context: delta = 9x^2 - 1, atoms x, 9x^2 - 1, 18x^2 - 1.
pub(crate) static BAL_BASIS: Lazy<QuadBasis> = Lazy::new(|| {
    QuadBasis::new(
        QPoly::from_i64_coeffs(&[-1, 0, 9]),
        vec![
            QPoly::x(),
            QPoly::from_i64_coeffs(&[-1, 0, 9]),
            QPoly::from_i64_coeffs(&[-1, 0, 18]),
        ],
    )
});

/// Chebyshev context: delta = x^2 - 1, atoms x, x^2 - 1, 2x^2 - 1.
pub(crate) static CHEB_BASIS: Lazy<QuadBasis> = Lazy::new(|| {
    QuadBasis::new(
        QPoly::from_i64_coeffs(&[-1, 0, 1]),
        vec![
            QPoly::x(),
            QPoly::from_i64_coeffs(&[-1, 0, 1]),
            QPoly::from_i64_coeffs(&[-1, 0, 2]),
        ],
    )
});

/// A base together with its explicitly constructed inverse, so displayed
/// powers with either sign stay inside the atom-denominator representation.
pub(crate) struct FracBase {
    pos: QuadFrac,
    neg: QuadFrac,
}

impl FracBase {
    /// Pairs a base with its inverse; the inverse is constructed explicitly
    /// by the caller and checked here.
    pub(crate) fn new(pos: QuadFrac, neg: QuadFrac) -> Self {
        debug_assert!(pos.mul(&neg).sub(&QuadFrac::one(pos.basis())).is_zero());
        FracBase { pos, neg }
    }

    pub(crate) fn pow(&self, e: i64) -> QuadFrac {
        if e >= 0 {
            self.pos.pow_u(e as u64)
        } else {
            self.neg.pow_u(e.unsigned_abs())
        }
    }
}

/// `lambda = 3x + sqrt(9x^2-1)` in the balancing fraction context.
pub(crate) fn lam() -> QuadFrac {
    QuadFrac::new(&BAL_BASIS, poly(&[0, 3]), QPoly::one(), vec![0, 0, 0])
}

/// `omega = x + sqrt(x^2-1)` in the Chebyshev fraction context.
pub(crate) fn om() -> QuadFrac {
    QuadFrac::new(&CHEB_BASIS, QPoly::x(), QPoly::one(), vec![0, 0, 0])
}
