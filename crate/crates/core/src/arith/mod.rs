//! The scalar and ring tower: arbitrary-precision rationals, Gaussian
//! rationals, dense univariate polynomials, reduced rational functions, and
//! quadratic extensions `u + v*sqrt(delta)` with the discriminant fixed per
//! context.
//!
//! Everything is exact; there is no floating point anywhere in this crate.
//! All values are immutable after construction and all operations are pure.

mod gaussian;
mod poly;
mod quad;
mod ratfunc;

pub use gaussian::GaussianRational;
pub use poly::DensePolynomial;
pub use quad::QuadExt;
pub use ratfunc::RationalFunction;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type BigRational = num_rational::BigRational;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("element of zero norm has no inverse")]
    ZeroNorm,
    #[error("incompatible discriminants: sqrt({0}) vs sqrt({1})")]
    DiscriminantMismatch(String, String),
}

/// A commutative ring with identity, by-reference operations, and enough
/// display support to print elements inside sums and products.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Nonnegative power by repeated squaring.
    fn pow_u(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut k = k;
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// True when `Display` renders this element with a single leading minus
    /// that a surrounding sum may absorb ("- 3*x" instead of "+ -3*x").
    fn display_leads_negative(&self) -> bool {
        false
    }

    /// True when `Display` renders several terms, so a surrounding product
    /// must parenthesize ("(1 + x)*z^2").
    fn display_is_composite(&self) -> bool {
        false
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power; negative exponents invert first.
    fn pow_i(&self, k: i64) -> Result<Self, ArithError> {
        if k >= 0 {
            Ok(self.pow_u(k as u64))
        } else {
            Ok(self.inv()?.pow_u(k.unsigned_abs()))
        }
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn display_leads_negative(&self) -> bool {
        self.is_negative()
    }
}

impl Field for BigRational {
    fn inv(&self) -> Result<Self, ArithError> {
        if <BigRational as Zero>::is_zero(self) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.recip())
    }
}

/// Exact rational from a `p/q` string with optional sign (`q` defaults to 1).
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}
