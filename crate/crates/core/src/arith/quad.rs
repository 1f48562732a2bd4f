//! Quadratic extensions `u + v*sqrt(delta)` over a base field, with the
//! discriminant carried by each element and fixed per working context.
//!
//! `sqrt(delta)` is formal: nothing here chooses a branch. Equality to zero
//! means both components vanish, so every identity check done in this type
//! is branch-independent by construction.

use super::{ArithError, Field};
use std::fmt;

/// An element `u + v*sqrt(delta)` of a quadratic extension of `F`.
///
/// The arithmetic methods require both operands to carry the same
/// discriminant; mixing contexts is a programming error and panics. The
/// `checked_*` variants report it as an [`ArithError`] instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt<F: Field> {
    pub u: F,
    pub v: F,
    pub delta: F,
}

impl<F: Field> QuadExt<F> {
    pub fn new(u: F, v: F, delta: F) -> Self {
        Self { u, v, delta }
    }

    /// Embeds a base-field element.
    pub fn from_base(u: F, delta: F) -> Self {
        Self {
            u,
            v: F::zero(),
            delta,
        }
    }

    /// The formal square root of the discriminant.
    pub fn sqrt_delta(delta: F) -> Self {
        Self {
            u: F::zero(),
            v: F::one(),
            delta,
        }
    }

    pub fn zero(delta: F) -> Self {
        Self::from_base(F::zero(), delta)
    }

    pub fn one(delta: F) -> Self {
        Self::from_base(F::one(), delta)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_base(&self) -> bool {
        self.v.is_zero()
    }

    fn same_context(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.delta == rhs.delta {
            Ok(())
        } else {
            Err(ArithError::DiscriminantMismatch(
                self.delta.to_string(),
                rhs.delta.to_string(),
            ))
        }
    }

    fn assert_context(&self, rhs: &Self) {
        if let Err(e) = self.same_context(rhs) {
            panic!("{e}");
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_context(rhs);
        Self {
            u: self.u.add(&rhs.u),
            v: self.v.add(&rhs.v),
            delta: self.delta.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_context(rhs);
        Self {
            u: self.u.sub(&rhs.u),
            v: self.v.sub(&rhs.v),
            delta: self.delta.clone(),
        }
    }

    /// `(u1 + v1*sqrt(d))(u2 + v2*sqrt(d)) = (u1*u2 + v1*v2*d) + (u1*v2 + u2*v1)*sqrt(d)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_context(rhs);
        Self {
            u: self.u.mul(&rhs.u).add(&self.v.mul(&rhs.v).mul(&self.delta)),
            v: self.u.mul(&rhs.v).add(&self.v.mul(&rhs.u)),
            delta: self.delta.clone(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.same_context(rhs)?;
        Ok(self.add(rhs))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.same_context(rhs)?;
        Ok(self.mul(rhs))
    }

    pub fn neg(&self) -> Self {
        Self {
            u: self.u.neg(),
            v: self.v.neg(),
            delta: self.delta.clone(),
        }
    }

    /// The automorphism `sqrt(delta) -> -sqrt(delta)`.
    pub fn conj(&self) -> Self {
        Self {
            u: self.u.clone(),
            v: self.v.neg(),
            delta: self.delta.clone(),
        }
    }

    /// `u^2 - v^2*delta`, an element of the base field.
    pub fn norm(&self) -> F {
        self.u.mul(&self.u).sub(&self.v.mul(&self.v).mul(&self.delta))
    }

    /// Multiplicative inverse `conj / norm`; errors on zero norm.
    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::ZeroNorm);
        }
        let n_inv = n.inv()?;
        Ok(Self {
            u: self.u.mul(&n_inv),
            v: self.v.neg().mul(&n_inv),
            delta: self.delta.clone(),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.same_context(rhs)?;
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn scalar_mul(&self, c: &F) -> Self {
        Self {
            u: self.u.mul(c),
            v: self.v.mul(c),
            delta: self.delta.clone(),
        }
    }

    pub fn pow_u(&self, k: u64) -> Self {
        let mut acc = Self::one(self.delta.clone());
        let mut base = self.clone();
        let mut k = k;
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

    /// Integer power; negative exponents go through the inverse.
    pub fn pow_i(&self, k: i64) -> Result<Self, ArithError> {
        if k >= 0 {
            Ok(self.pow_u(k as u64))
        } else {
            Ok(self.inv()?.pow_u(k.unsigned_abs()))
        }
    }
}

impl<F: Field> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        if self.u.is_zero() {
            return write!(f, "({})*sqrt({})", self.v, self.delta);
        }
        write!(f, "({}) + ({})*sqrt({})", self.u, self.v, self.delta)
    }
}
