//! Rationals extended by the imaginary unit: `re + im*i` with `i^2 = -1`.

use super::{ArithError, BigRational, Field, Ring};
use num_traits::Signed;
use std::fmt;

/// An exact Gaussian rational `re + im*i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self {
            re,
            im: <BigRational as Ring>::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: <BigRational as Ring>::zero(),
            im: <BigRational as Ring>::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re^2 + im^2`; zero iff the element is zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigRational| -> fmt::Result {
            if v.is_one() {
                write!(f, "i")
            } else {
                write!(f, "{}*i", v)
            }
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-")?;
                return imag(f, &-&self.im);
            }
            return imag(f, &self.im);
        }
        write!(f, "{}", self.re)?;
        if self.im.is_negative() {
            write!(f, " - ")?;
            imag(f, &-&self.im)
        } else {
            write!(f, " + ")?;
            imag(f, &self.im)
        }
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self::from_rational(<BigRational as Ring>::zero())
    }
    fn one() -> Self {
        Self::from_rational(<BigRational as Ring>::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rational(<BigRational as Ring>::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        Self {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn display_leads_negative(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else if self.re.is_zero() {
            self.im.is_negative()
        } else {
            false
        }
    }
    fn display_is_composite(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Result<Self, ArithError> {
        // Over the rationals re^2 + im^2 = 0 only at zero, so the conjugate
        // over the norm always works.
        if Ring::is_zero(self) {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}
