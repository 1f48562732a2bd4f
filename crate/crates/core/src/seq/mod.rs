//! The sequence families: balancing B and Lucas-balancing C polynomials,
//! Chebyshev T/U/V/W, Fibonacci F and Lucas L numbers. Each family is
//! available by memoized recurrence; B and C additionally by explicit
//! binomial sum and by closed form in the quadratic extension; F and L
//! additionally by fast doubling.

mod binet;
mod numbers;
mod polys;

pub use binet::{
    alpha, balancing_closed_form, beta, delta_balancing, delta_chebyshev, lambda,
    lucas_balancing_closed_form, omega, sqrt_five,
};
pub use numbers::{fibonacci, fibonacci_doubling, fibonacci_i, lucas, lucas_doubling, lucas_i};
pub use polys::{
    balancing, balancing_at, balancing_at_quad, balancing_explicit, balancing_i, binomial,
    chebyshev, chebyshev_i, lucas_balancing, lucas_balancing_at, lucas_balancing_at_quad,
    lucas_balancing_explicit, lucas_balancing_i,
};

use crate::arith::{BigRational, DensePolynomial, GaussianRational, Ring};

type QPoly = DensePolynomial<BigRational>;

/// Errors from sequence constructors with restricted domains.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeqError {
    #[error("{0} is only defined for n >= 1")]
    RequiresPositiveIndex(&'static str),
    #[error("{family} has no value at negative index {index}")]
    NegativeIndex { family: &'static str, index: i64 },
    #[error("degenerate recurrence: p^2 + 4q = 0")]
    DegenerateRecurrence,
}

/// The eight sequence families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Balancing polynomials.
    B,
    /// Lucas-balancing polynomials.
    C,
    /// Chebyshev, first kind.
    T,
    /// Chebyshev, second kind.
    U,
    /// Chebyshev, third kind.
    V,
    /// Chebyshev, fourth kind.
    W,
    /// Fibonacci numbers.
    F,
    /// Lucas numbers.
    L,
}

impl Family {
    pub fn is_polynomial(self) -> bool {
        !matches!(self, Family::F | Family::L)
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "T" => Some(Family::T),
            "U" => Some(Family::U),
            "V" => Some(Family::V),
            "W" => Some(Family::W),
            "F" => Some(Family::F),
            "L" => Some(Family::L),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::B => "B",
            Family::C => "C",
            Family::T => "T",
            Family::U => "U",
            Family::V => "V",
            Family::W => "W",
            Family::F => "F",
            Family::L => "L",
        }
    }
}

/// `eps(k)`: 1 for even k, the imaginary unit for odd k.
pub fn eps(k: i64) -> GaussianRational {
    if k.rem_euclid(2) == 0 {
        GaussianRational::one()
    } else {
        GaussianRational::i()
    }
}

/// A second-order linear recurrence `u_n = p*u_{n-1} + q*u_{n-2}` with
/// polynomial coefficients and seeds, the input to the generating-function
/// closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub p: QPoly,
    pub q: QPoly,
    pub u0: QPoly,
    pub u1: QPoly,
}

impl RecurrenceSpec {
    pub fn new(p: QPoly, q: QPoly, u0: QPoly, u1: QPoly) -> Self {
        Self { p, q, u0, u1 }
    }

    /// `p^2 + 4q`, whose vanishing degenerates the closed forms.
    pub fn discriminant(&self) -> QPoly {
        self.p.mul(&self.p).add(&self.q.scalar_mul(&BigRational::from_i64(4)))
    }

    pub fn validate(&self) -> Result<(), SeqError> {
        if self.discriminant().is_zero() {
            Err(SeqError::DegenerateRecurrence)
        } else {
            Ok(())
        }
    }

    /// `u_2 = p*u_1 + q*u_0`.
    pub fn u2(&self) -> QPoly {
        self.p.mul(&self.u1).add(&self.q.mul(&self.u0))
    }

    /// The n-th term, by iterating the recurrence.
    pub fn term(&self, n: u64) -> QPoly {
        match n {
            0 => self.u0.clone(),
            1 => self.u1.clone(),
            _ => {
                let mut prev = self.u0.clone();
                let mut cur = self.u1.clone();
                for _ in 2..=n {
                    let next = self.p.mul(&cur).add(&self.q.mul(&prev));
                    prev = cur;
                    cur = next;
                }
                cur
            }
        }
    }
}
