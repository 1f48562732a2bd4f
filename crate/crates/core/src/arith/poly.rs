//! Dense univariate polynomials over a scalar ring, coefficients stored in
//! ascending order of the power of `x`.

use super::{ArithError, Field, Ring};
use std::fmt;

/// Exact polynomial with ascending coefficient list.
///
/// Invariant: the highest-index coefficient is nonzero; the zero polynomial
/// is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePolynomial<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> DensePolynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&R) -> T) -> DensePolynomial<T> {
        DensePolynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&rhs.coeff(k)));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scalar_mul(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x0: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x0).add(c);
        }
        acc
    }

    /// Horner evaluation at a point of any ring the coefficients embed into.
    pub fn eval_in<T: Ring>(&self, x0: &T, embed: impl Fn(&R) -> T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x0).add(&embed(c));
        }
        acc
    }

    /// `p(c*x)`: scales the argument, i.e. multiplies coefficient `k` by `c^k`.
    pub fn scale_argument(&self, c: &R) -> Self {
        let mut power = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul(c);
            }
            out.push(a.mul(&power));
        }
        Self::new(out)
    }

    /// Composition `p(q(x))` by Horner in the polynomial ring.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn pow_u(&self, k: u64) -> Self {
        let mut acc = Self::one();
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
}

impl<R: Field> DensePolynomial<R> {
    /// Euclidean division: `self = q*den + r` with `deg r < deg den`.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self), ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = den.degree().unwrap();
        let lead_inv = den.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quo = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            quo[shift] = factor.clone();
            // rem -= factor * x^shift * den, dropping the leading term exactly.
            let mut next = rem.coeffs;
            for (j, b) in den.coeffs.iter().enumerate() {
                next[shift + j] = next[shift + j].sub(&factor.mul(b));
            }
            rem = Self::new(next);
        }
        Ok((Self::new(quo), rem))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scalar_mul(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd_monic(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }
}

impl<R: Ring> fmt::Display for DensePolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.display_leads_negative() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            let needs_parens = mag.display_is_composite();
            if k == 0 {
                if needs_parens {
                    write!(f, "({})", mag)?;
                } else {
                    write!(f, "{}", mag)?;
                }
            } else {
                if !coeff_is_one {
                    if needs_parens {
                        write!(f, "({})*", mag)?;
                    } else {
                        write!(f, "{}*", mag)?;
                    }
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> Ring for DensePolynomial<R> {
    fn zero() -> Self {
        DensePolynomial::zero()
    }
    fn one() -> Self {
        DensePolynomial::one()
    }
    fn from_i64(n: i64) -> Self {
        DensePolynomial::constant(R::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        DensePolynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        DensePolynomial::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        DensePolynomial::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        DensePolynomial::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        DensePolynomial::neg(self)
    }
    fn display_leads_negative(&self) -> bool {
        let mut nonzero = self.coeffs.iter().filter(|c| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some(c), None) => c.display_leads_negative(),
            _ => false,
        }
    }
    fn display_is_composite(&self) -> bool {
        let mut nonzero = self.coeffs.iter().filter(|c| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some(c), None) => c.display_is_composite(),
            (Some(_), Some(_)) => true,
            _ => false,
        }
    }
}
