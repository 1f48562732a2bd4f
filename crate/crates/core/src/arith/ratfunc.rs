//! Reduced rational functions in `x` over the rationals: the fraction field
//! that hosts negative powers of `sqrt(9x^2-1)` and friends.

use super::{ArithError, BigRational, DensePolynomial, Field, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use std::fmt;

type QPoly = DensePolynomial<BigRational>;

/// A rational function `num/den` in canonical form: `den` monic, `gcd(num,
/// den) = 1`, and the zero element stored as `0/1`. Canonical form makes
/// equality a structural comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    /// Builds the reduced form; errors on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: QPoly::one(),
            });
        }
        if den.degree() == Some(0) {
            let inv = den.leading().unwrap().inv()?;
            return Ok(Self {
                num: num.scalar_mul(&inv),
                den: QPoly::one(),
            });
        }
        let (num, den) = if num.degree() == Some(0) || coprime(&num, &den) {
            (num, den)
        } else {
            let g = num.gcd_monic(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                let (qn, rn) = num.div_rem(&g).expect("nonzero gcd");
                let (qd, rd) = den.div_rem(&g).expect("nonzero gcd");
                debug_assert!(rn.is_zero() && rd.is_zero());
                (qn, qd)
            }
        };
        // Fold the denominator's leading coefficient into the numerator.
        let lead_inv = den.leading().unwrap().inv()?;
        Ok(Self {
            num: num.scalar_mul(&lead_inv),
            den: den.scalar_mul(&lead_inv),
        })
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    /// The polynomial inside, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Exact evaluation at a rational point; errors where the denominator
    /// vanishes.
    pub fn eval(&self, x0: &BigRational) -> Result<BigRational, ArithError> {
        let d = self.den.eval(x0);
        if Ring::is_zero(&d) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.num.eval(x0) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QPoly| -> String {
            if p.display_is_composite() || p.display_leads_negative() {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(QPoly::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(QPoly::from_i64_coeffs(&[n]))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero denominator");
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::new(num, den).expect("nonzero denominator")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
    fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn display_leads_negative(&self) -> bool {
        self.den.is_one() && self.num.display_leads_negative()
    }
    fn display_is_composite(&self) -> bool {
        self.den.is_one() && self.num.display_is_composite()
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

// ---------------------------------------------------------------------------
// Coprimality probe.
//
// Reducing after every operation dominates the engine's time, and almost all
// operands are already coprime. Over the integers, deg(gcd mod p) bounds
// deg(gcd over Q) from above whenever p divides neither leading coefficient,
// so a degree-zero gcd modulo one good prime proves coprimality. A failed or
// inconclusive probe falls back to the exact Euclidean gcd.
// ---------------------------------------------------------------------------

const PROBE_PRIMES: [u64; 2] = [1_000_000_007, 998_244_353];

fn coprime(a: &QPoly, b: &QPoly) -> bool {
    for p in PROBE_PRIMES {
        match gcd_degree_mod_p(a, b, p) {
            Some(0) => return true,
            Some(_) => return false, // a genuine-looking common factor; go exact
            None => continue,        // unlucky prime
        }
    }
    false
}

/// Degree of gcd(a, b) mod p, or `None` when p kills a leading coefficient
/// (making the probe unsound for that prime).
fn gcd_degree_mod_p(a: &QPoly, b: &QPoly, p: u64) -> Option<usize> {
    let am = reduce_mod_p(a, p)?;
    let bm = reduce_mod_p(b, p)?;
    if am.len() != a.coeffs().len() || bm.len() != b.coeffs().len() {
        return None;
    }
    let mut x = am;
    let mut y = bm;
    while !y.is_empty() {
        let r = mod_poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    Some(x.len().saturating_sub(1))
}

/// Clears rational denominators and reduces coefficients mod p; `None` when
/// p divides one of the cleared denominators.
fn reduce_mod_p(poly: &QPoly, p: u64) -> Option<Vec<u64>> {
    let pb = BigInt::from(p);
    let mut out = Vec::with_capacity(poly.coeffs().len());
    for c in poly.coeffs() {
        let numer = c.numer().mod_floor(&pb).to_u64_digits().1;
        let denom = c.denom().mod_floor(&pb).to_u64_digits().1;
        let numer = numer.first().copied().unwrap_or(0);
        let denom = denom.first().copied().unwrap_or(0);
        if denom == 0 {
            return None;
        }
        out.push(mod_mul(numer, mod_inv(denom, p), p));
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// Remainder of a by b modulo p; coefficient vectors ascending, b nonempty.
fn mod_poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while rem.len() > db {
        let factor = mod_mul(*rem.last().unwrap(), lead_inv, p);
        let shift = rem.len() - 1 - db;
        if factor != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let idx = shift + j;
                let sub = mod_mul(factor, bc, p);
                rem[idx] = (rem[idx] + p - sub) % p;
            }
        }
        rem.pop();
        while rem.last() == Some(&0) {
            rem.pop();
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn reduces_common_factors() {
        // 6x^2 / 2x reduces to 3x.
        assert_eq!(rf(&[0, 0, 6], &[0, 2]), rf(&[0, 3], &[1]));
        // (36x^2 - 1) / (6x + 1) = 6x - 1, found by factoring the difference
        // of squares by hand.
        assert_eq!(rf(&[-1, 0, 36], &[1, 6]), rf(&[-1, 6], &[1]));
        // Zero numerator normalizes to 0/1.
        assert_eq!(rf(&[0], &[0, 1]), RationalFunction::zero());
    }

    #[test]
    fn reduction_is_scale_invariant() {
        // reduce(p*r, q*r) = reduce(p, q) for nonzero r.
        let pp = p(&[1, 2]);
        let qq = p(&[3, 0, 1]);
        let rr = p(&[-5, 7, 2]);
        assert_eq!(
            RationalFunction::new(pp.mul(&rr), qq.mul(&rr)).unwrap(),
            RationalFunction::new(pp, qq).unwrap()
        );
    }

    #[test]
    fn monic_denominator() {
        let f = rf(&[1], &[0, 2]);
        assert!(f.denominator().leading().unwrap().is_one());
        assert_eq!(f, rf(&[1, 0], &[0, 2]));
        assert_eq!(f.to_string(), "1/2/x");
    }

    #[test]
    fn field_operations() {
        let f = rf(&[0, 1], &[1, 1]); // x / (x+1)
        let g = rf(&[1], &[0, 1]); // 1 / x
        let sum = f.add(&g);
        // x/(x+1) + 1/x = (x^2 + x + 1) / (x^2 + x)
        assert_eq!(sum, rf(&[1, 1, 1], &[0, 1, 1]));
        let prod = f.mul(&g); // 1/(x+1)
        assert_eq!(prod, rf(&[1], &[1, 1]));
        assert_eq!(f.inv().unwrap(), rf(&[1, 1], &[0, 1]));
        assert!(RationalFunction::zero().inv().is_err());
        assert_eq!(f.div(&f).unwrap(), RationalFunction::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), p(&[0])),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn evaluation() {
        let f = rf(&[-1, 0, 9], &[0, 1]); // (9x^2 - 1)/x
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.eval(&half).unwrap(), BigRational::new(5.into(), 2.into()));
        assert!(f.eval(&BigRational::zero()).is_err());
    }

    #[test]
    fn probe_agrees_with_exact_gcd() {
        // Cross-check the mod-p probe on pairs with and without common
        // factors, against the exact Euclidean result.
        let cases = [
            (p(&[1, 2, 1]), p(&[1, 1]), false),
            (p(&[1, 2, 1]), p(&[2, 1]), true),
            (p(&[-1, 0, 36]), p(&[1, 6]), false),
            (p(&[-1, 0, 36]), p(&[1, 1]), true),
            (p(&[0, 1]), p(&[0, 0, 1]), false),
        ];
        for (a, b, expect_coprime) in cases {
            let exact = a.gcd_monic(&b).degree() == Some(0);
            assert_eq!(exact, expect_coprime);
            assert_eq!(coprime(&a, &b), expect_coprime);
        }
    }
}
