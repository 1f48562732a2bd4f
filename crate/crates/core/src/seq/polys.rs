//! Polynomial families by memoized recurrence and by explicit binomial sum,
//! plus evaluation of the B/C recurrences directly at a point of any field.

use super::{Family, QPoly, SeqError};
use crate::arith::{BigRational, Field, QuadExt, Ring};
use num_bigint::BigInt;
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// Append-only memo table for `u_n = mult*u_{n-1} - u_{n-2}`; every
/// polynomial family here has q = -1.
struct RecurrenceTable {
    mult: QPoly,
    table: Mutex<Vec<QPoly>>,
}

impl RecurrenceTable {
    fn new(mult: QPoly, u0: QPoly, u1: QPoly) -> Self {
        Self {
            mult,
            table: Mutex::new(vec![u0, u1]),
        }
    }

    fn get(&self, n: u64) -> QPoly {
        let n = n as usize;
        let mut table = self.table.lock().unwrap();
        while table.len() <= n {
            let k = table.len();
            let next = self.mult.mul(&table[k - 1]).sub(&table[k - 2]);
            table.push(next);
        }
        table[n].clone()
    }
}

fn six_x() -> QPoly {
    QPoly::from_i64_coeffs(&[0, 6])
}

fn two_x() -> QPoly {
    QPoly::from_i64_coeffs(&[0, 2])
}

static BALANCING: Lazy<RecurrenceTable> =
    Lazy::new(|| RecurrenceTable::new(six_x(), QPoly::zero(), QPoly::one()));
static LUCAS_BALANCING: Lazy<RecurrenceTable> =
    Lazy::new(|| RecurrenceTable::new(six_x(), QPoly::one(), QPoly::from_i64_coeffs(&[0, 3])));
static CHEB_T: Lazy<RecurrenceTable> =
    Lazy::new(|| RecurrenceTable::new(two_x(), QPoly::one(), QPoly::x()));
static CHEB_U: Lazy<RecurrenceTable> =
    Lazy::new(|| RecurrenceTable::new(two_x(), QPoly::one(), two_x()));
static CHEB_V: Lazy<RecurrenceTable> =
    Lazy::new(|| RecurrenceTable::new(two_x(), QPoly::one(), QPoly::from_i64_coeffs(&[-1, 2])));
static CHEB_W: Lazy<RecurrenceTable> =
    Lazy::new(|| RecurrenceTable::new(two_x(), QPoly::one(), QPoly::from_i64_coeffs(&[1, 2])));

/// The n-th balancing polynomial: `u_n = 6x*u_{n-1} - u_{n-2}`, seeds 0, 1.
pub fn balancing(n: u64) -> QPoly {
    BALANCING.get(n)
}

/// The n-th Lucas-balancing polynomial: same recurrence, seeds 1, 3x.
pub fn lucas_balancing(n: u64) -> QPoly {
    LUCAS_BALANCING.get(n)
}

/// Chebyshev polynomial of the given kind: `u_n = 2x*u_{n-1} - u_{n-2}`
/// with seeds (1, x), (1, 2x), (1, 2x-1), (1, 2x+1) for T, U, V, W.
pub fn chebyshev(kind: Family, n: u64) -> QPoly {
    match kind {
        Family::T => CHEB_T.get(n),
        Family::U => CHEB_U.get(n),
        Family::V => CHEB_V.get(n),
        Family::W => CHEB_W.get(n),
        _ => panic!("chebyshev() takes kinds T, U, V, W"),
    }
}

/// Balancing polynomial at any integer index: `B_{-n} = -B_n`.
pub fn balancing_i(n: i64) -> QPoly {
    let value = balancing(n.unsigned_abs());
    if n < 0 {
        value.neg()
    } else {
        value
    }
}

/// Lucas-balancing polynomial at any integer index: `C_{-n} = C_n`.
pub fn lucas_balancing_i(n: i64) -> QPoly {
    lucas_balancing(n.unsigned_abs())
}

/// Chebyshev polynomial at any integer index.
///
/// The recurrence runs backwards to `T_{-n} = T_n` and `U_{-n} = -U_{n-2}`
/// (so `U_{-1} = 0`). The third and fourth kinds are only used at
/// nonnegative indices and reject negative ones.
pub fn chebyshev_i(kind: Family, n: i64) -> Result<QPoly, SeqError> {
    if n >= 0 {
        return Ok(chebyshev(kind, n as u64));
    }
    match kind {
        Family::T => Ok(chebyshev(Family::T, n.unsigned_abs())),
        Family::U => {
            let m = n.unsigned_abs();
            if m == 1 {
                Ok(QPoly::zero())
            } else {
                Ok(chebyshev(Family::U, m - 2).neg())
            }
        }
        Family::V | Family::W => Err(SeqError::NegativeIndex {
            family: if kind == Family::V { "V" } else { "W" },
            index: n,
        }),
        _ => panic!("chebyshev_i() takes kinds T, U, V, W"),
    }
}

/// Exact binomial coefficient via the falling factorial, so any integer
/// upper argument works; zero for k < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::from(0);
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    // A product of k consecutive integers is divisible by k!.
    num / den
}

/// Balancing polynomial as its explicit alternating binomial sum
///
///   sum_{k=0}^{floor((n-1)/2)} (-1)^k binom(n-1-k, k) (6x)^{n-1-2k},
///
/// defined for n >= 1. Must agree with [`balancing`] coefficient for
/// coefficient.
pub fn balancing_explicit(n: u64) -> Result<QPoly, SeqError> {
    if n == 0 {
        return Err(SeqError::RequiresPositiveIndex("the explicit balancing sum"));
    }
    let n = n as i64;
    let mut coeffs = vec![BigRational::zero(); n as usize];
    for k in 0..=((n - 1) / 2) {
        let deg = (n - 1 - 2 * k) as usize;
        let mut c = binomial(n - 1 - k, k) * BigInt::from(6).pow(deg as u32);
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[deg] = BigRational::from_integer(c);
    }
    Ok(QPoly::new(coeffs))
}

/// Lucas-balancing polynomial as its explicit weighted binomial sum
///
///   (n/2) sum_{k=0}^{floor(n/2)} ((-1)^k / (n-k)) binom(n-k, k) (6x)^{n-2k},
///
/// defined for n >= 1. The individual terms are rationals; the assembled
/// polynomial must have integer coefficients, which is asserted.
pub fn lucas_balancing_explicit(n: u64) -> Result<QPoly, SeqError> {
    if n == 0 {
        return Err(SeqError::RequiresPositiveIndex(
            "the explicit Lucas-balancing sum",
        ));
    }
    let n = n as i64;
    let half_n = BigRational::new(BigInt::from(n), BigInt::from(2));
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for k in 0..=(n / 2) {
        let deg = (n - 2 * k) as usize;
        let mut c = BigRational::new(
            binomial(n - k, k) * BigInt::from(6).pow(deg as u32),
            BigInt::from(n - k),
        );
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[deg] = &half_n * c;
    }
    for c in &coeffs {
        assert!(c.is_integer(), "Lucas-balancing sum left a non-integer coefficient");
    }
    Ok(QPoly::new(coeffs))
}

fn signed_recurrence_value<R: Ring>(p: &R, u0: R, u1: R, n: u64) -> R {
    // u_n = p*u_{n-1} - u_{n-2}; every direct evaluation here has q = -1.
    match n {
        0 => u0,
        1 => u1,
        _ => {
            let mut prev = u0;
            let mut cur = u1;
            for _ in 2..=n {
                let next = p.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `B_n(x0)` in any ring, by running the recurrence at the point; negative
/// indices via `B_{-n} = -B_n`.
pub fn balancing_at<R: Ring>(x0: &R, n: i64) -> R {
    let p = x0.mul(&R::from_i64(6));
    let v = signed_recurrence_value(&p, R::zero(), R::one(), n.unsigned_abs());
    if n < 0 {
        v.neg()
    } else {
        v
    }
}

/// `C_n(x0)` in any ring; negative indices via `C_{-n} = C_n`.
pub fn lucas_balancing_at<R: Ring>(x0: &R, n: i64) -> R {
    let p = x0.mul(&R::from_i64(6));
    let u1 = x0.mul(&R::from_i64(3));
    signed_recurrence_value(&p, R::one(), u1, n.unsigned_abs())
}

/// `B_n` at a point of a quadratic extension.
pub fn balancing_at_quad<F: Field>(x0: &QuadExt<F>, n: i64) -> QuadExt<F> {
    let delta = x0.delta.clone();
    let p = x0.scalar_mul(&F::from_i64(6));
    let mut prev = QuadExt::zero(delta.clone());
    let mut cur = QuadExt::one(delta);
    let m = n.unsigned_abs();
    if m == 0 {
        return prev;
    }
    for _ in 2..=m {
        let next = p.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    if n < 0 {
        cur.neg()
    } else {
        cur
    }
}

/// `C_n` at a point of a quadratic extension.
pub fn lucas_balancing_at_quad<F: Field>(x0: &QuadExt<F>, n: i64) -> QuadExt<F> {
    let delta = x0.delta.clone();
    let p = x0.scalar_mul(&F::from_i64(6));
    let mut prev = QuadExt::one(delta);
    let mut cur = x0.scalar_mul(&F::from_i64(3));
    let m = n.unsigned_abs();
    if m == 0 {
        return prev;
    }
    for _ in 2..=m {
        let next = p.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn balancing_low_terms() {
        assert_eq!(balancing(0), p(&[0]));
        assert_eq!(balancing(1), p(&[1]));
        assert_eq!(balancing(2), p(&[0, 6]));
        assert_eq!(balancing(3), p(&[-1, 0, 36]));
        assert_eq!(balancing(4), p(&[0, -12, 0, 216]));
        assert_eq!(balancing(5), p(&[1, 0, -108, 0, 1296]));
    }

    #[test]
    fn lucas_balancing_low_terms() {
        assert_eq!(lucas_balancing(0), p(&[1]));
        assert_eq!(lucas_balancing(1), p(&[0, 3]));
        assert_eq!(lucas_balancing(2), p(&[-1, 0, 18]));
        assert_eq!(lucas_balancing(3), p(&[0, -9, 0, 108]));
        assert_eq!(lucas_balancing(4), p(&[1, 0, -72, 0, 648]));
        assert_eq!(lucas_balancing(5), p(&[0, 15, 0, -540, 0, 3888]));
    }

    #[test]
    fn chebyshev_low_terms() {
        assert_eq!(chebyshev(Family::T, 3), p(&[0, -3, 0, 4]));
        assert_eq!(chebyshev(Family::U, 2), p(&[-1, 0, 4]));
        assert_eq!(chebyshev(Family::V, 1), p(&[-1, 2]));
        assert_eq!(chebyshev(Family::W, 1), p(&[1, 2]));
        assert_eq!(chebyshev(Family::W, 2), p(&[-1, 2, 4]));
    }

    #[test]
    fn degree_and_leading_coefficient() {
        // deg B_n = n-1 with leading coefficient 6^(n-1); deg C_n = n with
        // leading coefficient 6^n / 2, for n >= 1.
        for n in 1u64..=12 {
            let b = balancing(n);
            assert_eq!(b.degree(), Some(n as usize - 1));
            assert_eq!(
                b.leading().unwrap(),
                &BigRational::from_integer(BigInt::from(6).pow(n as u32 - 1))
            );
            let c = lucas_balancing(n);
            assert_eq!(c.degree(), Some(n as usize));
            assert_eq!(
                c.leading().unwrap(),
                &BigRational::new(BigInt::from(6).pow(n as u32), BigInt::from(2))
            );
        }
    }

    #[test]
    fn parity_reflections() {
        // B_n(-x) = (-1)^(n-1) B_n(x) and C_n(-x) = (-1)^n C_n(x).
        let minus_one = BigRational::from_i64(-1);
        for n in 0u64..=10 {
            let b = balancing(n);
            let b_neg = b.scale_argument(&minus_one);
            let expect = if n % 2 == 0 { b.neg() } else { b.clone() };
            assert_eq!(b_neg, expect, "B parity at n = {n}");
            let c = lucas_balancing(n);
            let c_neg = c.scale_argument(&minus_one);
            let expect = if n % 2 == 0 { c.clone() } else { c.neg() };
            assert_eq!(c_neg, expect, "C parity at n = {n}");
        }
    }

    #[test]
    fn negative_index_reflections() {
        for n in 0i64..=8 {
            assert_eq!(balancing_i(-n), balancing_i(n).neg());
            assert_eq!(lucas_balancing_i(-n), lucas_balancing_i(n));
            assert_eq!(
                chebyshev_i(Family::T, -n).unwrap(),
                chebyshev_i(Family::T, n).unwrap()
            );
        }
        // U_{-1} = 0 and U_{-n} = -U_{n-2}: checked against the recurrence
        // run backwards by hand (U_1 = 2x*U_0 - U_{-1} forces U_{-1} = 0).
        assert!(chebyshev_i(Family::U, -1).unwrap().is_zero());
        assert_eq!(chebyshev_i(Family::U, -2).unwrap(), p(&[-1]));
        assert_eq!(chebyshev_i(Family::U, -4).unwrap(), chebyshev(Family::U, 2).neg());
        assert!(chebyshev_i(Family::V, -1).is_err());
        assert!(chebyshev_i(Family::W, -3).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        // Falling-factorial extension: binom(-1, k) = (-1)^k.
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
    }

    #[test]
    fn explicit_balancing_matches_recurrence() {
        assert!(balancing_explicit(0).is_err());
        assert_eq!(balancing_explicit(1).unwrap(), p(&[1]));
        assert_eq!(balancing_explicit(2).unwrap(), p(&[0, 6]));
        assert_eq!(balancing_explicit(3).unwrap(), p(&[-1, 0, 36]));
        for n in 1u64..=40 {
            assert_eq!(balancing_explicit(n).unwrap(), balancing(n), "n = {n}");
        }
    }

    #[test]
    fn explicit_lucas_balancing_matches_recurrence() {
        assert!(lucas_balancing_explicit(0).is_err());
        // n = 1: (1/2)*(1/1)*6x = 3x; n = 2: (2/2)[(1/2)(6x)^2 - 1] = 18x^2 - 1,
        // both worked by hand from the sum.
        assert_eq!(lucas_balancing_explicit(1).unwrap(), p(&[0, 3]));
        assert_eq!(lucas_balancing_explicit(2).unwrap(), p(&[-1, 0, 18]));
        assert_eq!(lucas_balancing_explicit(4).unwrap(), p(&[1, 0, -72, 0, 648]));
        for n in 1u64..=40 {
            assert_eq!(lucas_balancing_explicit(n).unwrap(), lucas_balancing(n), "n = {n}");
        }
    }

    #[test]
    fn point_evaluation_matches_polynomials() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        for n in 0i64..=20 {
            assert_eq!(
                balancing_at(&half, n),
                balancing(n as u64).eval(&half),
                "B at n = {n}"
            );
            assert_eq!(
                lucas_balancing_at(&half, n),
                lucas_balancing(n as u64).eval(&half),
                "C at n = {n}"
            );
        }
        // B_4(1/2) = 216/8 - 6 = 21 and C_3(1/2) = 27/2 - 9/2 = 9.
        assert_eq!(balancing_at(&half, 4), BigRational::from_i64(21));
        assert_eq!(lucas_balancing_at(&half, 3), BigRational::from_i64(9));
        assert_eq!(balancing_at(&half, -4), BigRational::from_i64(-21));
    }
}
