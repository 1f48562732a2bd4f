//! Corollaries at the half argument: the convolution family lands in Q
//! after clearing denominators, the binomial family in Q[sqrt(5)] because
//! the weights carry alpha^2, beta^2, and powers of c/sqrt(5) bases.
//!
//! Two displays deviate from what the substitution produces: the fourth
//! convolution prints coefficient 2 on its sum where clearing denominators
//! needs 4, and the second, sixth, and seventh binomial displays start the
//! left sum at k = 1, losing a k = 0 term that is nonzero whenever the
//! parity weight or quadratic weight survives. Each keeps a `-literal`
//! record beside the corrected one.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::super::{Assignment, EngineError, IdentityRecord, Reading, RingValue};
use super::{
    alpha_pow, beta_pow, binom, fib_s5, gq, luc_s5, over_sqrt5, pr, rat, rat_pow, s5_pow, s5_rat,
    s5_zero, sqrt5, Sqrt5,
};
use crate::seq::{fibonacci_i, lucas_i};

fn f(n: i64) -> BigInt {
    fibonacci_i(n)
}

fn l(n: i64) -> BigInt {
    lucas_i(n)
}

/// `(-1)^(n-k)` as a sign.
fn parity(n: i64, k: i64) -> i64 {
    if (n - k).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `alpha^2 + sgn beta^2` (`plus`) or `alpha^2 - sgn beta^2`, the images of
/// the lambda weights at the half argument.
fn quad_weight(sgn: i64, plus: bool) -> Sqrt5 {
    let second = if sgn > 0 { beta_pow(2) } else { beta_pow(2).neg() };
    if plus {
        alpha_pow(2).add(&second)
    } else {
        alpha_pow(2).sub(&second)
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from(v)
}

fn unit() -> Sqrt5 {
    s5_rat(rat(1, 1))
}

fn sum_1(n: i64) -> BigRational {
    let mut conv = BigInt::from(0);
    for k in 1..n {
        conv += f(2 * k) * l(4 * n - 4 * k - 2);
    }
    int(BigInt::from(3) * f(2 * n - 1) - l(4 * n - 2) + BigInt::from(4) * conv)
}

fn sum_2(n: i64) -> BigRational {
    let mut conv = BigInt::from(0);
    for k in 1..n {
        conv += f(2 * k) * l(4 * n - 4 * k - 4);
    }
    int(
        BigInt::from(2) * f(2 * n - 1) - BigInt::from(5) * f(2 * n - 2) - l(4 * n - 4)
            + BigInt::from(4) * conv,
    )
}

fn sum_3(n: i64) -> BigRational {
    let mut conv = BigInt::from(0);
    for k in 0..n {
        conv += f(4 * k + 2) * l(2 * n - 2 * k - 2);
    }
    int(
        BigInt::from(2) * f(4 * n + 2)
            - BigInt::from(3) * f(4 * n - 2)
            - l(2 * n)
            - l(2 * n - 2)
            - BigInt::from(4) * conv,
    )
}

/// Fourth convolution display; `coefficient` is 4 for the corrected sum
/// and 2 for the printed one.
fn sum_4(n: i64, coefficient: i64) -> BigRational {
    let mut conv = BigInt::from(0);
    for k in 1..n {
        conv += f(4 * k) * l(2 * n - 2 * k - 2);
    }
    int(
        BigInt::from(2) * f(4 * n) - BigInt::from(3) * f(4 * n - 4) - BigInt::from(3) * l(2 * n - 2)
            - BigInt::from(coefficient) * conv,
    )
}

/// One side of a binomial display: sum `weight * base^k * seq(index)` over
/// the index range, with the binomial coefficient and an optional doubling
/// folded into `scale`. `term` maps `(k, sgn)` to the weight, sequence
/// index, and scale, or `None` when the weight vanishes.
fn side(
    n: i64,
    start: i64,
    base: &Sqrt5,
    seq: fn(i64) -> Sqrt5,
    term: impl Fn(i64, i64) -> Option<(Sqrt5, i64, i64)>,
) -> Sqrt5 {
    let mut acc = s5_zero();
    for k in start..=n {
        let Some((weight, index, scale)) = term(k, parity(n, k)) else {
            continue;
        };
        let factor = s5_rat(binom(n, k) * rat(scale, 1));
        acc = acc.add(&s5_pow(base, k).mul(&weight).mul(&seq(index)).mul(&factor));
    }
    acc
}

fn binom_1(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = over_sqrt5(rat(2, 1));
    let lhs = side(n, 1, &base, fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 2 * k, 2))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 2 * k, 2))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

/// Second display; `lhs_start` is 0 for the corrected left range and 1 for
/// the printed one.
fn binom_2(a: &Assignment, lhs_start: i64) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = over_sqrt5(rat(2, 3));
    let lhs = side(n, lhs_start, &base, fib_s5, |k, sgn| {
        Some((quad_weight(sgn, true), 4 * k + 2, 1))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        Some((quad_weight(sgn, false), 4 * k + 2, 1))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn binom_3(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = over_sqrt5(rat(2, 3));
    let lhs = side(n, 1, &base, fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 4 * k, 2))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 4 * k, 2))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn binom_4(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let lhs = side(n, 1, &over_sqrt5(rat(14, 9)), fib_s5, |k, sgn| {
        Some((quad_weight(sgn, true), 2 * k, 1))
    });
    let rhs = side(n, 0, &over_sqrt5(rat(6, 7)), luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 4 * k + 2, 2))
    });
    let scaled = rhs.scalar_mul(&gq(rat_pow(&rat(7, 9), u64::try_from(n).expect("n >= 1"))));
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&scaled)))
}

fn binom_5(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let lhs = side(n, 1, &over_sqrt5(rat(14, 9)), fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 2 * k, 2))
    });
    let rhs = side(n, 0, &over_sqrt5(rat(6, 7)), luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 4 * k, 2))
    });
    let scaled = rhs.scalar_mul(&gq(rat_pow(&rat(7, 9), u64::try_from(n).expect("n >= 1"))));
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&scaled)))
}

/// Sixth display; `lhs_start` as in `binom_2`.
fn binom_6(a: &Assignment, lhs_start: i64) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let lhs = side(n, lhs_start, &over_sqrt5(rat(6, 7)), fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 4 * k + 2, 2))
    });
    let rhs = side(n, 0, &over_sqrt5(rat(14, 9)), luc_s5, |k, sgn| {
        Some((quad_weight(sgn, false), 2 * k, 1))
    });
    let scaled = rhs.scalar_mul(&gq(rat_pow(&rat(9, 7), u64::try_from(n).expect("n >= 1"))));
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&scaled)))
}

/// Seventh display; `lhs_start` as in `binom_2`.
fn binom_7(a: &Assignment, lhs_start: i64) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = over_sqrt5(rat(2, 3));
    let lhs = side(n, lhs_start, &base, fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 4 * k + 2, 2))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        Some((quad_weight(sgn, false), 4 * k, 1))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn binom_8(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let lhs = side(n, 1, &over_sqrt5(rat(6, 7)), fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 4 * k, 2))
    });
    let rhs = side(n, 0, &over_sqrt5(rat(14, 9)), luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 2 * k, 2))
    });
    let scaled = rhs.scalar_mul(&gq(rat_pow(&rat(9, 7), u64::try_from(n).expect("n >= 1"))));
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&scaled)))
}

fn binom_9(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = over_sqrt5(rat(2, 3));
    let lhs = side(n, 1, &base, fib_s5, |k, sgn| {
        Some((quad_weight(sgn, true), 4 * k, 1))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 4 * k + 2, 2))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn sum_record(
    id: &'static str,
    reading: Reading,
    eval: impl Fn(i64) -> BigRational + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:cor/fib-sums",
        reading,
        "Q",
        vec![pr("n", 1, 16, 64)],
        move |a| Ok(RingValue::Rational(eval(a.get("n")))),
    )
}

fn binom_record(
    id: &'static str,
    reading: Reading,
    eval: impl Fn(&Assignment) -> Result<RingValue, EngineError> + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:cor/fib-binomials",
        reading,
        "Q[sqrt(5)]",
        vec![pr("n", 1, 16, 64)],
        eval,
    )
}

pub(super) fn install(records: &mut Vec<IdentityRecord>) {
    records.push(sum_record("cor-fib-sum-1", Reading::Canonical, sum_1));
    records.push(sum_record("cor-fib-sum-2", Reading::Canonical, sum_2));
    records.push(sum_record("cor-fib-sum-3", Reading::Canonical, sum_3));
    records.push(sum_record("cor-fib-sum-4", Reading::Canonical, |n| {
        sum_4(n, 4)
    }));
    records.push(sum_record("cor-fib-sum-4-literal", Reading::Literal, |n| {
        sum_4(n, 2)
    }));

    records.push(binom_record("cor-fib-binom-1", Reading::Canonical, binom_1));
    records.push(binom_record("cor-fib-binom-2", Reading::Canonical, |a| {
        binom_2(a, 0)
    }));
    records.push(binom_record(
        "cor-fib-binom-2-literal",
        Reading::Literal,
        |a| binom_2(a, 1),
    ));
    records.push(binom_record("cor-fib-binom-3", Reading::Canonical, binom_3));
    records.push(binom_record("cor-fib-binom-4", Reading::Canonical, binom_4));
    records.push(binom_record("cor-fib-binom-5", Reading::Canonical, binom_5));
    records.push(binom_record("cor-fib-binom-6", Reading::Canonical, |a| {
        binom_6(a, 0)
    }));
    records.push(binom_record(
        "cor-fib-binom-6-literal",
        Reading::Literal,
        |a| binom_6(a, 1),
    ));
    records.push(binom_record("cor-fib-binom-7", Reading::Canonical, |a| {
        binom_7(a, 0)
    }));
    records.push(binom_record(
        "cor-fib-binom-7-literal",
        Reading::Literal,
        |a| binom_7(a, 1),
    ));
    records.push(binom_record("cor-fib-binom-8", Reading::Canonical, binom_8));
    records.push(binom_record("cor-fib-binom-9", Reading::Canonical, binom_9));
}
