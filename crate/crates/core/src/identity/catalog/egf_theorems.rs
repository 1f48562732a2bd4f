//! Binomial-weighted relations between the balancing and Lucas-balancing
//! families, proved through exponential generating functions, evaluated in
//! Q(x)[sqrt(9x^2-1)].
//!
//! Displayed weights run through negative powers of sqrt(9x^2-1), of
//! 6x*sqrt(9x^2-1), and of the two scaled bases (18x^2-1)/(18x^2*sqrt) and
//! 3x/((18x^2-1)*sqrt), so every base is installed as a `FracBase` whose
//! inverse is constructed explicitly and evaluation stays inside the
//! atom-denominator representation.
//!
//! The third direct relation starts its right-hand sum at k = 1, dropping
//! the nonvanishing k = 0 term `(1 - (-1)^n) C_0`; the `-literal` record
//! keeps that range and fails at n = 1 with difference 12x.

use super::super::{Assignment, EngineError, IdentityRecord, Reading, RingValue};
use super::{binom, lam, poly, pr, rat, FracBase, QPoly, QuadFrac, BAL_BASIS};
use crate::seq::{balancing, lucas_balancing};

fn b(n: i64) -> QPoly {
    balancing(u64::try_from(n).expect("nonnegative index"))
}

fn c(n: i64) -> QPoly {
    lucas_balancing(u64::try_from(n).expect("nonnegative index"))
}

/// `(-1)^(n-k)` as a sign.
fn parity(n: i64, k: i64) -> i64 {
    if (n - k).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn binom_poly(n: i64, k: i64, scale: i64) -> QPoly {
    QPoly::constant(binom(n, k) * rat(scale, 1))
}

/// `lambda + sgn/lambda` (`plus`) or `lambda - sgn/lambda`; the inverse of
/// `lambda = 3x + sqrt(9x^2-1)` is its conjugate because the norm is 1.
fn lam_pm(sgn: i64, plus: bool) -> QuadFrac {
    let l = lam();
    let inverse = if sgn > 0 { l.conj() } else { l.conj().neg() };
    if plus {
        l.add(&inverse)
    } else {
        l.sub(&inverse)
    }
}

/// `sqrt(9x^2-1)`; the inverse divides the root by the atom `9x^2-1`.
fn root() -> FracBase {
    FracBase::new(
        QuadFrac::sqrt_delta(&BAL_BASIS),
        QuadFrac::new(&BAL_BASIS, QPoly::zero(), QPoly::one(), vec![0, 1, 0]),
    )
}

/// `6x*sqrt(9x^2-1)`; the inverse is `sqrt/(6x*(9x^2-1))`.
fn scaled_root() -> FracBase {
    FracBase::new(
        QuadFrac::new(&BAL_BASIS, QPoly::zero(), poly(&[0, 6]), vec![0, 0, 0]),
        QuadFrac::new(
            &BAL_BASIS,
            QPoly::zero(),
            QPoly::constant(rat(1, 6)),
            vec![1, 1, 0],
        ),
    )
}

/// `(18x^2-1)/(18x^2*sqrt(9x^2-1))`, rationalised as
/// `(18x^2-1)*sqrt/(18x^2*(9x^2-1))`; the inverse is `18x^2*sqrt/(18x^2-1)`.
fn e_over_root() -> FracBase {
    FracBase::new(
        QuadFrac::new(
            &BAL_BASIS,
            QPoly::zero(),
            poly(&[-1, 0, 18]).scalar_mul(&rat(1, 18)),
            vec![2, 1, 0],
        ),
        QuadFrac::new(&BAL_BASIS, QPoly::zero(), poly(&[0, 0, 18]), vec![0, 0, 1]),
    )
}

/// `3x/((18x^2-1)*sqrt(9x^2-1))`, rationalised as
/// `3x*sqrt/((18x^2-1)*(9x^2-1))`; the inverse is `(18x^2-1)*sqrt/(3x)`.
fn x_over_root() -> FracBase {
    FracBase::new(
        QuadFrac::new(&BAL_BASIS, QPoly::zero(), poly(&[0, 3]), vec![0, 1, 1]),
        QuadFrac::new(
            &BAL_BASIS,
            QPoly::zero(),
            poly(&[-1, 0, 18]).scalar_mul(&rat(1, 3)),
            vec![1, 0, 0],
        ),
    )
}

/// `(18x^2-1)/(18x^2)`, the square-root-free prefactor of the scaled
/// relations; negative powers give the reciprocal `18x^2/(18x^2-1)`.
fn e_ratio() -> FracBase {
    FracBase::new(
        QuadFrac::new(
            &BAL_BASIS,
            poly(&[-1, 0, 18]).scalar_mul(&rat(1, 18)),
            QPoly::zero(),
            vec![2, 0, 0],
        ),
        QuadFrac::new(&BAL_BASIS, poly(&[0, 0, 18]), QPoly::zero(), vec![0, 0, 1]),
    )
}

fn six_x(value: &QuadFrac) -> QuadFrac {
    value.mul_poly(&poly(&[0, 6]))
}

/// Root-weighted pairing of the two families: even-offset B terms against
/// odd-offset C terms.
fn relation_1(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = root();
    let mut diff = QuadFrac::zero(&BAL_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        diff = diff.add(&base.pow(1 - k).mul_poly(&b(k)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        diff = diff.sub(&base.pow(-k).mul_poly(&c(k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(diff))
}

/// Odd-index relation with lambda-weights on both sides.
fn relation_2(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 0..=n {
        let sgn = parity(n, k);
        let left = lam_pm(sgn, true)
            .mul(&base.pow(1 - k))
            .mul_poly(&b(2 * k + 1))
            .mul_poly(&binom_poly(n, k, 1));
        lhs = lhs.add(&left);
        let right = lam_pm(sgn, false)
            .mul(&base.pow(-k))
            .mul_poly(&c(2 * k + 1))
            .mul_poly(&binom_poly(n, k, 1));
        rhs = rhs.add(&right);
    }
    Ok(RingValue::QuadFrac(lhs.sub(&six_x(&rhs))))
}

/// Even-index relation with parity weights; `rhs_start` is 0 for the
/// corrected right-hand range and 1 for the printed one.
fn relation_3(a: &Assignment, rhs_start: i64) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        lhs = lhs.add(&base.pow(1 - k).mul_poly(&b(2 * k)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in rhs_start..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&base.pow(-k).mul_poly(&c(2 * k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&six_x(&rhs))))
}

/// Mixed relation: parity-weighted odd B terms against lambda-weighted
/// even C terms.
fn relation_4(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 0..=n {
        let sgn = parity(n, k);
        if sgn > 0 {
            lhs = lhs.add(&base.pow(1 - k).mul_poly(&b(2 * k + 1)).mul_poly(&binom_poly(n, k, 2)));
        }
        let right = lam_pm(sgn, false)
            .mul(&base.pow(-k))
            .mul_poly(&c(2 * k))
            .mul_poly(&binom_poly(n, k, 1));
        rhs = rhs.add(&right);
    }
    Ok(RingValue::QuadFrac(lhs.sub(&six_x(&rhs))))
}

/// Mixed relation: lambda-weighted even B terms against parity-weighted
/// odd C terms.
fn relation_5(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 1..=n {
        let left = lam_pm(parity(n, k), true)
            .mul(&base.pow(1 - k))
            .mul_poly(&b(2 * k))
            .mul_poly(&binom_poly(n, k, 1));
        lhs = lhs.add(&left);
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&base.pow(-k).mul_poly(&c(2 * k + 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&six_x(&rhs))))
}

/// First scaled relation: lambda-weighted B terms against odd C terms.
fn scaled_1(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = e_over_root();
    let right_base = x_over_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 1..=n {
        let left = lam_pm(parity(n, k), true)
            .mul(&left_base.pow(k - 1))
            .mul_poly(&b(k))
            .mul_poly(&binom_poly(n, k, 1));
        lhs = lhs.add(&left);
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&right_base.pow(k).mul_poly(&c(2 * k + 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&e_ratio().pow(n - 1).mul(&rhs))))
}

/// Second scaled relation: parity-weighted B terms against even C terms.
fn scaled_2(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = e_over_root();
    let right_base = x_over_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        lhs = lhs.add(&left_base.pow(k - 1).mul_poly(&b(k)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&right_base.pow(k).mul_poly(&c(2 * k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&e_ratio().pow(n - 1).mul(&rhs))))
}

/// Third scaled relation: odd B terms against lambda-weighted C terms with
/// the reciprocal prefactor.
fn scaled_3(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = x_over_root();
    let right_base = e_over_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 0..=n {
        let sgn = parity(n, k);
        if sgn > 0 {
            lhs = lhs.add(&left_base.pow(k - 1).mul_poly(&b(2 * k + 1)).mul_poly(&binom_poly(n, k, 2)));
        }
        let right = lam_pm(sgn, false)
            .mul(&right_base.pow(k))
            .mul_poly(&c(k))
            .mul_poly(&binom_poly(n, k, 1));
        rhs = rhs.add(&right);
    }
    Ok(RingValue::QuadFrac(lhs.sub(&e_ratio().pow(1 - n).mul(&six_x(&rhs)))))
}

/// Fourth scaled relation: even B terms against parity-weighted C terms
/// with the reciprocal prefactor.
fn scaled_4(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = x_over_root();
    let right_base = e_over_root();
    let mut lhs = QuadFrac::zero(&BAL_BASIS);
    let mut rhs = QuadFrac::zero(&BAL_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        lhs = lhs.add(&left_base.pow(k - 1).mul_poly(&b(2 * k)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&right_base.pow(k).mul_poly(&c(k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&e_ratio().pow(1 - n).mul(&six_x(&rhs)))))
}

fn record(
    id: &'static str,
    source: &'static str,
    reading: Reading,
    eval: impl Fn(&Assignment) -> Result<RingValue, EngineError> + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        source,
        reading,
        "Q(x)[sqrt(9x^2-1)]",
        vec![pr("n", 1, 8, 32)],
        eval,
    )
}

pub(super) fn install(records: &mut Vec<IdentityRecord>) {
    let direct = "catalog:thm/egf-relations";
    let scaled = "catalog:thm/egf-scaled";
    records.push(record("thm-egf-1", direct, Reading::Canonical, relation_1));
    records.push(record("thm-egf-2", direct, Reading::Canonical, relation_2));
    records.push(record("thm-egf-3", direct, Reading::Canonical, |a| {
        relation_3(a, 0)
    }));
    records.push(record("thm-egf-3-literal", direct, Reading::Literal, |a| {
        relation_3(a, 1)
    }));
    records.push(record("thm-egf-4", direct, Reading::Canonical, relation_4));
    records.push(record("thm-egf-5", direct, Reading::Canonical, relation_5));
    records.push(record("thm-egf-adv-1", scaled, Reading::Canonical, scaled_1));
    records.push(record("thm-egf-adv-2", scaled, Reading::Canonical, scaled_2));
    records.push(record("thm-egf-adv-3", scaled, Reading::Canonical, scaled_3));
    records.push(record("thm-egf-adv-4", scaled, Reading::Canonical, scaled_4));
}
