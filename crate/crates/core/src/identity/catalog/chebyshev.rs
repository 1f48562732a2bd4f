//! Chebyshev specialisations: the convolution corollary in Q[x], the
//! binomial corollary in Q(x)[sqrt(x^2-1)], and the third/fourth-kind
//! remark over Q[t] after the substitution x = 2t^2 - 1.
//!
//! Three binomial displays deviate from what the substitution x -> x/3
//! produces: the second starts its left sum at k = 1 and loses the k = 0
//! term, the eighth squares its sqrt(x^2-1) prefactor, and the ninth writes
//! T_k where the pairing needs T_{2k+1}. The convolution corollary's third
//! display likewise starts its sum at k = 1 instead of k = 0. Each keeps a
//! `-literal` record next to the corrected one.

use super::super::{Assignment, EngineError, IdentityRecord, Reading, RingValue};
use super::{binom, om, poly, pr, rat, FracBase, QPoly, QuadFrac, CHEB_BASIS};
use crate::seq::{balancing, chebyshev, chebyshev_i, lucas_balancing, Family};

fn u(n: i64) -> QPoly {
    chebyshev_i(Family::U, n).expect("index at least -1")
}

fn t(n: i64) -> QPoly {
    chebyshev(Family::T, u64::try_from(n).expect("nonnegative index"))
}

/// `2(2x^2 - x - 1)`, the image of the convolution coefficient under
/// x -> x/3.
fn m() -> QPoly {
    poly(&[-2, -2, 4])
}

fn x_times(p: &QPoly) -> QPoly {
    p.mul(&poly(&[0, 1]))
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

/// `omega + sgn/omega` (`plus`) or `omega - sgn/omega`; the inverse of
/// `omega = x + sqrt(x^2-1)` is its conjugate because the norm is 1.
fn om_pm(sgn: i64, plus: bool) -> QuadFrac {
    let o = om();
    let inverse = if sgn > 0 { o.conj() } else { o.conj().neg() };
    if plus {
        o.add(&inverse)
    } else {
        o.sub(&inverse)
    }
}

/// `sqrt(x^2-1)`; the inverse divides the root by the atom `x^2-1`.
fn root() -> FracBase {
    FracBase::new(
        QuadFrac::sqrt_delta(&CHEB_BASIS),
        QuadFrac::new(&CHEB_BASIS, QPoly::zero(), QPoly::one(), vec![0, 1, 0]),
    )
}

/// `2x*sqrt(x^2-1)`; the inverse is `sqrt/(2x*(x^2-1))`.
fn scaled_root() -> FracBase {
    FracBase::new(
        QuadFrac::new(&CHEB_BASIS, QPoly::zero(), poly(&[0, 2]), vec![0, 0, 0]),
        QuadFrac::new(
            &CHEB_BASIS,
            QPoly::zero(),
            QPoly::constant(rat(1, 2)),
            vec![1, 1, 0],
        ),
    )
}

/// `(2x^2-1)/(2x^2*sqrt(x^2-1))`, rationalised as
/// `(2x^2-1)*sqrt/(2x^2*(x^2-1))`; the inverse is `2x^2*sqrt/(2x^2-1)`.
fn e_over_root() -> FracBase {
    FracBase::new(
        QuadFrac::new(
            &CHEB_BASIS,
            QPoly::zero(),
            poly(&[-1, 0, 2]).scalar_mul(&rat(1, 2)),
            vec![2, 1, 0],
        ),
        QuadFrac::new(&CHEB_BASIS, QPoly::zero(), poly(&[0, 0, 2]), vec![0, 0, 1]),
    )
}

/// `x/((2x^2-1)*sqrt(x^2-1))`, rationalised as
/// `x*sqrt/((2x^2-1)*(x^2-1))`; the inverse is `(2x^2-1)*sqrt/x`.
fn x_over_root() -> FracBase {
    FracBase::new(
        QuadFrac::new(&CHEB_BASIS, QPoly::zero(), poly(&[0, 1]), vec![0, 1, 1]),
        QuadFrac::new(&CHEB_BASIS, QPoly::zero(), poly(&[-1, 0, 2]), vec![1, 0, 0]),
    )
}

/// `(2x^2-1)/(2x^2)`; negative powers give the reciprocal.
fn e_ratio() -> FracBase {
    FracBase::new(
        QuadFrac::new(
            &CHEB_BASIS,
            poly(&[-1, 0, 2]).scalar_mul(&rat(1, 2)),
            QPoly::zero(),
            vec![2, 0, 0],
        ),
        QuadFrac::new(&CHEB_BASIS, poly(&[0, 0, 2]), QPoly::zero(), vec![0, 0, 1]),
    )
}

fn two_x(value: &QuadFrac) -> QuadFrac {
    value.mul_poly(&poly(&[0, 2]))
}

fn sum_1(n: i64) -> QPoly {
    let mut conv = QPoly::zero();
    for k in 1..n {
        conv = conv.add(&u(k - 1).mul(&t(2 * n - 2 * k - 1)));
    }
    t(2 * n - 1)
        .sub(&m().mul(&conv))
        .sub(&x_times(&u(n - 1).sub(&u(n - 2))))
}

fn sum_2(n: i64) -> QPoly {
    let mut conv = QPoly::zero();
    for k in 1..n {
        conv = conv.add(&u(k - 1).mul(&t(2 * (n - k - 1))));
    }
    t(2 * n - 2)
        .sub(&m().mul(&conv))
        .sub(&u(n - 1).sub(&u(n - 2).mul(&poly(&[-1, 0, 2]))))
}

/// Third convolution display; `start` is 0 for the corrected sum range and
/// 1 for the printed one.
fn sum_3(n: i64, start: i64) -> QPoly {
    let mut conv = QPoly::zero();
    for k in start..n {
        conv = conv.add(&u(2 * k).mul(&t(n - k - 1)));
    }
    t(n)
        .add(&t(n - 1))
        .add(&m().mul(&conv))
        .sub(&u(2 * n).sub(&x_times(&u(2 * n - 2))))
}

fn sum_4(n: i64) -> QPoly {
    let mut conv = QPoly::zero();
    for k in 1..n {
        conv = conv.add(&u(2 * k - 1).mul(&t(n - k - 1)));
    }
    x_times(&t(n - 1))
        .scalar_mul(&rat(2, 1))
        .add(&m().mul(&conv))
        .sub(&u(2 * n - 1).sub(&x_times(&u(2 * n - 3))))
}

/// Root-weighted pairing of the two kinds.
fn binom_1(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = root();
    let mut diff = QuadFrac::zero(&CHEB_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        diff = diff.add(&base.pow(1 - k).mul_poly(&u(k - 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        diff = diff.sub(&base.pow(-k).mul_poly(&t(k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(diff))
}

/// Omega-weighted pairing of even U against odd T; `lhs_start` is 0 for the
/// corrected left range and 1 for the printed one.
fn binom_2(a: &Assignment, lhs_start: i64) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in lhs_start..=n {
        let left = om_pm(parity(n, k), true)
            .mul(&base.pow(1 - k))
            .mul_poly(&u(2 * k))
            .mul_poly(&binom_poly(n, k, 1));
        lhs = lhs.add(&left);
    }
    for k in 0..=n {
        let right = om_pm(parity(n, k), false)
            .mul(&base.pow(-k))
            .mul_poly(&t(2 * k + 1))
            .mul_poly(&binom_poly(n, k, 1));
        rhs = rhs.add(&right);
    }
    Ok(RingValue::QuadFrac(lhs.sub(&two_x(&rhs))))
}

/// Root-prefactored pairing of odd U against even T.
fn binom_3(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        lhs = lhs.add(&base.pow(-k).mul_poly(&u(2 * k - 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&base.pow(-k).mul_poly(&t(2 * k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(root().pow(1).mul(&lhs).sub(&rhs)))
}

/// First scaled pairing: omega-weighted U terms against odd T terms.
fn binom_4(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = e_over_root();
    let right_base = x_over_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 1..=n {
        let left = om_pm(parity(n, k), true)
            .mul(&left_base.pow(k - 1))
            .mul_poly(&u(k - 1))
            .mul_poly(&binom_poly(n, k, 1));
        lhs = lhs.add(&left);
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&right_base.pow(k).mul_poly(&t(2 * k + 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&e_ratio().pow(n - 1).mul(&rhs))))
}

/// Second scaled pairing: parity-weighted U terms against even T terms.
fn binom_5(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = e_over_root();
    let right_base = x_over_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        lhs = lhs.add(&left_base.pow(k - 1).mul_poly(&u(k - 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&right_base.pow(k).mul_poly(&t(2 * k)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&e_ratio().pow(n - 1).mul(&rhs))))
}

/// Third scaled pairing: even U terms against omega-weighted T terms with
/// the reciprocal prefactor.
fn binom_6(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = x_over_root();
    let right_base = e_over_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 0..=n {
        let sgn = parity(n, k);
        if sgn > 0 {
            lhs = lhs.add(&left_base.pow(k).mul_poly(&u(2 * k)).mul_poly(&binom_poly(n, k, 2)));
        }
        let right = om_pm(sgn, false)
            .mul(&right_base.pow(k))
            .mul_poly(&t(k))
            .mul_poly(&binom_poly(n, k, 1));
        rhs = rhs.add(&right);
    }
    Ok(RingValue::QuadFrac(
        root().pow(1).mul(&lhs).sub(&e_ratio().pow(-n).mul(&rhs)),
    ))
}

/// Root-prefactored pairing of even U against even T with omega weights.
fn binom_7(a: &Assignment) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 0..=n {
        let sgn = parity(n, k);
        if sgn > 0 {
            lhs = lhs.add(&base.pow(-k).mul_poly(&u(2 * k)).mul_poly(&binom_poly(n, k, 2)));
        }
        let right = om_pm(sgn, false)
            .mul(&base.pow(-k))
            .mul_poly(&t(2 * k))
            .mul_poly(&binom_poly(n, k, 1));
        rhs = rhs.add(&right);
    }
    Ok(RingValue::QuadFrac(root().pow(1).mul(&lhs).sub(&rhs)))
}

/// Fourth scaled pairing: odd U terms against T terms; the printed reading
/// squares the root prefactor.
fn binom_8(a: &Assignment, literal: bool) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let left_base = x_over_root();
    let right_base = e_over_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 1..=n {
        if parity(n, k) < 0 {
            continue;
        }
        lhs = lhs.add(&left_base.pow(k).mul_poly(&u(2 * k - 1)).mul_poly(&binom_poly(n, k, 2)));
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        rhs = rhs.add(&right_base.pow(k).mul_poly(&t(k)).mul_poly(&binom_poly(n, k, 2)));
    }
    let prefixed = if literal {
        lhs.mul_poly(&poly(&[-1, 0, 1]))
    } else {
        root().pow(1).mul(&lhs)
    };
    Ok(RingValue::QuadFrac(prefixed.sub(&e_ratio().pow(-n).mul(&rhs))))
}

/// Omega-weighted pairing of odd U terms; the printed reading pairs them
/// with T_k instead of T_{2k+1}.
fn binom_9(a: &Assignment, literal: bool) -> Result<RingValue, EngineError> {
    let n = a.get("n");
    let base = scaled_root();
    let mut lhs = QuadFrac::zero(&CHEB_BASIS);
    let mut rhs = QuadFrac::zero(&CHEB_BASIS);
    for k in 1..=n {
        let left = om_pm(parity(n, k), true)
            .mul(&base.pow(1 - k))
            .mul_poly(&u(2 * k - 1))
            .mul_poly(&binom_poly(n, k, 1));
        lhs = lhs.add(&left);
    }
    for k in 0..=n {
        if parity(n, k) > 0 {
            continue;
        }
        let index = if literal { k } else { 2 * k + 1 };
        rhs = rhs.add(&base.pow(-k).mul_poly(&t(index)).mul_poly(&binom_poly(n, k, 2)));
    }
    Ok(RingValue::QuadFrac(lhs.sub(&two_x(&rhs))))
}

fn sum_record(
    id: &'static str,
    reading: Reading,
    eval: impl Fn(i64) -> QPoly + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:cor/cheb-sums",
        reading,
        "Q[x]",
        vec![pr("n", 1, 16, 32)],
        move |a| Ok(RingValue::Poly(eval(a.get("n")))),
    )
}

fn binom_record(
    id: &'static str,
    reading: Reading,
    eval: impl Fn(&Assignment) -> Result<RingValue, EngineError> + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:cor/cheb-binomials",
        reading,
        "Q(x)[sqrt(x^2-1)]",
        vec![pr("n", 1, 8, 32)],
        eval,
    )
}

/// Both remark identities: after x = 2t^2 - 1 the third and fourth kinds
/// become the odd members of the two families at t/3.
fn vw_record(id: &'static str, kind: Family) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:rem/cheb-vw",
        Reading::Canonical,
        "Q[t]",
        vec![pr("n", 0, 16, 32)],
        move |a| {
            let n = a.get("n");
            let index = u64::try_from(2 * n + 1).expect("nonnegative index");
            let substituted =
                chebyshev(kind, u64::try_from(n).expect("nonnegative index")).compose(&poly(&[-1, 0, 2]));
            let diff = match kind {
                Family::V => x_times(&substituted)
                    .sub(&lucas_balancing(index).scale_argument(&rat(1, 3))),
                Family::W => substituted.sub(&balancing(index).scale_argument(&rat(1, 3))),
                _ => unreachable!("remark records cover kinds V and W"),
            };
            Ok(RingValue::Poly(diff))
        },
    )
}

pub(super) fn install(records: &mut Vec<IdentityRecord>) {
    records.push(sum_record("cor-cheb-sum-1", Reading::Canonical, sum_1));
    records.push(sum_record("cor-cheb-sum-2", Reading::Canonical, sum_2));
    records.push(sum_record("cor-cheb-sum-3", Reading::Canonical, |n| {
        sum_3(n, 0)
    }));
    records.push(sum_record(
        "cor-cheb-sum-3-literal",
        Reading::Literal,
        |n| sum_3(n, 1),
    ));
    records.push(sum_record("cor-cheb-sum-4", Reading::Canonical, sum_4));

    records.push(binom_record("cor-cheb-binom-1", Reading::Canonical, binom_1));
    records.push(binom_record("cor-cheb-binom-2", Reading::Canonical, |a| {
        binom_2(a, 0)
    }));
    records.push(binom_record(
        "cor-cheb-binom-2-literal",
        Reading::Literal,
        |a| binom_2(a, 1),
    ));
    records.push(binom_record("cor-cheb-binom-3", Reading::Canonical, binom_3));
    records.push(binom_record("cor-cheb-binom-4", Reading::Canonical, binom_4));
    records.push(binom_record("cor-cheb-binom-5", Reading::Canonical, binom_5));
    records.push(binom_record("cor-cheb-binom-6", Reading::Canonical, binom_6));
    records.push(binom_record("cor-cheb-binom-7", Reading::Canonical, binom_7));
    records.push(binom_record("cor-cheb-binom-8", Reading::Canonical, |a| {
        binom_8(a, false)
    }));
    records.push(binom_record(
        "cor-cheb-binom-8-literal",
        Reading::Literal,
        |a| binom_8(a, true),
    ));
    records.push(binom_record("cor-cheb-binom-9", Reading::Canonical, |a| {
        binom_9(a, false)
    }));
    records.push(binom_record(
        "cor-cheb-binom-9-literal",
        Reading::Literal,
        |a| binom_9(a, true),
    ));

    records.push(vw_record("rem-cheb-v", Family::V));
    records.push(vw_record("rem-cheb-w", Family::W));
}
