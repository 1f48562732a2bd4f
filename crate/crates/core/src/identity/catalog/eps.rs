//! Corollaries at the scaled Lucas points eps_s L_s / 6: the convolution
//! family lands in Q(i) because odd s brings in eps_s = i, and the binomial
//! family in Q(i)[sqrt(5)] because the weights carry alpha^s, beta^s, and
//! sqrt(5)-scaled bases. Both take the grid (n, s) with s >= 1.
//!
//! Several displays deviate from what the substitution produces. Among the
//! convolutions, the second writes F_2s where the pairing needs F_s, the
//! fourth states its convolution coefficient with a stray parameter m in
//! place of s, the fifth does the same and prints the sum multiplier with
//! flipped interior signs, the sixth and eighth negate that flipped
//! multiplier where the pairing needs the plain one, and the eighth also
//! offsets the sum's eps power by two. Among the binomials, the second starts its left
//! sum at k = 1, the fourth and fifth start the right sum at k = 1, the
//! sixth doubles both its left prefactor and right base, and the seventh
//! pairs L_ks where the pairing needs L_2ks. Each keeps a `-literal`
//! record beside the corrected one.

use super::super::{Assignment, EngineError, IdentityRecord, ParamRange, Reading, RingValue};
use super::{
    alpha_pow, beta_pow, big, binom, eps_pow, fib_g, fib_s5, five, gq, luc_g, luc_s5, pr, rat,
    rat_pow, s5_rat, s5_zero, sign, sqrt5, Sqrt5,
};
use crate::arith::{Field, GaussianRational, QuadExt, Ring};
use crate::seq::lucas_i;

fn g_rat(v: i64) -> GaussianRational {
    gq(rat(v, 1))
}

fn sign_g(e: i64) -> GaussianRational {
    gq(sign(e))
}

/// `(-1)^(n-k)` as a sign.
fn parity(n: i64, k: i64) -> i64 {
    if (n - k).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The convolution coefficient `eps_s^2 L_j^2 - eps_s L_j - 2`; every
/// corrected display uses j = s, the literal fourth and fifth keep their
/// printed index.
fn conv_coefficient(s: i64, j: i64) -> GaussianRational {
    eps_pow(s, 2)
        .mul(&luc_g(j))
        .mul(&luc_g(j))
        .sub(&eps_pow(s, 1).mul(&luc_g(j)))
        .sub(&g_rat(2))
}

/// The same polynomial with both interior signs flipped, as the fifth and
/// sixth displays print it.
fn conv_coefficient_flipped(s: i64) -> GaussianRational {
    eps_pow(s, 2)
        .mul(&luc_g(s))
        .mul(&luc_g(s))
        .add(&eps_pow(s, 1).mul(&luc_g(s)))
        .add(&g_rat(2))
}

fn sum_1(a: &Assignment) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    fib_g(s * n)
        .mul(&g_rat(2))
        .sub(&fib_g(s).mul(&luc_g(s * (n - 1))))
        .sub(&luc_g(s).mul(&fib_g(s * (n - 1))))
}

/// Second display; the printed pairing factor is F_2s, the corrected one
/// F_s.
fn sum_2(a: &Assignment, literal: bool) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let pairing = if literal { fib_g(2 * s) } else { fib_g(s) };
    let lhs = luc_g(s).mul(
        &fib_g(s * (2 * n + 1)).sub(&sign_g(s).mul(&fib_g(s * (2 * n - 1)))),
    );
    let rhs = pairing.mul(
        &luc_g(s * (2 * n + 1)).add(&sign_g(s).mul(&luc_g(s * (2 * n - 1)))),
    );
    lhs.sub(&rhs)
}

fn sum_3(a: &Assignment) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let front = luc_g(s).mul(&luc_g(s)).sub(&sign_g(s).mul(&g_rat(2)));
    fib_g(2 * s * n)
        .mul(&g_rat(2))
        .sub(&front.mul(&fib_g(2 * s * (n - 1))))
        .sub(&fib_g(s).mul(&luc_g(s)).mul(&luc_g(2 * s * (n - 1))))
}

/// Fourth display; the printed convolution coefficient carries L_2m in
/// place of L_s, so the literal record takes m as an extra axis.
fn sum_4(a: &Assignment, literal: bool) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let coefficient = if literal {
        conv_coefficient(s, 2 * a.get("m"))
    } else {
        conv_coefficient(s, s)
    };
    let lhs = luc_g(s).mul(
        &fib_g(s * n).sub(&sign_g(s).mul(&eps_pow(s, 1)).mul(&fib_g(s * (n - 1)))),
    );
    let mut conv = GaussianRational::zero();
    for k in 1..n {
        conv = conv.add(
            &eps_pow(s, n - k)
                .mul(&fib_g(s * k))
                .mul(&luc_g(s * (2 * n - 2 * k - 1))),
        );
    }
    let rhs = sign_g(s)
        .mul(&eps_pow(s, n + 1))
        .mul(&fib_g(s))
        .mul(&luc_g(s * (2 * n - 1)))
        .sub(&sign_g(s).mul(&coefficient).mul(&conv));
    lhs.sub(&rhs)
}

/// Fifth display; the printed left coefficient squares L_2m in place of
/// L_s and the printed sum multiplier flips the interior signs and drops
/// the leading sign.
fn sum_5(a: &Assignment, literal: bool) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let square = if literal {
        let band = luc_g(2 * a.get("m"));
        band.mul(&band)
    } else {
        luc_g(s).mul(&luc_g(s))
    };
    let multiplier = if literal {
        conv_coefficient_flipped(s)
    } else {
        sign_g(s).mul(&conv_coefficient(s, s)).neg()
    };
    let lhs = fib_g(s * n).mul(&g_rat(2)).sub(
        &eps_pow(s, 1)
            .mul(&square.sub(&sign_g(s).mul(&g_rat(2))))
            .mul(&fib_g(s * (n - 1))),
    );
    let mut conv = GaussianRational::zero();
    for k in 1..n {
        conv = conv.add(
            &eps_pow(s, n - k)
                .mul(&fib_g(s * k))
                .mul(&luc_g(2 * s * (n - k - 1))),
        );
    }
    let rhs = sign_g(s)
        .mul(&eps_pow(s, n + 1))
        .mul(&fib_g(s))
        .mul(&luc_g(2 * s * (n - 1)))
        .add(&multiplier.mul(&conv));
    lhs.sub(&rhs)
}

/// Sixth display; the printed sum multiplier is the negated flipped
/// coefficient where the pairing needs the plain one.
fn sum_6(a: &Assignment, literal: bool) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let multiplier = if literal {
        conv_coefficient_flipped(s).neg()
    } else {
        conv_coefficient(s, s)
    };
    let lhs = eps_pow(s, n).mul(
        &eps_pow(s, 1)
            .mul(&fib_g(s * (2 * n + 1)))
            .mul(&g_rat(2))
            .sub(&luc_g(s).mul(&fib_g(s * (2 * n - 1)))),
    );
    let mut conv = GaussianRational::zero();
    for k in 0..n {
        conv = conv.add(
            &eps_pow(s, k)
                .mul(&fib_g(s * (2 * k + 1)))
                .mul(&luc_g(s * (n - k - 1))),
        );
    }
    let rhs = fib_g(s)
        .mul(&eps_pow(s, 1).mul(&luc_g(s * n)).add(&luc_g(s * (n - 1))))
        .add(&multiplier.mul(&conv));
    lhs.sub(&rhs)
}

fn sum_7(a: &Assignment) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let front = luc_g(s).mul(&luc_g(s)).sub(&sign_g(s).mul(&g_rat(2)));
    fib_g(s * (2 * n + 1))
        .mul(&g_rat(2))
        .sub(&front.mul(&fib_g(s * (2 * n - 1))))
        .sub(&fib_g(s).mul(&luc_g(2 * s * n).add(&sign_g(s).mul(&luc_g(2 * s * (n - 1))))))
}

/// Eighth display; the printed sum multiplier is the negated flipped
/// coefficient and its eps power is offset by two.
fn sum_8(a: &Assignment, literal: bool) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    let lhs = eps_pow(s, n).mul(
        &fib_g(2 * s * n)
            .mul(&g_rat(2))
            .sub(&sign_g(s).mul(&eps_pow(s, 1)).mul(&luc_g(s)).mul(&fib_g(2 * s * (n - 1)))),
    );
    let mut conv = GaussianRational::zero();
    for k in 1..n {
        let power = if literal { k + 1 } else { k - 1 };
        conv = conv.add(
            &eps_pow(s, power)
                .mul(&fib_g(2 * s * k))
                .mul(&luc_g(s * (n - k - 1))),
        );
    }
    let multiplier = if literal {
        conv_coefficient_flipped(s).neg()
    } else {
        conv_coefficient(s, s)
    };
    let rhs = eps_pow(s, 1)
        .mul(&fib_g(s))
        .mul(&luc_g(s))
        .mul(&luc_g(s * (n - 1)))
        .add(&multiplier.mul(&conv));
    lhs.sub(&rhs)
}

fn sum_9(a: &Assignment) -> GaussianRational {
    let (n, s) = (a.get("n"), a.get("s"));
    fib_g(2 * s * n)
        .sub(&sign_g(s).mul(&fib_g(2 * s * (n - 1))))
        .sub(&fib_g(s).mul(&luc_g(s * (2 * n - 1))))
}

/// `alpha^s + sgn beta^s` (`plus`) or `alpha^s - sgn beta^s`.
fn power_weight(s: i64, sgn: i64, plus: bool) -> Sqrt5 {
    let second = if sgn > 0 { beta_pow(s) } else { beta_pow(s).neg() };
    if plus {
        alpha_pow(s).add(&second)
    } else {
        alpha_pow(s).sub(&second)
    }
}

fn unit() -> Sqrt5 {
    s5_rat(rat(1, 1))
}

/// `c * sqrt(5)` in the extension.
fn root5_times(c: GaussianRational) -> Sqrt5 {
    QuadExt::new(GaussianRational::zero(), c, five())
}

fn half(v: GaussianRational) -> GaussianRational {
    v.mul(&gq(rat(1, 2)))
}

/// `sqrt(5) F_s / 2`, the base of the first display.
fn fib_base(s: i64) -> Sqrt5 {
    root5_times(half(fib_g(s)))
}

/// `sqrt(5) F_2s / 2`, the unscaled base.
fn w_base(s: i64) -> Sqrt5 {
    root5_times(half(fib_g(2 * s)))
}

/// `sqrt(5) F_2s L_s / (2 L_2s)`, the left scaled base.
fn p_base(s: i64) -> Sqrt5 {
    let scalar = half(fib_g(2 * s))
        .mul(&luc_g(s))
        .div(&luc_g(2 * s))
        .expect("Lucas numbers are nonzero");
    root5_times(scalar)
}

/// `sqrt(5) L_2s F_s / (2 L_s)`, the right scaled base.
fn q_base(s: i64) -> Sqrt5 {
    let scalar = half(luc_g(2 * s))
        .mul(&fib_g(s))
        .div(&luc_g(s))
        .expect("Lucas numbers are nonzero");
    root5_times(scalar)
}

/// `L_index^n` as a scalar prefactor.
fn luc_prefactor(index: i64, n: i64) -> GaussianRational {
    gq(rat_pow(&big(lucas_i(index)), u64::try_from(n).expect("n >= 0")))
}

/// One side of a binomial display: sum `weight * base^(n-k) * seq(index)`
/// over the index range, with the binomial coefficient and an optional
/// doubling folded into `scale`. `term` maps `(k, sgn)` to the weight,
/// sequence index, and scale, or `None` when the weight vanishes.
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
        let power = base.pow_u(u64::try_from(n - k).expect("k <= n"));
        acc = acc.add(&power.mul(&weight).mul(&seq(index)).mul(&factor));
    }
    acc
}

fn binom_1(a: &Assignment) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let base = fib_base(s);
    let lhs = side(n, 1, &base, fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), k * s, 2))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), k * s, 2))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

/// Second display; `lhs_start` is 0 for the corrected left range and 1 for
/// the printed one.
fn binom_2(a: &Assignment, lhs_start: i64) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let base = w_base(s);
    let lhs = side(n, lhs_start, &base, fib_s5, |k, sgn| {
        Some((power_weight(s, sgn, true), (2 * k + 1) * s, 1))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        Some((power_weight(s, sgn, false), (2 * k + 1) * s, 1))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn binom_3(a: &Assignment) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let base = w_base(s);
    let lhs = side(n, 1, &base, fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 2 * k * s, 2))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 2 * k * s, 2))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

/// Fourth display; `rhs_start` is 0 for the corrected right range and 1
/// for the printed one.
fn binom_4(a: &Assignment, rhs_start: i64) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let lhs = side(n, 1, &p_base(s), fib_s5, |k, sgn| {
        Some((power_weight(s, sgn, true), k * s, 1))
    });
    let rhs = side(n, rhs_start, &q_base(s), luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), (2 * k + 1) * s, 2))
    });
    Ok(RingValue::QuadGauss(
        sqrt5()
            .mul(&lhs)
            .scalar_mul(&luc_prefactor(2 * s, n))
            .sub(&rhs.scalar_mul(&luc_prefactor(s, n))),
    ))
}

/// Fifth display; `rhs_start` as in `binom_4`.
fn binom_5(a: &Assignment, rhs_start: i64) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let lhs = side(n, 1, &p_base(s), fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), k * s, 2))
    });
    let rhs = side(n, rhs_start, &q_base(s), luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), 2 * k * s, 2))
    });
    Ok(RingValue::QuadGauss(
        sqrt5()
            .mul(&lhs)
            .scalar_mul(&luc_prefactor(2 * s, n))
            .sub(&rhs.scalar_mul(&luc_prefactor(s, n))),
    ))
}

/// Sixth display; the printed reading doubles the left prefactor to
/// (2 L_s)^n and the right base to 2 P.
fn binom_6(a: &Assignment, literal: bool) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let left_prefactor = if literal {
        gq(rat_pow(
            &(big(lucas_i(s)) * rat(2, 1)),
            u64::try_from(n).expect("n >= 0"),
        ))
    } else {
        luc_prefactor(s, n)
    };
    let right_base = if literal {
        p_base(s).scalar_mul(&g_rat(2))
    } else {
        p_base(s)
    };
    let lhs = side(n, 0, &q_base(s), fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), (2 * k + 1) * s, 2))
    });
    let rhs = side(n, 0, &right_base, luc_s5, |k, sgn| {
        Some((power_weight(s, sgn, false), k * s, 1))
    });
    Ok(RingValue::QuadGauss(
        sqrt5()
            .mul(&lhs)
            .scalar_mul(&left_prefactor)
            .sub(&rhs.scalar_mul(&luc_prefactor(2 * s, n))),
    ))
}

/// Seventh display; the printed pairing is L_ks where the substitution
/// produces L_2ks.
fn binom_7(a: &Assignment, literal: bool) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let base = w_base(s);
    let lhs = side(n, 0, &base, fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), (2 * k + 1) * s, 2))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        let index = if literal { k * s } else { 2 * k * s };
        Some((power_weight(s, sgn, false), index, 1))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn binom_8(a: &Assignment) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let lhs = side(n, 1, &q_base(s), fib_s5, |k, sgn| {
        (sgn > 0).then(|| (unit(), 2 * k * s, 2))
    });
    let rhs = side(n, 0, &p_base(s), luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), k * s, 2))
    });
    Ok(RingValue::QuadGauss(
        sqrt5()
            .mul(&lhs)
            .scalar_mul(&luc_prefactor(s, n))
            .sub(&rhs.scalar_mul(&luc_prefactor(2 * s, n))),
    ))
}

fn binom_9(a: &Assignment) -> Result<RingValue, EngineError> {
    let (n, s) = (a.get("n"), a.get("s"));
    let base = w_base(s);
    let lhs = side(n, 1, &base, fib_s5, |k, sgn| {
        Some((power_weight(s, sgn, true), 2 * k * s, 1))
    });
    let rhs = side(n, 0, &base, luc_s5, |k, sgn| {
        (sgn < 0).then(|| (unit(), (2 * k + 1) * s, 2))
    });
    Ok(RingValue::QuadGauss(sqrt5().mul(&lhs).sub(&rhs)))
}

fn grid() -> Vec<ParamRange> {
    vec![pr("n", 0, 16, 16), pr("s", 1, 8, 8)]
}

fn grid_with_m() -> Vec<ParamRange> {
    vec![pr("n", 0, 16, 16), pr("s", 1, 8, 8), pr("m", 0, 3, 5)]
}

fn sum_record(
    id: &'static str,
    reading: Reading,
    params: Vec<ParamRange>,
    eval: impl Fn(&Assignment) -> GaussianRational + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:cor/fib-eps-sums",
        reading,
        "Q(i)",
        params,
        move |a| Ok(RingValue::Gauss(eval(a))),
    )
}

fn binom_record(
    id: &'static str,
    reading: Reading,
    eval: impl Fn(&Assignment) -> Result<RingValue, EngineError> + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:cor/fib-eps-binomials",
        reading,
        "Q(i)[sqrt(5)]",
        grid(),
        eval,
    )
}

pub(super) fn install(records: &mut Vec<IdentityRecord>) {
    records.push(sum_record("cor-fib-eps-1", Reading::Canonical, grid(), sum_1));
    records.push(sum_record("cor-fib-eps-2", Reading::Canonical, grid(), |a| {
        sum_2(a, false)
    }));
    records.push(sum_record(
        "cor-fib-eps-2-literal",
        Reading::Literal,
        grid(),
        |a| sum_2(a, true),
    ));
    records.push(sum_record("cor-fib-eps-3", Reading::Canonical, grid(), sum_3));
    records.push(sum_record("cor-fib-eps-4", Reading::Canonical, grid(), |a| {
        sum_4(a, false)
    }));
    records.push(sum_record(
        "cor-fib-eps-4-literal",
        Reading::Literal,
        grid_with_m(),
        |a| sum_4(a, true),
    ));
    records.push(sum_record("cor-fib-eps-5", Reading::Canonical, grid(), |a| {
        sum_5(a, false)
    }));
    records.push(sum_record(
        "cor-fib-eps-5-literal",
        Reading::Literal,
        grid_with_m(),
        |a| sum_5(a, true),
    ));
    records.push(sum_record("cor-fib-eps-6", Reading::Canonical, grid(), |a| {
        sum_6(a, false)
    }));
    records.push(sum_record(
        "cor-fib-eps-6-literal",
        Reading::Literal,
        grid(),
        |a| sum_6(a, true),
    ));
    records.push(sum_record("cor-fib-eps-7", Reading::Canonical, grid(), sum_7));
    records.push(sum_record("cor-fib-eps-8", Reading::Canonical, grid(), |a| {
        sum_8(a, false)
    }));
    records.push(sum_record(
        "cor-fib-eps-8-literal",
        Reading::Literal,
        grid(),
        |a| sum_8(a, true),
    ));
    records.push(sum_record("cor-fib-eps-9", Reading::Canonical, grid(), sum_9));

    records.push(binom_record("cor-fib-eps-binom-1", Reading::Canonical, binom_1));
    records.push(binom_record("cor-fib-eps-binom-2", Reading::Canonical, |a| {
        binom_2(a, 0)
    }));
    records.push(binom_record(
        "cor-fib-eps-binom-2-literal",
        Reading::Literal,
        |a| binom_2(a, 1),
    ));
    records.push(binom_record("cor-fib-eps-binom-3", Reading::Canonical, binom_3));
    records.push(binom_record("cor-fib-eps-binom-4", Reading::Canonical, |a| {
        binom_4(a, 0)
    }));
    records.push(binom_record(
        "cor-fib-eps-binom-4-literal",
        Reading::Literal,
        |a| binom_4(a, 1),
    ));
    records.push(binom_record("cor-fib-eps-binom-5", Reading::Canonical, |a| {
        binom_5(a, 0)
    }));
    records.push(binom_record(
        "cor-fib-eps-binom-5-literal",
        Reading::Literal,
        |a| binom_5(a, 1),
    ));
    records.push(binom_record("cor-fib-eps-binom-6", Reading::Canonical, |a| {
        binom_6(a, false)
    }));
    records.push(binom_record(
        "cor-fib-eps-binom-6-literal",
        Reading::Literal,
        |a| binom_6(a, true),
    ));
    records.push(binom_record("cor-fib-eps-binom-7", Reading::Canonical, |a| {
        binom_7(a, false)
    }));
    records.push(binom_record(
        "cor-fib-eps-binom-7-literal",
        Reading::Literal,
        |a| binom_7(a, true),
    ));
    records.push(binom_record("cor-fib-eps-binom-8", Reading::Canonical, binom_8));
    records.push(binom_record("cor-fib-eps-binom-9", Reading::Canonical, binom_9));
}
