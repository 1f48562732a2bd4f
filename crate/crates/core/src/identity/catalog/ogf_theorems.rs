//! Relations between the balancing and Lucas-balancing families proved
//! through ordinary generating functions: five direct recurrences and four
//! convolution formulas.
//!
//! The third and fourth convolution displays subtract their convolution
//! term where the expansion of `z b c_1` actually adds it; the `-literal`
//! records keep the printed sign and fail at n = 1 and n = 2.

use super::super::{IdentityRecord, Reading, RingValue};
use super::{poly, pr, QPoly};
use crate::seq::{balancing, lucas_balancing};

fn b(n: i64) -> QPoly {
    balancing(u64::try_from(n).expect("nonnegative index"))
}

fn c(n: i64) -> QPoly {
    lucas_balancing(u64::try_from(n).expect("nonnegative index"))
}

/// `36x^2 - 6x - 2`, the coefficient of the product series in both
/// functional equations.
fn m() -> QPoly {
    poly(&[-2, -6, 36])
}

fn plain(id: &'static str, eval: impl Fn(i64) -> QPoly + Send + Sync + 'static) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:thm/ogf-relations",
        Reading::Canonical,
        "Q[x]",
        vec![pr("n", 1, 16, 64)],
        move |a| Ok(RingValue::Poly(eval(a.get("n")))),
    )
}

fn convolution(
    id: &'static str,
    reading: Reading,
    eval: impl Fn(i64) -> QPoly + Send + Sync + 'static,
) -> IdentityRecord {
    IdentityRecord::new(
        id,
        "catalog:thm/ogf-convolutions",
        reading,
        "Q[x]",
        vec![pr("n", 1, 16, 64)],
        move |a| Ok(RingValue::Poly(eval(a.get("n")))),
    )
}

pub(super) fn install(records: &mut Vec<IdentityRecord>) {
    records.push(plain("thm-ogf-1", |n| {
        b(n).sub(&b(n - 1).mul(&poly(&[0, 3]))).sub(&c(n - 1))
    }));
    records.push(plain("thm-ogf-2", |n| {
        let lhs = b(2 * n + 1).sub(&b(2 * n - 1)).mul(&poly(&[0, 3]));
        lhs.sub(&c(2 * n + 1).add(&c(2 * n - 1)))
    }));
    records.push(plain("thm-ogf-3", |n| {
        let lhs = b(2 * n).sub(&b(2 * (n - 1)).mul(&poly(&[-1, 0, 18])));
        lhs.sub(&c(2 * (n - 1)).mul(&poly(&[0, 6])))
    }));
    records.push(plain("thm-ogf-4", |n| {
        let lhs = b(2 * n + 1).sub(&b(2 * n - 1).mul(&poly(&[-1, 0, 18])));
        lhs.sub(&c(2 * n).add(&c(2 * (n - 1))))
    }));
    records.push(plain("thm-ogf-5", |n| {
        let lhs = b(2 * n).sub(&b(2 * (n - 1))).mul(&poly(&[0, 3]));
        lhs.sub(&c(2 * n - 1).mul(&poly(&[0, 6])))
    }));

    records.push(convolution("thm-ogf-sum-1", Reading::Canonical, |n| {
        let lhs = b(n).sub(&b(n - 1)).mul(&poly(&[0, 3]));
        let mut sum = QPoly::zero();
        for k in 1..n {
            sum = sum.add(&b(k).mul(&c(2 * (n - k) - 1)));
        }
        lhs.sub(&c(2 * n - 1).sub(&m().mul(&sum)))
    }));
    records.push(convolution("thm-ogf-sum-2", Reading::Canonical, |n| {
        let lhs = b(n).sub(&b(n - 1).mul(&poly(&[-1, 0, 18])));
        let mut sum = QPoly::zero();
        for k in 1..n {
            sum = sum.add(&b(k).mul(&c(2 * (n - k - 1))));
        }
        lhs.sub(&c(2 * (n - 1)).sub(&m().mul(&sum)))
    }));

    // Third and fourth formulas, with the convolution sign the expansion
    // of the product series forces (plus), then as printed (minus).
    for (id, reading, sign) in [
        ("thm-ogf-sum-3", Reading::Canonical, 1),
        ("thm-ogf-sum-3-literal", Reading::Literal, -1),
    ] {
        records.push(convolution(id, reading, move |n| {
            let lhs = b(2 * n + 1).sub(&b(2 * n - 1).mul(&poly(&[0, 3])));
            let mut sum = QPoly::zero();
            for k in 0..n {
                sum = sum.add(&b(2 * k + 1).mul(&c(n - k - 1)));
            }
            let signed = m().mul(&sum).scalar_mul(&super::rat(sign, 1));
            lhs.sub(&c(n).add(&c(n - 1)).add(&signed))
        }));
    }
    for (id, reading, sign) in [
        ("thm-ogf-sum-4", Reading::Canonical, 1),
        ("thm-ogf-sum-4-literal", Reading::Literal, -1),
    ] {
        records.push(convolution(id, reading, move |n| {
            let lhs = b(2 * n).sub(&b(2 * (n - 1)).mul(&poly(&[0, 3])));
            let mut sum = QPoly::zero();
            for k in 1..n {
                sum = sum.add(&b(2 * k).mul(&c(n - k - 1)));
            }
            let signed = m().mul(&sum).scalar_mul(&super::rat(sign, 1));
            lhs.sub(&c(n - 1).mul(&poly(&[0, 6])).add(&signed))
        }));
    }
}
