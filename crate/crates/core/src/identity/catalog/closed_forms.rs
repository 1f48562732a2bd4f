//! The six ordinary and six exponential closed forms, checked coefficient
//! by coefficient against the recurrence polynomials, plus the two
//! functional equations between the generating functions.

use super::super::{cached_coeff, EngineError, IdentityRecord, Reading};
use super::{factorial, poly, poly_value, pr, QPoly};
use crate::arith::{BigRational, RationalFunction, Ring};
use crate::series::{egf_expand, ogf_expand, GfFamily};
use crate::seq::{balancing, lucas_balancing};

fn family_member(family: GfFamily, k: usize) -> QPoly {
    let idx = family.sequence_index(k);
    if family.is_balancing() {
        balancing(idx)
    } else {
        lucas_balancing(idx)
    }
}

fn ogf_coeff(family: GfFamily, k: usize) -> Result<RationalFunction, EngineError> {
    cached_coeff(&format!("ogf:{}", family.name()), k, |order| Ok(ogf_expand(family, order)))
}

fn egf_coeff(family: GfFamily, k: usize) -> Result<RationalFunction, EngineError> {
    cached_coeff(&format!("egf:{}", family.name()), k, |order| Ok(egf_expand(family, order)))
}

pub(super) fn install(records: &mut Vec<IdentityRecord>) {
    let ogf_ids: [(GfFamily, &'static str); 6] = [
        (GfFamily::B, "ogf-b"),
        (GfFamily::BOdd, "ogf-b-odd"),
        (GfFamily::BEven, "ogf-b-even"),
        (GfFamily::C, "ogf-c"),
        (GfFamily::COdd, "ogf-c-odd"),
        (GfFamily::CEven, "ogf-c-even"),
    ];
    for (family, id) in ogf_ids {
        records.push(IdentityRecord::new(
            id,
            "catalog:gf/ogf-closed-forms",
            Reading::Canonical,
            "Q[x]",
            vec![pr("order", 0, 16, 64)],
            move |a| {
                let k = a.get("order") as usize;
                let coeff = ogf_coeff(family, k)?;
                let expected = RationalFunction::from_poly(family_member(family, k));
                Ok(poly_value(coeff.sub(&expected)))
            },
        ));
    }

    let egf_ids: [(GfFamily, &'static str); 6] = [
        (GfFamily::B, "egf-b"),
        (GfFamily::BOdd, "egf-b-odd"),
        (GfFamily::BEven, "egf-b-even"),
        (GfFamily::C, "egf-c"),
        (GfFamily::COdd, "egf-c-odd"),
        (GfFamily::CEven, "egf-c-even"),
    ];
    for (family, id) in egf_ids {
        records.push(IdentityRecord::new(
            id,
            "catalog:gf/egf-closed-forms",
            Reading::Canonical,
            "Q[x]",
            vec![pr("order", 0, 16, 48)],
            move |a| {
                let k = a.get("order") as usize;
                // Exponential series store a_k / k!; scale back before
                // comparing with the sequence member.
                let coeff = egf_coeff(family, k)?;
                let scale = RationalFunction::from_rational(factorial(k));
                let expected = RationalFunction::from_poly(family_member(family, k));
                Ok(poly_value(coeff.mul(&scale).sub(&expected)))
            },
        ));
    }

    // (1 - (18x^2 - 1) z) b2(z) = 6x z c2(z), coefficient by coefficient.
    records.push(IdentityRecord::new(
        "fe-b2-c2",
        "catalog:gf/functional-equations",
        Reading::Canonical,
        "Q[x]",
        vec![pr("order", 0, 16, 32)],
        |a| {
            let k = a.get("order") as usize;
            let e_shift = RationalFunction::from_poly(poly(&[-1, 0, 18]));
            let six_x = RationalFunction::from_poly(poly(&[0, 6]));
            let mut lhs = ogf_coeff(GfFamily::BEven, k)?;
            let mut rhs = RationalFunction::from_rational(BigRational::zero());
            if k >= 1 {
                lhs = lhs.sub(&e_shift.mul(&ogf_coeff(GfFamily::BEven, k - 1)?));
                rhs = six_x.mul(&ogf_coeff(GfFamily::CEven, k - 1)?);
            }
            Ok(poly_value(lhs.sub(&rhs)))
        },
    ));

    // z c1(z) - 3x (1 - z) b(z) = (36x^2 - 6x - 2) z b(z) c1(z).
    records.push(IdentityRecord::new(
        "fe-b-c1",
        "catalog:gf/functional-equations",
        Reading::Canonical,
        "Q[x]",
        vec![pr("order", 0, 16, 32)],
        |a| {
            let k = a.get("order") as usize;
            let three_x = RationalFunction::from_poly(poly(&[0, 3]));
            let m = RationalFunction::from_poly(poly(&[-2, -6, 36]));
            let mut lhs = three_x.mul(&ogf_coeff(GfFamily::B, k)?).neg();
            let mut rhs = RationalFunction::from_rational(BigRational::zero());
            if k >= 1 {
                lhs = lhs
                    .add(&ogf_coeff(GfFamily::COdd, k - 1)?)
                    .add(&three_x.mul(&ogf_coeff(GfFamily::B, k - 1)?));
                let mut conv = RationalFunction::from_rational(BigRational::zero());
                for j in 0..k {
                    conv = conv.add(
                        &ogf_coeff(GfFamily::B, j)?.mul(&ogf_coeff(GfFamily::COdd, k - 1 - j)?),
                    );
                }
                rhs = m.mul(&conv);
            }
            Ok(poly_value(lhs.sub(&rhs)))
        },
    ));
}
