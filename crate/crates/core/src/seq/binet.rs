//! Closed forms through quadratic extensions: the root `lambda = 3x + sqrt(9x^2-1)`
//! of the balancing recurrence, its Chebyshev analogue `omega = x + sqrt(x^2-1)`,
//! and the golden-ratio pair over the rationals adjoined sqrt(5).
//!
//! Every radical is formal: the second component of a [`QuadExt`] tracks the
//! coefficient of the square root, so the identities hold independent of any
//! branch choice, and conjugation is the `sqrt -> -sqrt` automorphism.

use crate::arith::{BigRational, GaussianRational, QuadExt, RationalFunction, Ring};
use crate::seq::QPoly;

/// The discriminant-quarter `9x^2 - 1` under the balancing recurrence, as a
/// rational function; `lambda` and its conjugate are `3x +- sqrt` of this.
pub fn delta_balancing() -> RationalFunction {
    RationalFunction::from_poly(QPoly::from_i64_coeffs(&[-1, 0, 9]))
}

/// The Chebyshev analogue `x^2 - 1`.
pub fn delta_chebyshev() -> RationalFunction {
    RationalFunction::from_poly(QPoly::from_i64_coeffs(&[-1, 0, 1]))
}

/// `lambda = 3x + sqrt(9x^2 - 1)`; its norm is 1, so the inverse is the
/// conjugate `3x - sqrt(9x^2 - 1)`.
pub fn lambda() -> QuadExt<RationalFunction> {
    QuadExt::new(
        RationalFunction::from_poly(QPoly::from_i64_coeffs(&[0, 3])),
        RationalFunction::from_poly(QPoly::one()),
        delta_balancing(),
    )
}

/// `omega = x + sqrt(x^2 - 1)`, the Chebyshev counterpart of `lambda`; also
/// of norm 1.
pub fn omega() -> QuadExt<RationalFunction> {
    QuadExt::new(
        RationalFunction::x(),
        RationalFunction::from_poly(QPoly::one()),
        delta_chebyshev(),
    )
}

fn five() -> GaussianRational {
    GaussianRational::from_rational(BigRational::from_i64(5))
}

/// `sqrt(5)` as a quadratic extension of the Gaussian rationals.
pub fn sqrt_five() -> QuadExt<GaussianRational> {
    QuadExt::sqrt_delta(five())
}

/// The golden ratio `alpha = (1 + sqrt(5))/2`.
pub fn alpha() -> QuadExt<GaussianRational> {
    let half = GaussianRational::from_rational(BigRational::new(1.into(), 2.into()));
    QuadExt::new(half.clone(), half, five())
}

/// Its conjugate `beta = (1 - sqrt(5))/2`, so `alpha + beta = 1` and
/// `alpha * beta = -1`.
pub fn beta() -> QuadExt<GaussianRational> {
    alpha().conj()
}

/// `B_n = (lambda^n - lambda^{-n}) / (2 sqrt(9x^2 - 1))`, evaluated in the
/// quadratic extension; the result lands in the base ring with the balancing
/// polynomial as its first component.
pub fn balancing_closed_form(n: i64) -> QuadExt<RationalFunction> {
    let l = lambda();
    // lambda has norm 1, so lambda^{-n} is conj(lambda)^n and pow_i cannot fail.
    let pos = l.pow_i(n).unwrap();
    let neg = l.pow_i(-n).unwrap();
    let two_sqrt = QuadExt::sqrt_delta(delta_balancing()).scalar_mul(&RationalFunction::from_i64(2));
    pos.sub(&neg).div(&two_sqrt).unwrap()
}

/// `C_n = (lambda^n + lambda^{-n}) / 2`, likewise landing in the base ring.
pub fn lucas_balancing_closed_form(n: i64) -> QuadExt<RationalFunction> {
    let l = lambda();
    let pos = l.pow_i(n).unwrap();
    let neg = l.pow_i(-n).unwrap();
    let half = RationalFunction::from_rational(BigRational::new(1.into(), 2.into()));
    pos.add(&neg).scalar_mul(&half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{balancing_i, lucas_balancing_i};

    #[test]
    fn lambda_has_norm_one() {
        let l = lambda();
        assert!(l.norm().is_one());
        assert_eq!(l.inv().unwrap(), l.conj());
        assert_eq!(l.mul(&l.conj()), QuadExt::one(delta_balancing()));
    }

    #[test]
    fn omega_has_norm_one() {
        let w = omega();
        assert!(w.norm().is_one());
        assert_eq!(w.inv().unwrap(), w.conj());
    }

    #[test]
    fn golden_ratio_pair() {
        let a = alpha();
        let b = beta();
        assert_eq!(a.add(&b), QuadExt::one(five()));
        assert_eq!(a.mul(&b), QuadExt::one(five()).neg());
        assert_eq!(a.sub(&b), sqrt_five());
        assert_eq!(a.inv().unwrap(), b.neg());
    }

    #[test]
    fn closed_forms_recover_the_polynomials() {
        for n in -6i64..=6 {
            let b = balancing_closed_form(n);
            assert!(b.is_base(), "B_{n} left a radical behind");
            assert_eq!(
                b.u.as_poly().expect("polynomial value"),
                &balancing_i(n),
                "B at n = {n}"
            );
            let c = lucas_balancing_closed_form(n);
            assert!(c.is_base(), "C_{n} left a radical behind");
            assert_eq!(
                c.u.as_poly().expect("polynomial value"),
                &lucas_balancing_i(n),
                "C at n = {n}"
            );
        }
    }
}
