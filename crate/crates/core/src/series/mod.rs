//! Truncated formal power series in z with exact coefficients, and the
//! generating functions of the balancing families: the six displayed closed
//! forms in both ordinary and exponential form, plus the generic closed form
//! attached to an arbitrary second-order recurrence, kept radical-free via
//! power series in the squared discriminant.

use crate::arith::{BigRational, DensePolynomial, Field, RationalFunction, Ring};
use crate::seq::{RecurrenceSpec, SeqError};

type QPoly = DensePolynomial<BigRational>;

/// Errors from series constructors with restricted domains.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeriesError {
    #[error("series has no reciprocal: the constant term is not invertible")]
    ConstantTermNotInvertible,
    #[error(transparent)]
    Degenerate(#[from] SeqError),
}

/// Whether coefficients are read plainly or carry the 1/k! of an
/// exponential generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Ordinary,
    /// Stores c_k = a_k / k!, so multiplication is the plain Cauchy product
    /// and the underlying sequence is recovered by scaling back with k!.
    Exponential,
}

/// The six generating-function families: all, odd, and even indices of the
/// balancing and Lucas-balancing polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfFamily {
    B,
    BOdd,
    BEven,
    C,
    COdd,
    CEven,
}

impl GfFamily {
    pub const ALL: [GfFamily; 6] = [
        GfFamily::B,
        GfFamily::BOdd,
        GfFamily::BEven,
        GfFamily::C,
        GfFamily::COdd,
        GfFamily::CEven,
    ];

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "b" => Some(GfFamily::B),
            "b-odd" => Some(GfFamily::BOdd),
            "b-even" => Some(GfFamily::BEven),
            "c" => Some(GfFamily::C),
            "c-odd" => Some(GfFamily::COdd),
            "c-even" => Some(GfFamily::CEven),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GfFamily::B => "b",
            GfFamily::BOdd => "b-odd",
            GfFamily::BEven => "b-even",
            GfFamily::C => "c",
            GfFamily::COdd => "c-odd",
            GfFamily::CEven => "c-even",
        }
    }

    /// The sequence index carried by the coefficient of z^k: k for the full
    /// family, 2k+1 for odd, 2k for even.
    pub fn sequence_index(self, k: usize) -> u64 {
        let k = k as u64;
        match self {
            GfFamily::B | GfFamily::C => k,
            GfFamily::BOdd | GfFamily::COdd => 2 * k + 1,
            GfFamily::BEven | GfFamily::CEven => 2 * k,
        }
    }

    /// True for the balancing side, false for the Lucas-balancing side.
    pub fn is_balancing(self) -> bool {
        matches!(self, GfFamily::B | GfFamily::BOdd | GfFamily::BEven)
    }
}

/// Which slice of the index set a generic closed form covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesVariant {
    All,
    Odd,
    Even,
}

/// A power series known exactly through its truncation order: coefficients
/// c_0..c_N of z^0..z^N.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<R: Ring> {
    kind: SeriesKind,
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn new(kind: SeriesKind, coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Self { kind, coeffs }
    }

    /// A polynomial in z as a series of the given truncation order; the
    /// slice is padded with zeros or cut as needed.
    pub fn from_slice(kind: SeriesKind, coeffs: &[R], order: usize) -> Self {
        let mut v = vec![R::zero(); order + 1];
        for (i, c) in coeffs.iter().take(order + 1).enumerate() {
            v[i] = c.clone();
        }
        Self { kind, coeffs: v }
    }

    pub fn zero(kind: SeriesKind, order: usize) -> Self {
        Self {
            kind,
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(kind: SeriesKind, order: usize) -> Self {
        let mut s = Self::zero(kind, order);
        s.coeffs[0] = R::one();
        s
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            kind: self.kind,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_kind(&self, rhs: &Self) {
        assert_eq!(self.kind, rhs.kind, "mixed ordinary and exponential series");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_kind(rhs);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect();
        Self { kind: self.kind, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_kind(rhs);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect();
        Self { kind: self.kind, coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Cauchy product, truncated to the shorter operand.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_kind(rhs);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { kind: self.kind, coeffs }
    }

    pub fn scalar_mul(&self, c: &R) -> Self {
        Self {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The coefficients of the underlying sequence: c_k itself for an
    /// ordinary series, c_k * k! for an exponential one.
    pub fn normalized(&self) -> Vec<R> {
        match self.kind {
            SeriesKind::Ordinary => self.coeffs.clone(),
            SeriesKind::Exponential => {
                let mut fact = R::one();
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        if k > 0 {
                            fact = fact.mul(&R::from_i64(k as i64));
                        }
                        c.mul(&fact)
                    })
                    .collect()
            }
        }
    }
}

impl<R: Field> Series<R> {
    /// Reciprocal through the truncation order, by the linear recurrence
    /// b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let b0 = self.coeffs[0]
            .inv()
            .map_err(|_| SeriesError::ConstantTermNotInvertible)?;
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n);
        out.push(b0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(b0.mul(&acc).neg());
        }
        Ok(Self {
            kind: self.kind,
            coeffs: out,
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Expansion of num(z)/den(z) to the given order, ordinary kind.
    pub fn from_fraction(num: &[R], den: &[R], order: usize) -> Result<Self, SeriesError> {
        let n = Self::from_slice(SeriesKind::Ordinary, num, order);
        let d = Self::from_slice(SeriesKind::Ordinary, den, order);
        n.div(&d)
    }

    /// e^{az} as an exponential series: stored coefficients a^k / k!.
    pub fn exp_linear(a: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cur = R::one();
        coeffs.push(cur.clone());
        for k in 1..=order {
            // Division by a nonzero integer; the coefficient fields here all
            // have characteristic zero.
            cur = cur.mul(a).div(&R::from_i64(k as i64)).unwrap();
            coeffs.push(cur.clone());
        }
        Self {
            kind: SeriesKind::Exponential,
            coeffs,
        }
    }

    /// cosh(sqrt(d) z) as the radical-free series sum_k d^k z^{2k}/(2k)!.
    pub fn cosh_like(d: &R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        let mut val = R::one();
        coeffs[0] = val.clone();
        let mut k = 0usize;
        while 2 * (k + 1) <= order {
            let step = ((2 * k + 1) * (2 * k + 2)) as i64;
            val = val.mul(d).div(&R::from_i64(step)).unwrap();
            coeffs[2 * (k + 1)] = val.clone();
            k += 1;
        }
        Self {
            kind: SeriesKind::Exponential,
            coeffs,
        }
    }

    /// sinh(sqrt(d) z)/sqrt(d) as the radical-free series
    /// sum_k d^k z^{2k+1}/(2k+1)!.
    pub fn sinh_like(d: &R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        if order >= 1 {
            let mut val = R::one();
            coeffs[1] = val.clone();
            let mut k = 0usize;
            while 2 * (k + 1) + 1 <= order {
                let step = ((2 * k + 2) * (2 * k + 3)) as i64;
                val = val.mul(d).div(&R::from_i64(step)).unwrap();
                coeffs[2 * (k + 1) + 1] = val.clone();
                k += 1;
            }
        }
        Self {
            kind: SeriesKind::Exponential,
            coeffs,
        }
    }
}

impl Series<RationalFunction> {
    /// The normalized coefficients as polynomials in x; None if any of them
    /// keeps a nontrivial denominator.
    pub fn polynomial_coefficients(&self) -> Option<Vec<QPoly>> {
        self.normalized().iter().map(|r| r.as_poly().cloned()).collect()
    }
}

fn rf(coeffs: &[i64]) -> RationalFunction {
    RationalFunction::from_poly(QPoly::from_i64_coeffs(coeffs))
}

/// The displayed ordinary generating function of the family, expanded by
/// series division. Coefficients are polynomials in x: coefficient k is the
/// family member of index k, 2k+1, or 2k.
pub fn ogf_expand(family: GfFamily, order: usize) -> Series<RationalFunction> {
    let even_den = [rf(&[1]), rf(&[2, 0, -36]), rf(&[1])];
    let all_den = [rf(&[1]), rf(&[0, -6]), rf(&[1])];
    let (num, den): (Vec<RationalFunction>, &[RationalFunction]) = match family {
        GfFamily::B => (vec![rf(&[0]), rf(&[1])], &all_den),
        GfFamily::BOdd => (vec![rf(&[1]), rf(&[1])], &even_den),
        GfFamily::BEven => (vec![rf(&[0]), rf(&[0, 6])], &even_den),
        GfFamily::C => (vec![rf(&[1]), rf(&[0, -3])], &all_den),
        GfFamily::COdd => (vec![rf(&[0, 3]), rf(&[0, -3])], &even_den),
        GfFamily::CEven => (vec![rf(&[1]), rf(&[1, 0, -18])], &even_den),
    };
    Series::from_fraction(&num, den, order).expect("denominators have constant term 1")
}

/// The displayed exponential generating function of the family, expanded by
/// exact products of exponential, cosh-type, and sinh-type series; every
/// radical cancels, so coefficient k times k! is again the family member.
pub fn egf_expand(family: GfFamily, order: usize) -> Series<RationalFunction> {
    // D = 9x^2 - 1 drives the full-index forms around e^{3xz}; the odd/even
    // forms run around e^{(18x^2-1)z} with D' = 36x^2(9x^2-1).
    let d = rf(&[-1, 0, 9]);
    let d_prime = rf(&[0, 0, -36, 0, 324]);
    let three_x = rf(&[0, 3]);
    let e = rf(&[-1, 0, 18]);
    match family {
        GfFamily::B => Series::exp_linear(&three_x, order).mul(&Series::sinh_like(&d, order)),
        GfFamily::C => Series::exp_linear(&three_x, order).mul(&Series::cosh_like(&d, order)),
        GfFamily::BOdd => {
            // (3x sinh + sqrt(D) cosh)/sqrt(D) with argument 6x sqrt(D) z:
            // the sinh part picks up 3x * 6x = 18x^2.
            let inner = Series::sinh_like(&d_prime, order)
                .scalar_mul(&rf(&[0, 0, 18]))
                .add(&Series::cosh_like(&d_prime, order));
            Series::exp_linear(&e, order).mul(&inner)
        }
        GfFamily::BEven => Series::exp_linear(&e, order)
            .mul(&Series::sinh_like(&d_prime, order))
            .scalar_mul(&rf(&[0, 6])),
        GfFamily::COdd => {
            // 3x cosh + sqrt(D) sinh with the same argument: the sinh part
            // picks up sqrt(D) * 6x sqrt(D) = 6x(9x^2-1).
            let inner = Series::cosh_like(&d_prime, order)
                .scalar_mul(&rf(&[0, 3]))
                .add(&Series::sinh_like(&d_prime, order).scalar_mul(&rf(&[0, -6, 0, 54])));
            Series::exp_linear(&e, order).mul(&inner)
        }
        GfFamily::CEven => Series::exp_linear(&e, order).mul(&Series::cosh_like(&d_prime, order)),
    }
}

/// The step-two subsequence of a recurrence: u_{2n+c} satisfies
/// v_n = (p^2+2q) v_{n-1} - q^2 v_{n-2}.
fn step_two_spec(spec: &RecurrenceSpec, start_odd: bool) -> RecurrenceSpec {
    let p2 = spec.p.mul(&spec.p);
    let two_q = spec.q.scalar_mul(&BigRational::from_i64(2));
    let p_new = p2.add(&two_q);
    let q_new = spec.q.mul(&spec.q).neg();
    let u2 = spec.u2();
    if start_odd {
        let u3 = spec.p.mul(&u2).add(&spec.q.mul(&spec.u1));
        RecurrenceSpec::new(p_new, q_new, spec.u1.clone(), u3)
    } else {
        RecurrenceSpec::new(p_new, q_new, spec.u0.clone(), u2)
    }
}

fn variant_spec(spec: &RecurrenceSpec, variant: SeriesVariant) -> RecurrenceSpec {
    match variant {
        SeriesVariant::All => spec.clone(),
        SeriesVariant::Odd => step_two_spec(spec, true),
        SeriesVariant::Even => step_two_spec(spec, false),
    }
}

/// The generic ordinary generating function of a recurrence, for all, odd,
/// or even indices:
///
///   (u_0 + (u_1 - p u_0) z) / (1 - p z - q z^2)
///
/// applied to the recurrence itself or to its step-two subsequence, which
/// reproduces the odd and even closed forms with denominator
/// 1 - (p^2+2q) z + q^2 z^2.
pub fn ogf_from_recurrence(
    spec: &RecurrenceSpec,
    variant: SeriesVariant,
    order: usize,
) -> Result<Series<RationalFunction>, SeriesError> {
    spec.validate()?;
    let s = variant_spec(spec, variant);
    let u0 = RationalFunction::from_poly(s.u0.clone());
    let u1_shift = RationalFunction::from_poly(s.u1.sub(&s.p.mul(&s.u0)));
    let num = [u0, u1_shift];
    let den = [
        rf(&[1]),
        RationalFunction::from_poly(s.p.neg()),
        RationalFunction::from_poly(s.q.neg()),
    ];
    Series::from_fraction(&num, &den, order)
}

/// The generic exponential generating function of a recurrence, in the
/// radical-free arrangement
///
///   e^{(p/2)z} (u_0 cosh(sqrt(D) z) + (u_1 - (p/2) u_0) sinh(sqrt(D) z)/sqrt(D)),
///
/// with D = (p^2+4q)/4; odd and even indices again via the step-two
/// subsequence.
pub fn egf_from_recurrence(
    spec: &RecurrenceSpec,
    variant: SeriesVariant,
    order: usize,
) -> Result<Series<RationalFunction>, SeriesError> {
    spec.validate()?;
    let s = variant_spec(spec, variant);
    let half = BigRational::new(1.into(), 2.into());
    let half_p = RationalFunction::from_poly(s.p.scalar_mul(&half));
    let quarter = BigRational::new(1.into(), 4.into());
    let disc = s.p.mul(&s.p).add(&s.q.scalar_mul(&BigRational::from_i64(4)));
    let d = RationalFunction::from_poly(disc.scalar_mul(&quarter));
    let u0 = RationalFunction::from_poly(s.u0.clone());
    let sinh_weight = RationalFunction::from_poly(s.u1.sub(&s.p.scalar_mul(&half).mul(&s.u0)));
    let inner = Series::cosh_like(&d, order)
        .scalar_mul(&u0)
        .add(&Series::sinh_like(&d, order).scalar_mul(&sinh_weight));
    Ok(Series::exp_linear(&half_p, order).mul(&inner))
}

/// True iff the two series agree coefficient-by-coefficient through the
/// given order; both must be known at least that far.
pub fn check_functional_equation(
    lhs: &Series<RationalFunction>,
    rhs: &Series<RationalFunction>,
    order: usize,
) -> bool {
    assert!(
        lhs.order() >= order && rhs.order() >= order,
        "series not expanded far enough"
    );
    (0..=order).all(|k| lhs.coeff(k) == rhs.coeff(k))
}
