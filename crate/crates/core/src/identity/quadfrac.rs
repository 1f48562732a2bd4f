//! Unreduced fractions over a quadratic extension of the rational function
//! field, with denominators constrained to products of a fixed atom basis.
//!
//! The binomial-sum identities evaluate terms carrying denominators such as
//! `(6x)^k (9x^2-1)^k`. Reduced rational-function arithmetic would run a
//! polynomial gcd at every multiplication and addition; those gcds are pure
//! overhead here, because every denominator that can occur is a monomial in
//! a handful of fixed atoms. `QuadFrac` therefore keeps the numerator pair
//! `a + b*sqrt(delta)` and the atom exponents separately: addition scales
//! numerators by small atom powers, multiplication adds exponents, and the
//! zero test is a numerator check. Reduction happens once, on display.

use crate::arith::{BigRational, DensePolynomial, QuadExt, RationalFunction, Ring};
use std::fmt;

type QPoly = DensePolynomial<BigRational>;

/// The fixed discriminant and denominator atoms of one quadratic fraction
/// context. Shared by reference between all values of that context.
#[derive(Debug)]
pub struct QuadBasis {
    delta: QPoly,
    atoms: Vec<QPoly>,
}

impl QuadBasis {
    /// A context with discriminant `delta` and denominator atoms `atoms`.
    /// Atoms must be nonzero; they are treated as formal symbols, so they
    /// should be pairwise coprime for displays to stay reduced.
    pub fn new(delta: QPoly, atoms: Vec<QPoly>) -> Self {
        assert!(!delta.is_zero(), "discriminant must be nonzero");
        assert!(atoms.iter().all(|a| !a.is_zero()), "atoms must be nonzero");
        QuadBasis { delta, atoms }
    }

    pub fn delta(&self) -> &QPoly {
        &self.delta
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }
}

/// `(a + b*sqrt(delta)) / prod atoms[i]^den[i]`, never reduced.
#[derive(Debug, Clone)]
pub struct QuadFrac {
    basis: &'static QuadBasis,
    a: QPoly,
    b: QPoly,
    den: Vec<u32>,
}

impl QuadFrac {
    pub fn new(basis: &'static QuadBasis, a: QPoly, b: QPoly, den: Vec<u32>) -> Self {
        assert_eq!(den.len(), basis.atoms.len(), "denominator exponent count");
        QuadFrac { basis, a, b, den }
    }

    pub fn from_poly(basis: &'static QuadBasis, a: QPoly) -> Self {
        let den = vec![0; basis.atoms.len()];
        QuadFrac { basis, a, b: QPoly::zero(), den }
    }

    pub fn from_i64(basis: &'static QuadBasis, n: i64) -> Self {
        Self::from_poly(basis, QPoly::constant(BigRational::from_i64(n)))
    }

    pub fn zero(basis: &'static QuadBasis) -> Self {
        Self::from_poly(basis, QPoly::zero())
    }

    pub fn one(basis: &'static QuadBasis) -> Self {
        Self::from_poly(basis, QPoly::one())
    }

    pub fn sqrt_delta(basis: &'static QuadBasis) -> Self {
        let den = vec![0; basis.atoms.len()];
        QuadFrac { basis, a: QPoly::zero(), b: QPoly::one(), den }
    }

    pub fn basis(&self) -> &'static QuadBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadFrac { basis: self.basis, a: self.a.clone(), b: self.b.neg(), den: self.den.clone() }
    }

    pub fn neg(&self) -> Self {
        QuadFrac { basis: self.basis, a: self.a.neg(), b: self.b.neg(), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        QuadFrac {
            basis: self.basis,
            a: self.a.mul(p),
            b: self.b.mul(p),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(std::ptr::eq(self.basis, rhs.basis));
        let delta = &self.basis.delta;
        let a = self.a.mul(&rhs.a).add(&self.b.mul(&rhs.b).mul(delta));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        let den = self.den.iter().zip(&rhs.den).map(|(x, y)| x + y).collect();
        QuadFrac { basis: self.basis, a, b, den }
    }

    /// Scale factor that lifts a numerator from `self.den` to `target`.
    fn lift(&self, target: &[u32]) -> QPoly {
        let mut scale = QPoly::one();
        for (i, atom) in self.basis.atoms.iter().enumerate() {
            let diff = target[i] - self.den[i];
            if diff > 0 {
                scale = scale.mul(&atom.pow_u(u64::from(diff)));
            }
        }
        scale
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert!(std::ptr::eq(self.basis, rhs.basis));
        let den: Vec<u32> =
            self.den.iter().zip(&rhs.den).map(|(x, y)| *x.max(y)).collect();
        let ls = self.lift(&den);
        let rs = rhs.lift(&den);
        QuadFrac {
            basis: self.basis,
            a: self.a.mul(&ls).add(&rhs.a.mul(&rs)),
            b: self.b.mul(&ls).add(&rhs.b.mul(&rs)),
            den,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn pow_u(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut k = k;
        let mut acc = Self::one(self.basis);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn denominator_poly(&self) -> QPoly {
        let mut den = QPoly::one();
        for (atom, pow) in self.basis.atoms.iter().zip(&self.den) {
            if *pow > 0 {
                den = den.mul(&atom.pow_u(u64::from(*pow)));
            }
        }
        den
    }

    /// One-shot reduction into the ordinary quadratic fraction-field form.
    pub fn reduced(&self) -> QuadExt<RationalFunction> {
        let den = self.denominator_poly();
        let u = RationalFunction::new(self.a.clone(), den.clone())
            .expect("atom denominators are nonzero");
        let v = RationalFunction::new(self.b.clone(), den)
            .expect("atom denominators are nonzero");
        QuadExt::new(u, v, RationalFunction::from_poly(self.basis.delta.clone()))
    }
}

impl fmt::Display for QuadFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reduced())
    }
}
