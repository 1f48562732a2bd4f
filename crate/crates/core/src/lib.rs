//! Exact construction of balancing and Lucas-balancing polynomials, their
//! Chebyshev, Fibonacci, and Lucas relatives, the ordinary and exponential
//! generating functions that package them, and a verification engine that
//! checks the identities connecting all of these over exact polynomial
//! rings and quadratic extension fields.
//!
//! Layers, bottom up:
//! - [`arith`]: rationals, Gaussian rationals, dense polynomials, reduced
//!   rational functions, quadratic extensions `u + v*sqrt(delta)`.
//! - [`seq`]: the sequence families B, C (balancing / Lucas-balancing),
//!   T, U, V, W (Chebyshev), F, L (Fibonacci / Lucas), with recurrence,
//!   explicit-sum, closed-form, and fast-doubling constructions.
//! - [`series`]: truncated power series; the six ordinary and six
//!   exponential generating-function closed forms.
//! - [`identity`]: the identity catalog and the HOLDS / FAILS engine with
//!   minimal counterexamples.
//! - [`dsl`]: a small text language for stating identities, backed by the
//!   same engine.

pub mod arith;
pub mod dsl;
pub mod identity;
pub mod seq;
pub mod series;
