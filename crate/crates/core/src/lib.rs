//! Idempotent and tropical algebra toolkit.
//!
//! Everything numeric is generic over a floating-point [`Scalar`] (`f32` or
//! `f64`); polytopes, exponents and tropical curves use an [`Exact`]
//! rational type. The aliases below fix the usual choices.

pub mod dequant;
pub mod error;
pub mod interval;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod semiring;
pub mod transform;

pub use error::{Endpoint, Error, Result};
pub use scalar::{Exact, Scalar};
pub use semiring::{
    add, deformed_add, leq, mul, CustomSemiring, DeformationParam, ExtReal, SemiringRegistry, SemiringSpec,
};

/// Exact rationals with 64-bit numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;

pub type ExtReal64 = ExtReal<f64>;
pub type ExtReal32 = ExtReal<f32>;
pub type Semiring64 = SemiringSpec<f64>;
pub type Matrix64 = linalg::SemiringMatrix<f64>;
pub type Matrix32 = linalg::SemiringMatrix<f32>;
pub type Graph64 = linalg::Graph<f64>;
pub type Interval64 = interval::IntervalValue<f64>;
pub type IntervalMatrix64 = interval::IntervalMatrix<f64>;
pub type IntervalGraph64 = interval::IntervalGraph<f64>;
pub type Polynomial = dequant::GenPolynomial<f64, Rational>;
pub type RationalPolytope = dequant::Polytope<Rational>;
pub type RationalCurve = dequant::TropicalCurve<Rational>;
pub type SampledFunction64 = transform::SampledFunction<f64>;
