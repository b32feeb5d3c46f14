//! Dequantization of generalized polynomials, Newton polytopes with the
//! Minkowski semiring operations, tropical curves and amoebas in the plane.

mod amoeba;
mod curve;
mod poly;
mod polytope;

pub use amoeba::{amoeba_line_point, amoeba_line_sample, LOG_RADIUS};
pub use curve::{tropical_curve_2d, CurvePiece, TropicalCurve};
pub use poly::{dequantize_limit, eval_dequantized, newton_set, newton_set_exact, GenPolynomial, SublinearForm, Term};
pub use polytope::{polytope_semiring_ops, Polytope, SUPPORT_DIRECTIONS};
