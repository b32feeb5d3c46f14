//! Numeric traits the rest of the crate is generic over.
//!
//! Floating-point algebra (semirings, matrices, transforms) is written
//! against [`Scalar`]; exact geometry (Newton polytopes, tropical curves)
//! against [`Exact`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed, ToPrimitive};

/// IEEE floating-point carrier for extended-real semiring values.
pub trait Scalar: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }
}

impl<T> Scalar for T where T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static {}

/// Ordered exact field used for exponents, hulls and tie lines.
pub trait Exact:
    Clone + Ord + Hash + Num + Signed + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Nearest `f64`; infinite or NaN only if the value is out of range.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in exact type")
    }
}

impl<T> Exact for T where
    T: Clone + Ord + Hash + Num + Signed + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}
