//! Scalar abstraction shared by every module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the analysis is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Relative tolerance used for exact-zero decisions, `max(1e-12, 64 eps)`.
    #[inline]
    fn decision_tol() -> Self {
        Self::lit(1e-12).max(Self::lit(64.0) * Self::epsilon())
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Inverse cotangent with values in `(0, pi)`.
#[inline]
pub fn arccot<T: Scalar>(y: T) -> T {
    T::one().atan2(y)
}

/// Inverse hyperbolic cotangent, defined for `|y| > 1`.
#[inline]
pub fn arcoth<T: Scalar>(y: T) -> T {
    y.recip().atanh()
}
