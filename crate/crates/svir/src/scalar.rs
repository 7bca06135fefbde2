//! Scalar abstraction for the approximate (floating point) layer.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt;

/// Floating-point scalar for all approximate linear algebra.
///
/// Implemented for `f32` and `f64`. Exact quantities (central charges,
/// lowest weights) are kept in [`crate::rational::Rational`] instead of
/// this trait.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 not representable in scalar type")
    }

    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize not representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        num_traits::cast::<Self, f64>(self).unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
