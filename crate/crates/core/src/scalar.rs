//! Scalar abstraction for the numeric kernels.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the core math is generic over (`f32` or `f64`).
///
/// Random sampling and statistics are always performed in `f64` and converted,
/// so seeded runs visit the same random stream regardless of the scalar type.
pub trait Scalar:
    Float
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Display
    + LowerExp
    + Debug
    + Default
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Sum
        + Display
        + LowerExp
        + Debug
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant representable in scalar type")
}

/// Converts a scalar into `f64` for statistics and serialization.
#[inline]
pub fn to_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().expect("scalar representable as f64")
}

/// Comparison tolerance that respects the scalar's precision: the given `f64`
/// bound, widened for low-precision types.
#[inline]
pub fn tolerance<T: Scalar>(bound: f64) -> T {
    let eps = to_f64(T::epsilon());
    real(bound.max(eps * 64.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_round_trip() {
        let x: f64 = real::<f64>(0.85);
        assert_eq!(x, 0.85);
        let y: f32 = real::<f32>(0.5);
        assert_eq!(to_f64(y), 0.5);
    }

    #[test]
    fn tolerance_widens_for_f32() {
        assert_eq!(tolerance::<f64>(1e-12), 1e-12);
        assert!(tolerance::<f32>(1e-12) > 1e-7);
    }
}
