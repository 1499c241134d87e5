//! Floating-point scalar abstraction for the geometric code paths.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + std::fmt::Debug + Send + Sync + 'static {
    /// Lift an `f64` constant into the scalar type.
    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite constant representable in scalar type")
    }

    #[inline]
    fn half(self) -> Self {
        self / (Self::one() + Self::one())
    }
}

impl Real for f32 {}
impl Real for f64 {}
