//! Scalar abstraction shared by every numerical routine.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the schemes are generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    fn lit(value: f64) -> Self;

    /// Lossy view as `f64`, used for error payloads and serialization.
    fn as_f64(self) -> f64;

    /// Relative tolerance used when comparing accumulated times and CFL
    /// products against their nominal values.
    fn time_tolerance() -> Self {
        Self::lit(1e-12).max(Self::epsilon() * Self::lit(8.0))
    }
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            #[inline]
            fn lit(value: f64) -> Self {
                value as $t
            }

            #[inline]
            fn as_f64(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

/// Sign of the advection direction used to orient stencils.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wind {
    /// Information travels left to right (`a >= 0`); upwind neighbour is `j - 1`.
    Positive,
    /// Information travels right to left (`a < 0`); upwind neighbour is `j + 1`.
    Negative,
}

impl Wind {
    /// Wind of a speed. Zero counts as positive.
    pub fn of<T: Real>(speed: T) -> Self {
        if speed >= T::zero() {
            Wind::Positive
        } else {
            Wind::Negative
        }
    }
}
