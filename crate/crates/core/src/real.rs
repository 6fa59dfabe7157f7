use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Speed of light used throughout, in m/s.
///
/// The rounded value makes a half-wavelength 256-element UCA at 30 GHz come
/// out at `R = 0.01 * 256 / (4 pi)`. Gains and TTD counts of half-wavelength
/// arrays do not depend on it.
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Floating-point scalar the library is generic over.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    /// Converts a count into `Self`.
    #[inline]
    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    /// `c` as `Self`.
    #[inline]
    fn light() -> Self {
        Self::lit(SPEED_OF_LIGHT)
    }

    /// Lossy view as `f64`, for diagnostics.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
