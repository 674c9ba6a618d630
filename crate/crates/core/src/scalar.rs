use std::fmt::{Debug, Display};
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the numeric kernel is generic over.
///
/// Everything spectral (eigensolver, bound formulas, cubic roots) works for
/// any type satisfying this bound; the crate root exports `f64` aliases,
/// which is what the verification pipeline and the CLI use.
pub trait Scalar:
    Float + FromPrimitive + AddAssign + SubAssign + MulAssign + Debug + Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from a machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in the scalar type")
    }

    /// Exact integer ratio evaluated with a single rounding at the end.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
