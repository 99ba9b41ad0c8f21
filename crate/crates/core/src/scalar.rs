use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Exact field of coefficients for Chow-ring and polynomial arithmetic.
///
/// Values must be stored in canonical form so that `==` is structural
/// equality. Every implementor is an exact rational type; there is no
/// floating-point implementation.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// The value as an `i64` if it is an integer that fits.
    fn to_int(&self) -> Option<i64>;

    fn is_integral(&self) -> bool;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    /// -1, 0 or +1.
    fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(I::from_i64(n).expect("i64 fits the integer type"))
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}
