//! Exact scalar fields.
//!
//! Every engine in this crate is generic over [`Scalar`], a thin layer over
//! the `num-traits` numeric tower restricted to exact fields. The workhorse
//! instance is [`Rational`]; [`BigRational`] and `Ratio<i64>` also qualify,
//! the latter only for small inputs where overflow is not a concern.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};

use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, NumAssign, One, Signed, ToPrimitive, Zero};

pub use crate::rational::Rational;

/// An exact field element.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Num
    + NumAssign
    + Signed
    + FromPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Embeds a machine integer.
    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("every field in use contains the integers")
    }

    /// `Some(n)` when the value is an integer that fits in an `i128`.
    fn as_integer(&self) -> Option<i128>;

    /// Numerator and denominator as decimal strings, denominator positive.
    fn parts(&self) -> (String, String);
}

impl Scalar for BigRational {
    fn as_integer(&self) -> Option<i128> {
        if self.denom().is_one() {
            self.numer().to_i128()
        } else {
            None
        }
    }

    fn parts(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

impl Scalar for Rational {
    fn as_integer(&self) -> Option<i128> {
        self.to_i128_exact()
    }

    fn parts(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

impl Scalar for Ratio<i64> {
    fn as_integer(&self) -> Option<i128> {
        if self.denom().is_one() {
            Some(*self.numer() as i128)
        } else {
            None
        }
    }

    fn parts(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

/// Builds the rational `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Renders a scalar as `p` or `p/q`.
pub fn exact_string<S: Scalar>(s: &S) -> String {
    let (n, d) = s.parts();
    if d == "1" {
        n
    } else {
        format!("{n}/{d}")
    }
}

pub(crate) fn is_zero<S: Scalar>(s: &S) -> bool {
    Zero::is_zero(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_normalized() {
        let a = ratio(6, -4);
        assert_eq!(a.parts(), ("-3".to_string(), "2".to_string()));
        let b = a.clone() + ratio(3, 2);
        assert!(b.is_zero());
        assert_eq!(exact_string(&ratio(10, 5)), "2");
        assert_eq!(ratio(7, 1).as_integer(), Some(7));
        assert_eq!(ratio(7, 2).as_integer(), None);
    }

    #[test]
    fn small_ratio_instance() {
        let a = <Ratio<i64> as Scalar>::of(3) / Ratio::new(6, 1);
        assert_eq!(exact_string(&a), "1/2");
    }
}
