//! Arbitrary-precision rationals with an inline fast path.
//!
//! Values whose reduced numerator and denominator fit in an `i64` are kept
//! inline and combined with `i128` intermediates; anything larger is
//! promoted to a [`BigRational`] and demoted again as soon as it fits.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{
    Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if let (Ok(x), Ok(y)) = (u64::try_from(a), u64::try_from(b)) {
        return gcd_u64(x, y) as u128;
    }
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// The integer `v`.
    pub fn from_integer(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }

    /// `num / den` in lowest terms. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128_pair(num as i128, den as i128)
    }

    fn from_i128_pair(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Rational(Repr::Small(0, 1));
        }
        if den == 1 {
            if let Ok(n) = i64::try_from(num) {
                return Rational(Repr::Small(n, 1));
            }
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    /// Converts a normalized big rational, demoting it when it fits.
    pub fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// The value as an `i128`, when it is an integer in range.
    pub fn to_i128_exact(&self) -> Option<i128> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n as i128),
            Repr::Small(..) => None,
            Repr::Big(b) if b.is_integer() => b.numer().to_i128(),
            Repr::Big(_) => None,
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if *b == 1 && *d == 1 {
                if let Some(v) = a.checked_add(*c) {
                    return Rational(Repr::Small(v, 1));
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128_pair(a + c, b);
            }
            // |a·d|, |c·b| < 2^126, so the sum cannot overflow
            return Self::from_i128_pair(a * d + c * b, b * d);
        }
        Self::from_big(self.to_big() + o.to_big())
    }

    fn sub_ref(&self, o: &Self) -> Self {
        if let (Repr::Small(a, 1), Repr::Small(c, 1)) = (&self.0, &o.0) {
            if let Some(v) = a.checked_sub(*c) {
                return Rational(Repr::Small(v, 1));
            }
        }
        self.add_ref(&o.neg_ref())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if *b == 1 && *d == 1 {
                if let Some(v) = a.checked_mul(*c) {
                    return Rational(Repr::Small(v, 1));
                }
            }
            return Self::from_i128_pair(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Self::from_big(self.to_big() * o.to_big())
    }

    fn div_ref(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            return Self::from_i128_pair(*a as i128 * *d as i128, *b as i128 * *c as i128);
        }
        Self::from_big(self.to_big() / o.to_big())
    }

    fn rem_ref(&self, o: &Self) -> Self {
        Self::from_big(self.to_big() % o.to_big())
    }

    fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) if *n != i64::MIN => Rational(Repr::Small(-n, *d)),
            _ => Self::from_big(-self.to_big()),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, o: &Self) -> bool {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            // normalized: a big value never fits the inline form
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => (0u8, n, d).hash(h),
            Repr::Big(b) => (1u8, b).hash(h),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rational {
    fn cmp(&self, o: &Self) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&o.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $imp:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                self.$imp(&o)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &'a Rational) -> Rational {
                self.$imp(o)
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, o: &'a Rational) -> Rational {
                self.$imp(o)
            }
        }
        impl $atr for Rational {
            fn $am(&mut self, o: Rational) {
                *self = self.$imp(&o);
            }
        }
        impl<'a> $atr<&'a Rational> for Rational {
            fn $am(&mut self, o: &'a Rational) {
                *self = self.$imp(o);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, add_ref);
binop!(Sub, sub, SubAssign, sub_assign, sub_ref);
binop!(Mul, mul, MulAssign, mul_assign, mul_ref);
binop!(Div, div, DivAssign, div_assign, div_ref);
binop!(Rem, rem, RemAssign, rem_assign, rem_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
}

impl Num for Rational {
    type FromStrRadixErr = <BigRational as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix).map(Self::from_big)
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg_ref()
        } else {
            self.clone()
        }
    }
    fn abs_sub(&self, o: &Self) -> Self {
        if self <= o {
            Self::zero()
        } else {
            self.sub_ref(o)
        }
    }
    fn signum(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else if self.is_negative() {
            -Self::one()
        } else {
            Self::one()
        }
    }
    fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }
    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }
}

impl FromPrimitive for Rational {
    fn from_i64(v: i64) -> Option<Self> {
        Some(Self::from_integer(v))
    }
    fn from_u64(v: u64) -> Option<Self> {
        Some(Self::from_i128_pair(v as i128, 1))
    }
    fn from_i128(v: i128) -> Option<Self> {
        Some(match i64::try_from(v) {
            Ok(v) => Self::from_integer(v),
            Err(_) => Self::from_big(BigRational::from_integer(BigInt::from(v))),
        })
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Self::from_big(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_arithmetic_normalizes() {
        let a = Rational::new(6, -4);
        assert_eq!(a.to_string(), "-3/2");
        assert!((a.clone() + Rational::new(3, 2)).is_zero());
        assert_eq!(a.clone() * a.clone(), Rational::new(9, 4));
        assert_eq!(
            Rational::new(1, 3) - Rational::new(1, 2),
            Rational::new(-1, 6)
        );
        assert_eq!(
            Rational::new(2, 3) / Rational::new(4, 9),
            Rational::new(3, 2)
        );
    }

    #[test]
    fn promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX) * Rational::from_integer(4);
        assert_eq!(
            big.to_big(),
            BigRational::from_integer(BigInt::from(i64::MAX) * 4)
        );
        let back = big / Rational::from_integer(4);
        assert_eq!(back, Rational::from_integer(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let tiny = Rational::new(1, i64::MAX) * Rational::new(1, 3);
        assert_eq!(tiny * Rational::from_integer(3), Rational::new(1, i64::MAX));
    }

    #[test]
    fn agrees_with_big_rationals() {
        let vals = [
            (1, 2),
            (-7, 3),
            (i64::MAX, 5),
            (i64::MIN + 1, 7),
            (3, i64::MAX),
        ];
        for &(a, b) in &vals {
            for &(c, d) in &vals {
                let (x, y) = (Rational::new(a, b), Rational::new(c, d));
                let (bx, by) = (x.to_big(), y.to_big());
                assert_eq!((x.clone() + &y).to_big(), &bx + &by);
                assert_eq!((x.clone() - &y).to_big(), &bx - &by);
                assert_eq!((x.clone() * &y).to_big(), &bx * &by);
                assert_eq!((x.clone() / &y).to_big(), &bx / &by);
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }
}
