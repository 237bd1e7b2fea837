//! Exact rational arithmetic.
//!
//! Every probability in this crate is a [`Rational`]: a reduced fraction of
//! arbitrary-size integers with a positive denominator. No floating point
//! enters any computed value; decimal renderings are presentation-only.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Exact ratio of two counts, the shape every probability takes.
    pub fn ratio(num: usize, den: usize) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numerator(&self) -> BigInt {
        self.0.numer().clone()
    }

    pub fn denominator(&self) -> BigInt {
        self.0.denom().clone()
    }

    /// Numerator as a decimal string (exact).
    pub fn num_str(&self) -> String {
        self.0.numer().to_string()
    }

    /// Denominator as a decimal string (exact, always positive).
    pub fn den_str(&self) -> String {
        self.0.denom().to_string()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn is_probability(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    /// Decimal approximation for display only; never used in comparisons.
    pub fn to_f64_approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.num_str())?;
        s.serialize_field("den", &self.den_str())?;
        s.end()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialOrd<Rational> for &Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
    fn lt(&self, other: &Rational) -> bool {
        self.0 < other.0
    }
    fn le(&self, other: &Rational) -> bool {
        self.0 <= other.0
    }
    fn gt(&self, other: &Rational) -> bool {
        self.0 > other.0
    }
    fn ge(&self, other: &Rational) -> bool {
        self.0 >= other.0
    }
}

impl PartialEq<Rational> for &Rational {
    fn eq(&self, other: &Rational) -> bool {
        self.0 == other.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn always_reduced() {
        let r = Rational::new(4, 8);
        assert_eq!(r.num_str(), "1");
        assert_eq!(r.den_str(), "2");
    }

    #[test]
    fn denominator_positive_after_negative_inputs() {
        let r = Rational::new(3, -6);
        assert_eq!(r.num_str(), "-1");
        assert_eq!(r.den_str(), "2");
    }

    #[test]
    fn display_keeps_unit_denominator() {
        assert_eq!(Rational::one().to_string(), "1/1");
        assert_eq!(Rational::zero().to_string(), "0/1");
    }

    proptest! {
        #[test]
        fn reduced_form_invariant(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = Rational::new(n, d);
            let g = num::integer::gcd(r.numerator().abs(), r.denominator());
            prop_assert_eq!(g, BigInt::from(1));
            prop_assert!(r.denominator() > BigInt::from(0));
        }

        #[test]
        fn add_mul_exact(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            // a/b + c/d == (ad + cb) / bd, exactly
            let lhs = x.clone() + y.clone();
            let rhs = Rational::new(a * d + c * b, b * d);
            prop_assert_eq!(lhs, rhs);
            let lhs = x * y;
            let rhs = Rational::new(a * c, b * d);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ordering_matches_cross_multiplication(a in -500i64..500, b in 1i64..500,
                                                 c in -500i64..500, d in 1i64..500) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x < y, a * d < c * b);
        }
    }
}
