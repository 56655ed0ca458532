//! Arbitrary-precision rational numbers.
//!
//! [`Rational`] wraps [`num_rational::BigRational`], which keeps every value in
//! lowest terms with a positive denominator. Division is only available through
//! [`Rational::checked_div`] and [`Rational::recip`], so a zero divisor is always
//! an [`Error::DivisionByZero`] and never a value.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Small-integer constructor for literals such as `1/2`.
    ///
    /// Panics if `denom` is zero.
    pub fn frac(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "Rational::frac with zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// `Some(m)` when the value is the nonpositive integer `-m`.
    pub fn as_nonpositive_integer(&self) -> Option<u64> {
        match self.to_integer() {
            Some(v) if !v.is_positive() => (-v).to_u64(),
            _ => None,
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        self - &Rational::from(self.floor())
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents of zero are an error.
    pub fn pow(&self, exp: i64) -> Result<Rational> {
        let mag = u32::try_from(exp.unsigned_abs()).expect("exponent out of range");
        let p = Rational(num_traits::pow::Pow::pow(&self.0, mag));
        if exp < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational(BigRational::from_integer(BigInt::from(v)))
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize);

macro_rules! binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $assign_tr<Rational> for Rational {
            fn $assign(&mut self, rhs: Rational) {
                self.0.$assign(rhs.0);
            }
        }
        impl<'a> $assign_tr<&'a Rational> for Rational {
            fn $assign(&mut self, rhs: &'a Rational) {
                self.0.$assign(&rhs.0);
            }
        }
    };
}
binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

/// Parses `p`, `-p`, `+p` or `p/q` with decimal digits only. Decimal points,
/// exponents and signed denominators are rejected.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(literal: &str) -> Result<Self> {
        let err = |reason| Error::ParseRational {
            literal: literal.to_string(),
            reason,
        };
        let s = literal.trim();
        if s.is_empty() {
            return Err(err("empty literal"));
        }
        if s.contains(['.', 'e', 'E']) {
            return Err(err("decimal literals are not exact; write p/q"));
        }
        let (negative, body) = match s.as_bytes()[0] {
            b'-' => (true, &s[1..]),
            b'+' => (false, &s[1..]),
            _ => (false, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let mut num = parse_digits(num).ok_or_else(|| err("numerator is not a decimal integer"))?;
        let den = match den {
            Some(d) => {
                parse_digits(d).ok_or_else(|| err("denominator is not a decimal integer"))?
            }
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        if negative {
            num = -num;
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of rational literals, e.g. `1/2,-1/3,2`.
pub fn parse_rational_list(list: &str) -> Result<Vec<Rational>> {
    list.split(',').map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(
            Rational::one().checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Rational::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(Rational::zero().pow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_accepts_exact_forms() {
        assert_eq!("1/2".parse::<Rational>().unwrap(), Rational::frac(1, 2));
        assert_eq!(" -7/5 ".parse::<Rational>().unwrap(), Rational::frac(-7, 5));
        assert_eq!("+3".parse::<Rational>().unwrap(), Rational::from(3));
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::frac(2, 3));
    }

    #[test]
    fn parse_rejects_inexact_and_malformed() {
        for bad in [
            "0.5", "1e3", "", "1/0", "1/-2", "--1", "a/b", "1/", "/2", "1/2/3", "½",
        ] {
            assert!(
                bad.parse::<Rational>().is_err(),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn fract_and_floor() {
        let x = Rational::frac(-7, 3);
        assert_eq!(x.floor(), BigInt::from(-3));
        assert_eq!(x.fract(), Rational::frac(2, 3));
        assert_eq!(Rational::from(-4).as_nonpositive_integer(), Some(4));
        assert_eq!(Rational::from(0).as_nonpositive_integer(), Some(0));
        assert_eq!(Rational::from(1).as_nonpositive_integer(), None);
    }

    #[test]
    fn list_parsing() {
        let v = parse_rational_list("1/2,1/3,-2").unwrap();
        assert_eq!(
            v,
            vec![
                Rational::frac(1, 2),
                Rational::frac(1, 3),
                Rational::from(-2)
            ]
        );
        assert!(parse_rational_list("1/2,0.25").is_err());
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
            let r = Rational::new(n, d).unwrap();
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }

        #[test]
        fn field_laws(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x.clone());
            }
        }
    }
}
