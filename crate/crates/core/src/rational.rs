//! Arbitrary-precision rational scalars.
//!
//! [`Rational`] is the universal scalar of the crate: every Bernoulli number,
//! polynomial coefficient and inner product is one. Values are always stored
//! reduced with a positive denominator, so structural equality coincides with
//! mathematical equality and canonical text output needs no extra work.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number num/den with gcd(|num|, den) = 1 and den >= 1.
///
/// Zero is represented as 0/1. All arithmetic re-normalizes eagerly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds num/den in canonical form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
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

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        Rational(BigRational::new_raw(
            self.numer().pow(exp),
            self.denom().pow(exp),
        ))
    }

    /// The value truncated toward zero to `digits` fractional digits,
    /// rendered in plain decimal notation (no exponent). With `digits == 0`
    /// only the integer part is produced, without a decimal point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let ten = BigInt::from(10u32);
        let scaled: BigInt = self.numer().abs() * ten.pow(digits as u32) / self.denom();
        let sign = if self.is_negative() && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        let mut body = scaled.to_string();
        if digits == 0 {
            return format!("{sign}{body}");
        }
        if body.len() <= digits {
            body = format!("{:0>width$}", body, width = digits + 1);
        }
        let split = body.len() - digits;
        format!("{sign}{}.{}", &body[..split], &body[split..])
    }

    /// Parses a plain decimal string ("3.14159", "-0.0833", "14") back into
    /// the exact rational it denotes.
    pub fn from_decimal(s: &str) -> Result<Self, String> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        let joined = format!("{int_part}{frac_part}");
        if joined.is_empty() || !joined.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed decimal {s:?}"));
        }
        let num: BigInt = joined.parse().expect("checked digits");
        let num = if negative { -num } else { num };
        Ok(Rational::new(
            num,
            BigInt::from(10u32).pow(frac_part.len() as u32),
        ))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

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

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    /// Canonical text form: "num/den", with "/den" omitted when den = 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rational::new(num, den))
    }
}
