//! Exact rational scalars.
//!
//! Every coordinate in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating-point fallback anywhere; solvability verdicts depend on exact
//! equality of folded positions, so rounding is never acceptable.
//!
//! On the wire a rational is always the string `"p/q"` (or `"p"` when the
//! denominator is 1), never a JSON number.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact fraction of arbitrary-precision integers.
///
/// Backed by [`num_rational::BigRational`], which maintains the lowest-terms
/// and positive-denominator invariants on every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}: expected \"p\" or \"p/q\" with integer p and positive integer q")]
    Malformed(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "rational denominator must be nonzero");
        Rational(BigRational::new(numer, denom))
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Exact midpoint of two rationals.
    pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
        Rational((&a.0 + &b.0) / BigRational::from_integer(BigInt::from(2)))
    }

    pub fn min(a: Rational, b: Rational) -> Rational {
        if a <= b {
            a
        } else {
            b
        }
    }

    pub fn max(a: Rational, b: Rational) -> Rational {
        if a >= b {
            a
        } else {
            b
        }
    }

    /// Truncated decimal expansion with up to `digits` fractional digits,
    /// computed in integer arithmetic. Used only for SVG presentation;
    /// verdict logic never touches this.
    pub fn to_decimal(&self, digits: u32) -> String {
        let neg = self.is_negative();
        let abs = self.abs();
        let scale = BigInt::from(10u32).pow(digits);
        // floor(|r| * 10^digits)
        let scaled = (abs.numer() * &scale) / abs.denom();
        let whole = &scaled / &scale;
        let frac = &scaled % &scale;
        let mut out = String::new();
        if neg && (!whole.is_zero() || !frac.is_zero()) {
            out.push('-');
        }
        out.push_str(&whole.to_string());
        if !frac.is_zero() {
            let mut frac_str = format!("{:0width$}", frac, width = digits as usize);
            while frac_str.ends_with('0') {
                frac_str.pop();
            }
            out.push('.');
            out.push_str(&frac_str);
        }
        out
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
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"p"` or `"p/q"` where `p` is a (possibly negative) integer
    /// and `q` a positive integer. No whitespace, decimals, or signs on the
    /// denominator. Non-reduced input is normalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let malformed = || ParseRationalError::Malformed(s.to_string());
        let (numer_str, denom_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer = parse_int(numer_str, true).ok_or_else(malformed)?;
        let denom = match denom_str {
            Some(d) => {
                let d = parse_int(d, false).ok_or_else(malformed)?;
                if d.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator(s.to_string()));
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

fn parse_int(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = if allow_sign {
        s.strip_prefix('-').unwrap_or(s)
    } else {
        s
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<BigInt>().ok()
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / &rhs.0)
    }
}

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

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for rational literals: `rat!(3)`, `rat!(-1/2)`.
#[macro_export]
macro_rules! rat {
    (- $n:literal / $d:literal) => {
        $crate::rational::Rational::new(-$n, $d)
    };
    (- $n:literal) => {
        $crate::rational::Rational::new(-$n, 1)
    };
    ($n:literal / $d:literal) => {
        $crate::rational::Rational::new($n, $d)
    };
    ($n:literal) => {
        $crate::rational::Rational::new($n, 1)
    };
}
