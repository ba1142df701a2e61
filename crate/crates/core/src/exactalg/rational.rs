use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::ExactAlgError;

/// Arbitrary-precision signed fraction in lowest terms with a positive
/// denominator. Zero is always `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

/// The four field operations accepted by [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`. Division by zero is reported, never panics.
pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational, ExactAlgError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

impl Rational {
    pub fn new(
        numerator: impl Into<BigInt>,
        denominator: impl Into<BigInt>,
    ) -> Result<Self, ExactAlgError> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        // BigRational::new reduces and normalizes the sign onto the numerator.
        Ok(Rational(BigRational::new(numerator.into(), denominator)))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactAlgError> {
        if rhs.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ExactAlgError> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Nearest `f64`; approximate by nature.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // Only reached for magnitudes beyond f64 range.
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    /// Decimal rendering with `places` digits after the point, rounding
    /// ties upward (`floor(x * 10^places + 1/2)`), computed exactly.
    pub fn to_decimal_half_up(&self, places: u32) -> String {
        let scale = num_traits::pow(BigInt::from(10), places as usize);
        let shifted = &self.0 * BigRational::from_integer(scale.clone())
            + BigRational::new(BigInt::one(), BigInt::from(2));
        let scaled = shifted.floor().to_integer();
        let negative = scaled.is_negative();
        let (int_part, frac_part) = scaled.abs().div_rem(&scale);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{:0>width$}",
                frac_part.to_string(),
                width = places as usize
            )
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("invalid integer `{0}`")]
    InvalidInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Parses `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |t: &str| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| ParseRationalError::InvalidInteger(t.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?)
                .map_err(|_| ParseRationalError::ZeroDenominator),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

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

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        Rational::from_decimal_parts(&repr.num, &repr.den).map_err(de::Error::custom)
    }
}

impl Rational {
    /// Builds from the string pair used in serialized documents; the
    /// denominator must be positive.
    pub(crate) fn from_decimal_parts(num: &str, den: &str) -> Result<Rational, String> {
        let num: BigInt = num
            .parse()
            .map_err(|_| format!("invalid numerator `{num}`"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("invalid denominator `{den}`"))?;
        if !den.is_positive() {
            return Err("denominator must be positive".to_string());
        }
        Rational::new(num, den).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn simple_sum() {
        assert_eq!(rat_arith(&r(1, 2), &r(1, 3), RatOp::Add).unwrap(), r(5, 6));
    }

    #[test]
    fn difference_over_common_denominator() {
        let got = rat_arith(&r(625, 1152), &r(859375, 2520000), RatOp::Sub).unwrap();
        assert_eq!(got, r(1625, 8064));
        assert_eq!(got.numer(), &BigInt::from(1625));
        assert_eq!(got.denom(), &BigInt::from(8064));
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat_arith(&r(3, 4), &Rational::zero(), RatOp::Mul).unwrap();
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(r(0, -7).denom(), &BigInt::from(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rat_arith(&r(1, 2), &Rational::zero(), RatOp::Div),
            Err(ExactAlgError::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(ExactAlgError::DivisionByZero));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn negative_denominator_moves_sign() {
        let x = r(3, -6);
        assert_eq!(x.numer(), &BigInt::from(-1));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_literals() {
        assert_eq!("11/2".parse::<Rational>().unwrap(), r(11, 2));
        assert_eq!("5".parse::<Rational>().unwrap(), r(5, 1));
        assert_eq!("-4/8".parse::<Rational>().unwrap(), r(-1, 2));
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(ParseRationalError::ZeroDenominator)
        );
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
    }

    #[test]
    fn half_up_rounding() {
        assert_eq!(r(1348969, 3870720).to_decimal_half_up(3), "0.349");
        assert_eq!(r(1, 2).to_decimal_half_up(0), "1");
        assert_eq!(r(-1, 2).to_decimal_half_up(0), "0");
        assert_eq!(r(-3, 2).to_decimal_half_up(1), "-1.5");
        assert_eq!(r(1, 8).to_decimal_half_up(2), "0.13");
        assert_eq!(r(1, 1000).to_decimal_half_up(3), "0.001");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let json = serde_json::to_string(&r(-4867, 10752000)).unwrap();
        assert_eq!(json, r#"{"num":"-4867","den":"10752000"}"#);
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r(-4867, 10752000));
        assert!(serde_json::from_str::<Rational>(r#"{"num":"1","den":"0"}"#).is_err());
        assert!(serde_json::from_str::<Rational>(r#"{"num":"1","den":"-2"}"#).is_err());
    }

    proptest! {
        #[test]
        fn results_stay_canonical(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = r(a, b);
            let y = r(c, d);
            for op in [RatOp::Add, RatOp::Sub, RatOp::Mul, RatOp::Div] {
                if let Ok(z) = rat_arith(&x, &y, op) {
                    prop_assert!(z.denom().is_positive());
                    prop_assert!(z.numer().gcd(z.denom()).is_one());
                }
            }
        }
    }
}
