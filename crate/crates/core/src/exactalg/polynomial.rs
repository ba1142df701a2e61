use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Sparse univariate polynomial in η with rational coefficients.
///
/// Only nonzero coefficients are stored, keyed by power, so two equal
/// polynomials always have identical maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: BTreeMap<u32, Rational>,
}

/// One `(power, coefficient)` pair, the unit of the JSON representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub power: u32,
    pub coeff: Rational,
}

/// Operand for [`poly_arith`]; `Scale` carries a rational in place of a polynomial.
#[derive(Debug, Clone, Copy)]
pub enum PolyOp<'a> {
    Add(&'a RationalPolynomial),
    Sub(&'a RationalPolynomial),
    Mul(&'a RationalPolynomial),
    Scale(&'a Rational),
}

pub fn poly_arith(p: &RationalPolynomial, op: PolyOp<'_>) -> RationalPolynomial {
    match op {
        PolyOp::Add(q) => p + q,
        PolyOp::Sub(q) => p - q,
        PolyOp::Mul(q) => p * q,
        PolyOp::Scale(c) => p.scale(c),
    }
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * η^power`.
    pub fn monomial(c: Rational, power: u32) -> Self {
        let mut p = Self::zero();
        p.accumulate(power, c);
        p
    }

    /// Builds from possibly repeated or zero terms; like powers are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, Rational)>,
    {
        let mut p = Self::zero();
        for (power, c) in terms {
            p.accumulate(power, c);
        }
        p
    }

    fn accumulate(&mut self, power: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&power) {
            Some(existing) => existing + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(power, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, power: u32) -> Rational {
        self.coeffs.get(&power).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Nonzero terms in ascending power order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> + '_ {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn powers(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&(k, _)| k > 0)
                .map(|(k, v)| (k - 1, v * &Rational::from(k as i64))),
        )
    }

    /// Term-wise antiderivative with zero constant of integration.
    pub fn antiderivative(&self) -> Self {
        RationalPolynomial {
            coeffs: self
                .terms()
                .map(|(k, v)| {
                    let divisor = Rational::from(k as i64 + 1);
                    (k + 1, v.checked_div(&divisor).expect("k + 1 > 0"))
                })
                .collect(),
        }
    }

    /// Exact value at `x` by Horner's scheme over the sparse powers.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut prev = None;
        for (k, c) in self.terms().rev() {
            if let Some(p) = prev {
                acc = acc * x.pow(p - k);
            }
            acc = acc + c;
            prev = Some(k);
        }
        match prev {
            Some(lowest) => acc * x.pow(lowest),
            None => acc,
        }
    }

    /// Approximate value at `x`: coefficients are rounded to `f64` first and
    /// Horner's scheme runs in binary floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        let mut prev = None;
        for (k, c) in self.terms().rev() {
            if let Some(p) = prev {
                acc *= x.powi((p - k) as i32);
            }
            acc += c.to_f64();
            prev = Some(k);
        }
        match prev {
            Some(lowest) => acc * x.powi(lowest as i32),
            None => acc,
        }
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

/// Renders ascending powers as e.g. `(5/96)*eta^2 - (1/6000)*eta^5`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match k {
                0 => String::new(),
                1 => "eta".to_string(),
                _ => format!("eta^{k}"),
            };
            match (k, magnitude.is_one(), magnitude.is_integer()) {
                (0, _, _) => write!(f, "{magnitude}")?,
                (_, true, _) => write!(f, "{var}")?,
                (_, false, true) => write!(f, "{magnitude}*{var}")?,
                (_, false, false) => write!(f, "({magnitude})*{var}")?,
            }
        }
        Ok(())
    }
}

impl Add<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.accumulate(k, c.clone());
        }
        out
    }
}

impl Sub<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.accumulate(k, -c);
        }
        out
    }
}

impl Mul<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = RationalPolynomial::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.accumulate(i + j, a * b);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: RationalPolynomial) -> RationalPolynomial {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&RationalPolynomial> for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: &RationalPolynomial) -> RationalPolynomial {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    power: u32,
    num: String,
    den: String,
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(power, c)| TermRepr {
            power,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(reprs.len());
        for t in reprs {
            if !seen.insert(t.power) {
                return Err(de::Error::custom(format!("duplicate power {}", t.power)));
            }
            let c = Rational::from_decimal_parts(&t.num, &t.den).map_err(de::Error::custom)?;
            terms.push((t.power, c));
        }
        Ok(RationalPolynomial::from_terms(terms))
    }
}
