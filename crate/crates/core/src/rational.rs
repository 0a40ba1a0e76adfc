//! Arbitrary-precision rationals.
//!
//! [`Rational`] wraps [`BigRational`], which keeps every value reduced with a
//! positive denominator. The text form is always `"p/q"` (`"3/1"` for
//! integers); parsing additionally accepts integers and decimals such as
//! `"0.25"` or `"1e-12"`, converted exactly through powers of ten.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator("rational literal".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// `p/q` from machine integers. Panics when `q == 0`; meant for literals.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator in Rational::ratio");
        Rational(BigRational::new(p.into(), q.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Exact value of a finite double.
    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Rational)
            .ok_or_else(|| Error::Domain(format!("{x} is not finite")))
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        match self.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational(Pow::pow(&self.0, e))
    }

    /// Clamp at zero from below.
    pub fn positive_part(&self) -> Self {
        if self.is_negative() {
            Rational::zero()
        } else {
            self.clone()
        }
    }

    pub fn midpoint(&self, other: &Rational) -> Self {
        Rational((&self.0 + &other.0) / BigInt::from(2))
    }

    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// Nearest double, computed from the leading bits of numerator and
    /// denominator so huge operands do not overflow.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (mn, en) = leading_bits(self.numer());
        let (md, ed) = leading_bits(self.denom());
        let exp = en - ed;
        let m = mn / md;
        if exp > i32::MAX as i64 / 2 {
            return m.signum() * f64::INFINITY;
        }
        if exp < i32::MIN as i64 / 2 {
            return 0.0;
        }
        scale_pow2(m, exp)
    }

    /// Natural logarithm of a positive rational.
    ///
    /// The binary exponents of numerator and denominator cancel in integer
    /// arithmetic before the mantissas are combined, so the absolute error is a
    /// few ulps of `|ln x|` even when `p` and `q` each have thousands of bits.
    pub fn ln(&self) -> Result<f64> {
        if !self.is_positive() {
            return Err(Error::NonPositive(format!("log of {self}")));
        }
        let (mn, en) = leading_bits(self.numer());
        let (md, ed) = leading_bits(self.denom());
        Ok((mn / md).ln() + (en - ed) as f64 * std::f64::consts::LN_2)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big(self) -> BigRational {
        self.0
    }
}

/// `x = m * 2^e` with `m` in `[1, 2)` (signed), from the top 64 bits of `x`.
fn leading_bits(x: &BigInt) -> (f64, i64) {
    let bits = x.bits() as i64;
    let shift = (bits - 64).max(0);
    let top = (x.abs() >> shift as usize).to_u64().expect("64 leading bits");
    let m = top as f64 / 2f64.powi(((bits - shift) - 1) as i32);
    let m = if x.is_negative() { -m } else { m };
    (m, bits - 1)
}

fn scale_pow2(mut m: f64, mut exp: i64) -> f64 {
    while exp > 1000 {
        m *= 2f64.powi(1000);
        exp -= 1000;
        if m.is_infinite() {
            return m;
        }
    }
    while exp < -1000 {
        m *= 2f64.powi(-1000);
        exp += 1000;
        if m == 0.0 {
            return m;
        }
    }
    m * 2f64.powi(exp as i32)
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty rational".into()));
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            return Rational::new(p, q).map_err(|_| Error::Parse(format!("zero denominator in {s:?}")));
        }
        parse_decimal(s)
    }
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{int_part}{frac_part}");
    let mut numer: BigInt = joined.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return Err(bad());
    }
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * Pow::pow(&ten, scale as u32))
    } else {
        BigRational::new(numer, Pow::pow(&ten, (-scale) as u32))
    };
    Ok(Rational(value))
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
            Float(f64),
        }
        // Floats go through their shortest decimal text.
        let text = match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s,
            Raw::Int(v) => v.to_string(),
            Raw::Float(x) => x.to_string(),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for BigRational; fallible call sites use `recip`.
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
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), Rational::ratio(1, 2));
        assert_eq!("0.25".parse::<Rational>().unwrap(), Rational::ratio(1, 4));
        assert_eq!("-1.5".parse::<Rational>().unwrap(), Rational::ratio(-3, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::integer(7));
        assert_eq!("1e-3".parse::<Rational>().unwrap(), Rational::ratio(1, 1000));
        assert_eq!("2.5E2".parse::<Rational>().unwrap(), Rational::integer(250));
        assert_eq!(".5".parse::<Rational>().unwrap(), Rational::ratio(1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
    }

    #[test]
    fn displays_as_p_over_q() {
        assert_eq!(Rational::ratio(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::integer(3).to_string(), "3/1");
        assert_eq!(serde_json::to_string(&Rational::ratio(1, 3)).unwrap(), "\"1/3\"");
        let back: Rational = serde_json::from_str("\"2/6\"").unwrap();
        let plain: Vec<Rational> = serde_json::from_str("[3, 0.1, -2.5]").unwrap();
        assert_eq!(plain, vec![Rational::integer(3), Rational::ratio(1, 10), Rational::ratio(-5, 2)]);
        assert_eq!(back, Rational::ratio(1, 3));
    }

    #[test]
    fn float_conversion_handles_huge_operands() {
        let big = Rational::integer(BigInt::from(7).pow(2000u32));
        let x = &big / &(&big * Rational::integer(3));
        assert!((x.to_f64() - 1.0 / 3.0).abs() < 1e-16);
        assert!((x.ln().unwrap() + 3f64.ln()).abs() < 1e-15);
        assert!((Rational::ratio(-5, 4).to_f64() + 1.25).abs() == 0.0);
        assert_eq!(Rational::zero().to_f64(), 0.0);
        let tiny = Rational::new(1, BigInt::from(10).pow(400u32)).unwrap();
        assert!((tiny.ln().unwrap() + 400.0 * 10f64.ln()).abs() < 1e-12);
        assert_eq!(tiny.to_f64(), 0.0);
    }

    #[test]
    fn ln_rejects_non_positive() {
        assert!(Rational::zero().ln().is_err());
        assert!(Rational::ratio(-1, 2).ln().is_err());
    }

    #[test]
    fn floor_and_positive_part() {
        assert_eq!(Rational::ratio(7, 2).floor(), BigInt::from(3));
        assert_eq!(Rational::ratio(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(Rational::ratio(-1, 2).positive_part(), Rational::zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    proptest::proptest! {
        #[test]
        fn text_form_round_trips(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = Rational::ratio(p, q);
            let back: Rational = r.to_string().parse().unwrap();
            proptest::prop_assert_eq!(back, r);
        }
    }
}
