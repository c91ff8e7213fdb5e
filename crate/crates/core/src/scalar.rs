//! Exact Gaussian rationals, the coefficient field `Q(i)`.
//!
//! Every coefficient in the library (Laurent coefficients, automorphism
//! entries, cohomology coordinates) is a [`Scalar`]. Both parts are
//! arbitrary-precision rationals kept in lowest terms with a positive
//! denominator, so equality and zero tests are exact.
//!
//! Text form: `"a"`, `"a/b"`, `"ci"`, `"c/di"` or `"a/b+c/di"` with optional
//! signs. [`Scalar`]'s `Display` output is the canonical form and parses back
//! to the same value.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    /// `num/den + 0i`. Fails when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::real(BigRational::new(num.into(), den.into())))
    }

    /// `(a/b) + (c/d)i` from machine integers.
    pub fn gaussian(re: (i64, i64), im: (i64, i64)) -> Result<Self> {
        if re.1 == 0 || im.1 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            re: BigRational::new(re.0.into(), re.1.into()),
            im: BigRational::new(im.0.into(), im.1.into()),
        })
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`, the field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_err(s: &str) -> Error {
    Error::Parse(format!("invalid scalar {s:?}"))
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty()
        || !digits.bytes().all(|b| b.is_ascii_digit())
        || den.is_empty()
        || !den.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(parse_err(whole));
    }
    let num: BigInt = num.parse().map_err(|_| parse_err(whole))?;
    let den: BigInt = den.parse().map_err(|_| parse_err(whole))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Imaginary coefficient text without the trailing `i`; a bare sign means one.
fn parse_imag(s: &str, whole: &str) -> Result<BigRational> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(s, whole),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(parse_err(s));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Scalar::real(parse_rational(t, s)?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        match split {
            Some(idx) => Ok(Scalar {
                re: parse_rational(&body[..idx], s)?,
                im: parse_imag(&body[idx..], s)?,
            }),
            None => Ok(Scalar { re: BigRational::zero(), im: parse_imag(body, s)? }),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn field_examples() {
        assert_eq!(&s("1/2") + &s("1/2"), Scalar::one());
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        let q = s("1+1i").checked_div(&s("1-1i")).unwrap();
        assert_eq!(q, Scalar::i());
        assert_eq!(&q * &s("1-1i"), s("1+1i"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
        assert!(matches!("1/0".parse::<Scalar>(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn text_forms() {
        assert_eq!(s("3"), s("3/1"));
        assert_eq!(s("-2/3+1/2i").to_string(), "-2/3+1/2i");
        assert_eq!(s("4/6").to_string(), "2/3");
        assert_eq!(s("i"), Scalar::i());
        assert_eq!(s("-i").to_string(), "-1i");
        assert_eq!(s("0+1i").to_string(), "1i");
        assert_eq!(s("1-i").to_string(), "1-1i");
        assert_eq!(s("-1/2i").to_string(), "-1/2i");
        assert_eq!(Scalar::zero().to_string(), "0");
        for bad in ["", "x", "1//2", "1/", "/2", "1+", "1ii", "--1", "1/-2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn big_values_do_not_overflow() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
        assert_eq!(sq.to_string().parse::<Scalar>().unwrap(), sq);
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| Scalar::gaussian((a, b), (c, d)).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Scalar::zero());
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
                prop_assert_eq!(&b * &b.inv().unwrap(), Scalar::one());
            }
        }

        #[test]
        fn text_round_trip(a in arb_scalar()) {
            let text = a.to_string();
            let back: Scalar = text.parse().unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
