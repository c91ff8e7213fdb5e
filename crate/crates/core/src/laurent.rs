//! Finite Laurent polynomials `sum c_n x^n`, `n` in `Z`, over [`Scalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse map from exponent to coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Scalar::one(), 0)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &c);
        p
    }

    /// `x^exp` with coefficient one.
    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(Scalar::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative powers occur (holomorphic at `x = 0`).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, v)| (e + shift, v.clone())).collect() }
    }

    /// `d/dx`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms.iter().filter(|(&e, _)| e != 0).map(|(&e, c)| (e - 1, c * &Scalar::from_int(e))),
        )
    }

    /// Substitute `x -> 1/x`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, v)| (-e, v.clone())).collect() }
    }

    /// Keep only the terms whose exponent satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(i64) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(&e, _)| keep(e)).map(|(&e, c)| (e, c.clone())).collect() }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

/// Polynomial text form: terms in ascending exponent, e.g. `1-x+1/2*x^2`,
/// `(1+2i)*x^-1`. Coefficients with an imaginary part are parenthesized.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = if c.is_real() && c.re() < &num_rational::BigRational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if negative {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            match e {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn poly_err(s: &str) -> Error {
    Error::Parse(format!("invalid polynomial {s:?}"))
}

fn parse_term(term: &str, whole: &str) -> Result<(i64, Scalar)> {
    let (negative, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    let (coeff_text, power_text) = match body.find('x') {
        Some(idx) => (&body[..idx], Some(&body[idx + 1..])),
        None => (body, None),
    };
    let coeff_text = match coeff_text.strip_suffix('*') {
        Some("") => return Err(poly_err(whole)),
        Some(t) => t,
        None => coeff_text,
    };
    let coeff = if coeff_text.is_empty() {
        if power_text.is_none() {
            return Err(poly_err(whole));
        }
        Scalar::one()
    } else if let Some(inner) = coeff_text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        inner.parse::<Scalar>()?
    } else {
        if coeff_text.contains(['+', '-', '(', ')']) {
            return Err(poly_err(whole));
        }
        coeff_text.parse::<Scalar>()?
    };
    let exp = match power_text {
        None => 0,
        Some("") => 1,
        Some(p) => p
            .strip_prefix('^')
            .and_then(|n| n.parse::<i64>().ok())
            .ok_or_else(|| poly_err(whole))?,
    };
    Ok((exp, if negative { -coeff } else { coeff }))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(poly_err(s));
        }
        // Split at top-level signs that are not part of an exponent.
        let bytes = text.as_bytes();
        let mut depth = 0i32;
        let mut start = 0;
        let mut pieces = Vec::new();
        for (idx, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && idx > start && bytes[idx - 1] != b'^' => {
                    pieces.push(&text[start..idx]);
                    start = idx;
                }
                _ => {}
            }
            if depth < 0 {
                return Err(poly_err(s));
            }
        }
        if depth != 0 {
            return Err(poly_err(s));
        }
        pieces.push(&text[start..]);
        let mut p = LaurentPoly::zero();
        for piece in pieces {
            let (e, c) = parse_term(piece, s)?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}
