use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Word;
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// An element `sum_w f_w(x) xi_w` of the Grassmann algebra with Laurent
/// coefficients. Words are sorted; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SuperFunction {
    parts: BTreeMap<Word, LaurentPoly>,
}

impl SuperFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one(), Word::empty())
    }

    pub fn from_poly(p: LaurentPoly, w: Word) -> Self {
        let mut f = Self::zero();
        f.add_poly(w, &p);
        f
    }

    /// `c x^exp xi_w`.
    pub fn monomial(c: Scalar, exp: i64, w: Word) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, exp), w)
    }

    /// The even coordinate raised to `exp`.
    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(Scalar::one(), exp, Word::empty())
    }

    /// The odd generator `xi_i`.
    pub fn generator(i: u8) -> Self {
        Self::monomial(Scalar::one(), 0, Word::generator(i))
    }

    pub fn add_poly(&mut self, w: Word, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.parts.entry(w).or_default();
        *slot = &*slot + p;
        if slot.is_zero() {
            self.parts.remove(&w);
        }
    }

    pub fn add_term(&mut self, w: Word, exp: i64, c: &Scalar) {
        self.add_poly(w, &LaurentPoly::monomial(c.clone(), exp));
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn coeff(&self, w: Word) -> LaurentPoly {
        self.parts.get(&w).cloned().unwrap_or_default()
    }

    pub fn parts(&self) -> impl Iterator<Item = (Word, &LaurentPoly)> + '_ {
        self.parts.iter().map(|(&w, p)| (w, p))
    }

    /// `(word, exponent, coefficient)` triples in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, i64, &Scalar)> + '_ {
        self.parts.iter().flat_map(|(&w, p)| p.terms().map(move |(e, c)| (w, e, c)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { parts: self.parts.iter().map(|(&w, p)| (w, p.scale(c))).collect() }
    }

    pub fn mul_poly(&self, q: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&w, p) in &self.parts {
            out.add_poly(w, &(p * q));
        }
        out
    }

    /// `d/dx`, applied coefficientwise.
    pub fn d_dx(&self) -> Self {
        let mut out = Self::zero();
        for (&w, p) in &self.parts {
            out.add_poly(w, &p.derivative());
        }
        out
    }

    /// Left derivative `d/dxi_i`.
    pub fn d_dxi(&self, i: u8) -> Self {
        let mut out = Self::zero();
        for (&w, p) in &self.parts {
            if let Some((sign, rest)) = w.left_derivative(i) {
                let p = if sign < 0 { -p } else { p.clone() };
                out.add_poly(rest, &p);
            }
        }
        out
    }

    /// `Some(parity)` when every stored word has the same length mod 2.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.parts.keys().map(|w| w.is_odd());
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.parts.values().filter_map(LaurentPoly::min_exp).min()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.parts.values().filter_map(LaurentPoly::max_exp).max()
    }
}

impl Add for &SuperFunction {
    type Output = SuperFunction;
    fn add(self, rhs: &SuperFunction) -> SuperFunction {
        let mut out = self.clone();
        for (&w, p) in &rhs.parts {
            out.add_poly(w, p);
        }
        out
    }
}

impl Sub for &SuperFunction {
    type Output = SuperFunction;
    fn sub(self, rhs: &SuperFunction) -> SuperFunction {
        let mut out = self.clone();
        for (&w, p) in &rhs.parts {
            out.add_poly(w, &-p);
        }
        out
    }
}

impl Neg for &SuperFunction {
    type Output = SuperFunction;
    fn neg(self) -> SuperFunction {
        SuperFunction { parts: self.parts.iter().map(|(&w, p)| (w, -p)).collect() }
    }
}

/// Exterior product; the even coordinate commutes with everything.
impl Mul for &SuperFunction {
    type Output = SuperFunction;
    fn mul(self, rhs: &SuperFunction) -> SuperFunction {
        let mut out = SuperFunction::zero();
        for (&a, p) in &self.parts {
            for (&b, q) in &rhs.parts {
                if let Some((sign, w)) = a.mul(b) {
                    let prod = p * q;
                    out.add_poly(w, &if sign < 0 { -&prod } else { prod });
                }
            }
        }
        out
    }
}

impl fmt::Display for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.parts.iter().map(|(w, p)| format!("({p}){w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(i: u8) -> SuperFunction {
        SuperFunction::generator(i)
    }

    fn word(ix: &[u8]) -> Word {
        Word::from_indices(ix).unwrap().1
    }

    #[test]
    fn exterior_product() {
        let w12 = SuperFunction::monomial(Scalar::one(), 0, word(&[1, 2]));
        assert_eq!(&xi(1) * &xi(2), w12);
        assert_eq!(&xi(2) * &xi(1), -&w12);
        let a = &SuperFunction::x_pow(1) * &xi(1);
        let b = &SuperFunction::x_pow(-1) * &xi(1);
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn derivatives() {
        let f = SuperFunction::monomial(Scalar::from_int(3), 2, word(&[1, 3]));
        assert_eq!(f.d_dx(), SuperFunction::monomial(Scalar::from_int(6), 1, word(&[1, 3])));
        assert_eq!(f.d_dxi(3), SuperFunction::monomial(Scalar::from_int(-3), 2, word(&[1])));
        assert_eq!(f.d_dxi(1), SuperFunction::monomial(Scalar::from_int(3), 2, word(&[3])));
        assert!(f.d_dxi(2).is_zero());
    }

    #[test]
    fn parity() {
        assert_eq!((&xi(1) * &xi(2)).parity(), Some(false));
        assert_eq!(xi(3).parity(), Some(true));
        assert_eq!((&xi(3) + &SuperFunction::one()).parity(), None);
    }
}
