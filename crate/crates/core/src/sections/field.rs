use std::fmt;

use super::{Chart, SuperFunction, Word};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// A coordinate derivation: `d/dx` (`d/dy` in `U1`) or `d/dxi_i` (`d/deta_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Deriv {
    X,
    Xi(u8),
}

impl Deriv {
    pub fn is_odd(self) -> bool {
        matches!(self, Deriv::Xi(_))
    }

    /// Z-degree of the monomial field `xi_w * self`: the word length, minus
    /// one for an odd derivation.
    pub fn degree_with(self, w: Word) -> i64 {
        match self {
            Deriv::X => w.len() as i64,
            Deriv::Xi(_) => w.len() as i64 - 1,
        }
    }
}

impl fmt::Display for Deriv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deriv::X => write!(f, "d/dx"),
            Deriv::Xi(i) => write!(f, "d/dxi{i}"),
        }
    }
}

/// A vector field `f_x d/dx + sum_i f_i d/dxi_i` on one chart (or on the
/// overlap, written in that chart's coordinates).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    chart: Chart,
    dx: SuperFunction,
    dxi: Vec<SuperFunction>,
}

impl VectorField {
    pub fn zero(m: usize, chart: Chart) -> Self {
        Self { chart, dx: SuperFunction::zero(), dxi: vec![SuperFunction::zero(); m] }
    }

    pub fn from_components(chart: Chart, dx: SuperFunction, dxi: Vec<SuperFunction>) -> Self {
        Self { chart, dx, dxi }
    }

    /// The monomial field `c x^exp xi_w * deriv`.
    pub fn monomial(m: usize, chart: Chart, deriv: Deriv, w: Word, exp: i64, c: Scalar) -> Self {
        let mut v = Self::zero(m, chart);
        v.add_term(deriv, w, exp, &c);
        v
    }

    pub fn m(&self) -> usize {
        self.dxi.len()
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn dx(&self) -> &SuperFunction {
        &self.dx
    }

    pub fn dxi(&self) -> &[SuperFunction] {
        &self.dxi
    }

    pub fn component(&self, d: Deriv) -> &SuperFunction {
        match d {
            Deriv::X => &self.dx,
            Deriv::Xi(i) => &self.dxi[usize::from(i) - 1],
        }
    }

    fn component_mut(&mut self, d: Deriv) -> &mut SuperFunction {
        match d {
            Deriv::X => &mut self.dx,
            Deriv::Xi(i) => &mut self.dxi[usize::from(i) - 1],
        }
    }

    pub fn derivs(&self) -> impl Iterator<Item = Deriv> {
        std::iter::once(Deriv::X).chain((1..=self.m() as u8).map(Deriv::Xi))
    }

    pub fn add_term(&mut self, d: Deriv, w: Word, exp: i64, c: &Scalar) {
        self.component_mut(d).add_term(w, exp, c);
    }

    pub fn add_component(&mut self, d: Deriv, f: &SuperFunction) {
        let slot = self.component_mut(d);
        *slot = &*slot + f;
    }

    /// `(deriv, word, exponent, coefficient)` in canonical order.
    pub fn terms(&self) -> Vec<(Deriv, Word, i64, Scalar)> {
        self.derivs()
            .flat_map(|d| {
                self.component(d).terms().map(move |(w, e, c)| (d, w, e, c.clone())).collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dxi.iter().all(SuperFunction::is_zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.derivs().filter_map(|d| self.component(d).min_exp()).min()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.derivs().filter_map(|d| self.component(d).max_exp()).max()
    }

    fn check_compatible(&self, rhs: &VectorField) -> Result<()> {
        if self.chart != rhs.chart || self.m() != rhs.m() {
            return Err(Error::ChartMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &VectorField) -> Result<VectorField> {
        self.check_compatible(rhs)?;
        Ok(VectorField {
            chart: self.chart,
            dx: &self.dx + &rhs.dx,
            dxi: self.dxi.iter().zip(&rhs.dxi).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &VectorField) -> Result<VectorField> {
        self.check_compatible(rhs)?;
        Ok(VectorField {
            chart: self.chart,
            dx: &self.dx - &rhs.dx,
            dxi: self.dxi.iter().zip(&rhs.dxi).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> VectorField {
        VectorField {
            chart: self.chart,
            dx: self.dx.scale(c),
            dxi: self.dxi.iter().map(|f| f.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> VectorField {
        VectorField {
            chart: self.chart,
            dx: self.dx.mul_poly(p),
            dxi: self.dxi.iter().map(|f| f.mul_poly(p)).collect(),
        }
    }

    /// Apply `map` to every coefficient function, keeping the chart.
    pub fn map_components(&self, mut map: impl FnMut(&SuperFunction) -> SuperFunction) -> VectorField {
        VectorField { chart: self.chart, dx: map(&self.dx), dxi: self.dxi.iter().map(map).collect() }
    }

    /// Keep only terms whose exponent satisfies `keep`.
    pub fn filter_exponents(&self, keep: impl Fn(i64) -> bool + Copy) -> VectorField {
        let mut out = VectorField::zero(self.m(), self.chart);
        for (d, w, e, c) in self.terms() {
            if keep(e) {
                out.add_term(d, w, e, &c);
            }
        }
        out
    }

    /// The derivation applied to a function: `f_x df/dx + sum_i f_i df/dxi_i`
    /// with left odd derivatives.
    pub fn apply(&self, f: &SuperFunction) -> SuperFunction {
        let mut out = &self.dx * &f.d_dx();
        for (idx, coeff) in self.dxi.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            out = &out + &(coeff * &f.d_dxi(idx as u8 + 1));
        }
        out
    }

    /// `Some(p)` when every term has the same Z-degree `p`.
    pub fn degree(&self) -> Option<i64> {
        let mut degrees = self.terms().into_iter().map(|(d, w, _, _)| d.degree_with(w));
        let first = degrees.next()?;
        degrees.all(|p| p == first).then_some(first)
    }

    /// Every term has Z-degree `p`. The zero field lies in every piece.
    pub fn lies_in(&self, p: i64) -> bool {
        self.terms().iter().all(|(d, w, _, _)| d.degree_with(*w) == p)
    }

    /// `Some(parity)` of a homogeneous field; a term `xi_w d` has parity
    /// `|w| + |d|` mod 2.
    pub fn parity(&self) -> Option<bool> {
        let mut parities = self.terms().into_iter().map(|(d, w, _, _)| w.is_odd() ^ d.is_odd());
        let first = parities.next().unwrap_or(false);
        parities.all(|p| p == first).then_some(first)
    }

    /// Fails with the first term outside `T_2`.
    pub fn check_t2(&self) -> Result<()> {
        for (d, w, e, c) in self.terms() {
            let degree = d.degree_with(w);
            if degree != 2 {
                return Err(Error::NotInT2 { term: format!("{c}*x^{e}*{w}*{d}"), degree });
            }
        }
        Ok(())
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms.iter().map(|(d, w, e, c)| format!("({c})x^{e} {w} {d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] {self}", self.chart)
    }
}
