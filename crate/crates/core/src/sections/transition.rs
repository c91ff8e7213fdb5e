//! Change of chart on the overlap `U0 ∩ U1`.
//!
//! The gluing `y = 1/x, eta_i = x^{-k_i} xi_i` has the same shape read in
//! either direction (`x = 1/y, xi_i = y^{-k_i} eta_i`), so one routine serves
//! both. A field `v` is pushed forward by evaluating it on the new coordinate
//! functions and rewriting the results in the new coordinates:
//! `v = v(y) d/dy + sum_t v(eta_t) d/deta_t`.

use num_traits::One;

use super::{Chart, Deriv, KTuple, SuperFunction, VectorField, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

impl SuperFunction {
    /// Rewrite a function on the overlap in the other chart's coordinates:
    /// `x^n xi_w = y^{-n - k(w)} eta_w`.
    pub fn to_other_chart(&self, k: &KTuple) -> SuperFunction {
        let mut out = SuperFunction::zero();
        for (w, p) in self.parts() {
            out.add_poly(w, &p.invert_variable().shift(-k.weight(w)));
        }
        out
    }
}

impl VectorField {
    /// Express the field in the other chart. Valid for any field on the
    /// overlap.
    pub fn change_chart(&self, k: &KTuple) -> Result<VectorField> {
        if k.m() != self.m() {
            return Err(Error::Dimension(format!("field has {} odd coordinates, k-tuple {k}", self.m())));
        }
        let new_even = SuperFunction::x_pow(-1);
        let dx = self.apply(&new_even).to_other_chart(k);
        let dxi = (1..=self.m() as u8)
            .map(|t| {
                let new_odd = &SuperFunction::x_pow(-k.k(t)) * &SuperFunction::generator(t);
                self.apply(&new_odd).to_other_chart(k)
            })
            .collect();
        Ok(VectorField::from_components(self.chart().other(), dx, dxi))
    }

    /// `U0` coordinates to `U1` coordinates, for sections of `T_2`.
    pub fn to_chart1(&self, k: &KTuple) -> Result<VectorField> {
        self.checked_transition(k, Chart::U0)
    }

    /// `U1` coordinates to `U0` coordinates, for sections of `T_2`.
    pub fn to_chart0(&self, k: &KTuple) -> Result<VectorField> {
        self.checked_transition(k, Chart::U1)
    }

    fn checked_transition(&self, k: &KTuple, from: Chart) -> Result<VectorField> {
        if self.chart() != from {
            return Err(Error::ChartMismatch);
        }
        self.check_t2()?;
        self.change_chart(k)
    }
}

/// Rewrite a single monomial `x^exp xi_w d` from one chart to the other.
pub(crate) fn transition_monomial(k: &KTuple, from: Chart, d: Deriv, w: Word, exp: i64) -> VectorField {
    VectorField::monomial(k.m(), from, d, w, exp, Scalar::one())
        .change_chart(k)
        .expect("monomial built with k.m() odd coordinates")
}
