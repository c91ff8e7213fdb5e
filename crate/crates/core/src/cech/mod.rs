//! First Čech cohomology of `T_2` for the cover `{U0, U1}` of `CP^1`.
//!
//! A 1-cocycle is a `T_2` section over the overlap, written in `U0`
//! coordinates with finite Laurent coefficients. Two independent routes
//! decide its class:
//!
//! * [`reduce`] applies the explicit normal-form rules per summand
//!   `T_2^{ij}` and reads coordinates in the basis of [`basis`];
//! * [`is_coboundary`] solves `v = w0 - w1` by exact linear algebra on a
//!   finite exponent window, knowing nothing about the basis.

mod coboundary;
mod layout;
mod reduce;

pub use coboundary::{
    cohomology_dimension, dimension_on_window, is_coboundary, CoboundaryDecision, CoboundarySolver, Witness,
    MAX_WINDOW,
};
pub use layout::{basis, BasisLabel, BasisLayout, LabelKind};
pub use reduce::reduce;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sections::{Chart, Deriv, KTuple, VectorField, Word};

/// Monomial shapes `(derivation, word)` of Z-degree 2 over `m` odd generators.
pub fn t2_shapes(m: usize) -> Vec<(Deriv, Word)> {
    let words = Word::all(m);
    let mut shapes: Vec<(Deriv, Word)> =
        words.iter().filter(|w| w.len() == 2).map(|&w| (Deriv::X, w)).collect();
    for i in 1..=m as u8 {
        shapes.extend(words.iter().filter(|w| w.len() == 3).map(|&w| (Deriv::Xi(i), w)));
    }
    shapes
}

/// A Čech 1-cocycle with values in `T_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocycle {
    k: KTuple,
    section: VectorField,
}

impl Cocycle {
    /// The section must be written in `U0` coordinates and lie in `T_2`.
    pub fn new(k: KTuple, section: VectorField) -> Result<Self> {
        if section.chart() != Chart::U0 {
            return Err(Error::ChartMismatch);
        }
        if section.m() != k.m() {
            return Err(Error::Dimension(format!("section has {} odd coordinates, k-tuple {k}", section.m())));
        }
        section.check_t2()?;
        Ok(Self { k, section })
    }

    pub fn zero(k: KTuple) -> Self {
        let section = VectorField::zero(k.m(), Chart::U0);
        Self { k, section }
    }

    pub fn k(&self) -> &KTuple {
        &self.k
    }

    pub fn section(&self) -> &VectorField {
        &self.section
    }

    pub fn into_section(self) -> VectorField {
        self.section
    }

    pub fn is_zero(&self) -> bool {
        self.section.is_zero()
    }

    fn same_k(&self, rhs: &Cocycle) -> Result<()> {
        if self.k != rhs.k {
            return Err(Error::KTupleMismatch { left: self.k.to_string(), right: rhs.k.to_string() });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Cocycle) -> Result<Cocycle> {
        self.same_k(rhs)?;
        Ok(Cocycle { k: self.k.clone(), section: self.section.try_add(&rhs.section)? })
    }

    pub fn try_sub(&self, rhs: &Cocycle) -> Result<Cocycle> {
        self.same_k(rhs)?;
        Ok(Cocycle { k: self.k.clone(), section: self.section.try_sub(&rhs.section)? })
    }

    pub fn scale(&self, c: &Scalar) -> Cocycle {
        Cocycle { k: self.k.clone(), section: self.section.scale(c) }
    }
}

/// Coordinates of a cohomology class in a [`BasisLayout`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    layout: BasisLayout,
    coords: Vec<Scalar>,
}

impl CohomologyClass {
    pub fn zero(layout: BasisLayout) -> Self {
        let coords = vec![Scalar::zero(); layout.dimension()];
        Self { layout, coords }
    }

    pub fn from_coords(layout: BasisLayout, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != layout.dimension() {
            return Err(Error::Dimension(format!(
                "{} coordinates for a {}-dimensional space",
                coords.len(),
                layout.dimension()
            )));
        }
        Ok(Self { layout, coords })
    }

    pub fn layout(&self) -> &BasisLayout {
        &self.layout
    }

    pub fn k(&self) -> &KTuple {
        self.layout.k()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, label: &BasisLabel) -> Scalar {
        self.layout.index_of(label).map(|i| self.coords[i].clone()).unwrap_or_default()
    }

    /// Nonzero coordinates with their labels.
    pub fn support(&self) -> impl Iterator<Item = (&BasisLabel, &Scalar)> + '_ {
        self.layout.labels().iter().zip(&self.coords).filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// The cocycle `sum_label coord * representative(label)`.
    pub fn representative(&self) -> Cocycle {
        let m = self.k().m();
        let mut section = VectorField::zero(m, Chart::U0);
        for (label, c) in self.support() {
            section = section.try_add(&label.representative(m).scale(c)).expect("same chart");
        }
        Cocycle { k: self.k().clone(), section }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn shapes() {
        assert_eq!(t2_shapes(3).len(), 6);
        assert_eq!(t2_shapes(2), vec![(Deriv::X, Word::full(2))]);
    }

    #[test]
    fn cocycle_validation() {
        let k = KTuple::uniform(3, 2).unwrap();
        let bad = VectorField::monomial(3, Chart::U0, Deriv::Xi(1), Word::generator(2), 0, Scalar::one());
        assert!(matches!(Cocycle::new(k.clone(), bad), Err(Error::NotInT2 { .. })));
        let other_chart = VectorField::monomial(3, Chart::U1, Deriv::X, Word::full(2), 0, Scalar::one());
        assert_eq!(Cocycle::new(k.clone(), other_chart), Err(Error::ChartMismatch));
        let wrong_m = VectorField::monomial(2, Chart::U0, Deriv::X, Word::full(2), 0, Scalar::one());
        assert!(Cocycle::new(k, wrong_m).is_err());
    }
}
