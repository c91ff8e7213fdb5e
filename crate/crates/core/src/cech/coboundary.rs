//! Coboundary decision by exact linear algebra.
//!
//! `v` is a coboundary iff `v = w0 - w1` with `w0` holomorphic on `U0` (only
//! `x^n, n >= 0`) and `w1` holomorphic on `U1` (only `y^n, n >= 0` in `U1`
//! coordinates). Modulo `w0` only the negative powers of `x` matter, so the
//! unknowns are the coefficients of `w1`, each `U1` monomial contributing its
//! chart-transformed image. The solver knows nothing about the cohomology
//! basis; it only uses the generic chart change.
//!
//! Window: if `v` has exponents `>= lo_v`, any solution only uses `U1`
//! monomials whose images have exponents `>= lo_v - 1` (the leading term of
//! the deepest monomial cannot cancel). The solver works on
//! `[lo_v - S - 2, -1]`, `S = max |k_i + k_j|`, which contains that bound.

use std::collections::HashMap;

use num_traits::Zero;

use super::{reduce, t2_shapes, Cocycle, CohomologyClass};
use crate::error::{Error, Result};
use crate::linalg::{Elimination, Matrix};
use crate::scalar::Scalar;
use crate::sections::{transition_monomial, Chart, Deriv, KTuple, VectorField, Word};

/// Widest exponent window the solver accepts.
pub const MAX_WINDOW: i64 = 2048;

type Monomial = (Deriv, Word, i64);

/// `w0` in `U0` coordinates and `w1` in `U1` coordinates with
/// `v = w0 - w1` on the overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub w0: VectorField,
    pub w1: VectorField,
}

impl Witness {
    /// Re-check every claim of the witness against `v`.
    pub fn verify(&self, v: &Cocycle) -> bool {
        let k = v.k();
        if self.w0.chart() != Chart::U0 || self.w1.chart() != Chart::U1 {
            return false;
        }
        let holomorphic = |f: &VectorField| f.min_exp().map_or(true, |e| e >= 0);
        let Ok(w1_in_u0) = self.w1.change_chart(k) else { return false };
        holomorphic(&self.w0)
            && holomorphic(&self.w1)
            && self.w0.try_sub(&w1_in_u0).map_or(false, |d| &d == v.section())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoboundaryDecision {
    Coboundary(Witness),
    /// Carries the nonzero reduced class as certificate.
    NotCoboundary(CohomologyClass),
}

impl CoboundaryDecision {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, CoboundaryDecision::Coboundary(_))
    }
}

/// Largest `|k(w)|` over the degree-2 words, the transition shift bound.
fn shift_bound(k: &KTuple) -> i64 {
    Word::all(k.m()).into_iter().filter(|w| w.len() == 2).map(|w| k.weight(w).abs()).max().unwrap_or(0)
}

/// `U1` monomials of `T_2` with `y^e, e >= 0`, whose `U0` images have every
/// exponent `>= lo` and at least one negative exponent.
fn holomorphic_u1_monomials(k: &KTuple, lo: i64) -> Vec<(Monomial, VectorField)> {
    let mut out = Vec::new();
    let stop = -lo + shift_bound(k) + 4;
    for (d, w) in t2_shapes(k.m()) {
        for e in 0..=stop {
            let image = transition_monomial(k, Chart::U1, d, w, e);
            let (Some(min), Some(_)) = (image.min_exp(), image.max_exp()) else { continue };
            if min < lo {
                break;
            }
            if min < 0 {
                out.push(((d, w, e), image));
            }
        }
    }
    out
}

/// Negative-exponent `T_2` monomials in `U0` with exponent in `[lo, -1]`.
fn negative_monomials(m: usize, lo: i64) -> Vec<Monomial> {
    t2_shapes(m).into_iter().flat_map(|(d, w)| (lo..0).map(move |e| (d, w, e))).collect()
}

fn constraint_matrix(
    rows: &HashMap<Monomial, usize>,
    nrows: usize,
    cols: &[(Monomial, VectorField)],
) -> Matrix {
    let mut m = Matrix::zeros(nrows, cols.len());
    for (j, (_, image)) in cols.iter().enumerate() {
        for (d, w, e, c) in image.terms() {
            if let Some(&i) = rows.get(&(d, w, e)) {
                m.set(i, j, c);
            }
        }
    }
    m
}

/// A factored coboundary system for one `k` and one exponent window, reusable
/// across many cocycles.
#[derive(Debug, Clone)]
pub struct CoboundarySolver {
    k: KTuple,
    lo: i64,
    rows: HashMap<Monomial, usize>,
    cols: Vec<Monomial>,
    elim: Elimination,
}

impl CoboundarySolver {
    /// Solver for cocycles whose exponents are all `>= lowest_exp`.
    pub fn new(k: &KTuple, lowest_exp: i64) -> Result<Self> {
        let lo = lowest_exp.min(-1) - shift_bound(k) - 2;
        if -lo > MAX_WINDOW {
            return Err(Error::WindowOverflow { lo, hi: -1, limit: MAX_WINDOW });
        }
        let row_list = negative_monomials(k.m(), lo);
        let rows: HashMap<Monomial, usize> = row_list.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let cols = holomorphic_u1_monomials(k, lo);
        let matrix = constraint_matrix(&rows, row_list.len(), &cols);
        Ok(Self {
            k: k.clone(),
            lo,
            rows,
            cols: cols.into_iter().map(|(c, _)| c).collect(),
            elim: Elimination::new(&matrix),
        })
    }

    /// Solver sized for `v`. Fails with [`Error::WindowOverflow`] when the
    /// support of `v` is too wide.
    pub fn for_cocycle(v: &Cocycle) -> Result<Self> {
        if let Some(hi) = v.section().max_exp() {
            if hi > MAX_WINDOW {
                return Err(Error::WindowOverflow { lo: v.section().min_exp().unwrap_or(0), hi, limit: MAX_WINDOW });
            }
        }
        Self::new(v.k(), v.section().min_exp().unwrap_or(0))
    }

    pub fn k(&self) -> &KTuple {
        &self.k
    }

    /// Lowest `U0` exponent the system covers.
    pub fn window_low(&self) -> i64 {
        self.lo
    }

    /// `Some(witness)` iff `v` is a coboundary.
    pub fn solve(&self, v: &Cocycle) -> Result<Option<Witness>> {
        if v.k() != &self.k {
            return Err(Error::KTupleMismatch { left: self.k.to_string(), right: v.k().to_string() });
        }
        let min = v.section().min_exp().unwrap_or(0);
        if min < self.lo + shift_bound(&self.k) + 2 {
            return Err(Error::Dimension(format!("cocycle exponent {min} is below the solver window")));
        }
        let mut rhs = vec![Scalar::zero(); self.rows.len()];
        for (d, w, e, c) in v.section().terms() {
            if e < 0 {
                rhs[self.rows[&(d, w, e)]] = -c;
            }
        }
        let Some(x) = self.elim.solve(&rhs) else { return Ok(None) };
        let m = self.k.m();
        let mut w1 = VectorField::zero(m, Chart::U1);
        for (&(d, w, e), c) in self.cols.iter().zip(&x) {
            if !c.is_zero() {
                w1.add_term(d, w, e, c);
            }
        }
        let w0 = v.section().try_add(&w1.change_chart(&self.k)?)?;
        debug_assert!(w0.min_exp().map_or(true, |e| e >= 0));
        Ok(Some(Witness { w0, w1 }))
    }

    pub fn decide(&self, v: &Cocycle) -> Result<CoboundaryDecision> {
        Ok(match self.solve(v)? {
            Some(w) => CoboundaryDecision::Coboundary(w),
            None => CoboundaryDecision::NotCoboundary(reduce(v)),
        })
    }
}

/// Decide whether `v` is a coboundary, with a witness or certificate.
pub fn is_coboundary(v: &Cocycle) -> Result<CoboundaryDecision> {
    CoboundarySolver::for_cocycle(v)?.decide(v)
}

/// Dimension of the image of the span of `U0` monomials with exponents in
/// `[lo, -1]` inside `H^1(T_2)`. `margin >= 1` absorbs the one-step spill of
/// the `d/dy` transition.
pub fn dimension_on_window(k: &KTuple, lo: i64, margin: i64) -> usize {
    let deep = lo - margin;
    let row_list = negative_monomials(k.m(), deep);
    let rows: HashMap<Monomial, usize> = row_list.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let cols = holomorphic_u1_monomials(k, deep);
    let full = constraint_matrix(&rows, row_list.len(), &cols);
    // Rows below lo: coboundaries with no support there are exactly the
    // kernel of this projection.
    let below: Vec<usize> = row_list.iter().enumerate().filter(|(_, r)| r.2 < lo).map(|(i, _)| i).collect();
    let mut projected = Matrix::zeros(below.len(), cols.len());
    for (pi, &i) in below.iter().enumerate() {
        for j in 0..cols.len() {
            projected.set(pi, j, full.get(i, j).clone());
        }
    }
    let boundaries_in_window = full.rank() - projected.rank();
    let window_rows = row_list.len() - below.len();
    window_rows - boundaries_in_window
}

/// `dim H^1(CP^1, T_2)` computed from the coboundary system alone.
pub fn cohomology_dimension(k: &KTuple) -> usize {
    // Every U0 monomial below -S-1 is holomorphic on U1.
    let lo = -shift_bound(k) - 4;
    dimension_on_window(k, lo, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::basis;
    use num_traits::One;

    fn kt(v: &[i64]) -> KTuple {
        KTuple::new(v.to_vec()).unwrap()
    }

    fn word(ix: &[u8]) -> Word {
        Word::from_indices(ix).unwrap().1
    }

    fn cocycle(k: &KTuple, terms: &[(Deriv, &[u8], i64, i64)]) -> Cocycle {
        let mut v = VectorField::zero(k.m(), Chart::U0);
        for &(d, ix, e, c) in terms {
            v.add_term(d, word(ix), e, &Scalar::from_int(c));
        }
        Cocycle::new(k.clone(), v).unwrap()
    }

    #[test]
    fn holomorphic_on_u0() {
        let k = kt(&[2, 2, 2]);
        let v = cocycle(&k, &[(Deriv::X, &[1, 2], 3, 1)]);
        let CoboundaryDecision::Coboundary(w) = is_coboundary(&v).unwrap() else { panic!() };
        assert_eq!(&w.w0, v.section());
        assert!(w.w1.is_zero());
        assert!(w.verify(&v));
    }

    #[test]
    fn basis_element_is_not_a_coboundary() {
        let k = kt(&[2, 2, 2]);
        let v = cocycle(&k, &[(Deriv::Xi(3), &[1, 2, 3], -1, 1)]);
        let decision = is_coboundary(&v).unwrap();
        let CoboundaryDecision::NotCoboundary(cert) = decision else { panic!() };
        assert!(!cert.is_zero());
    }

    #[test]
    fn relation_is_a_coboundary() {
        let k = kt(&[2, 2, 2]);
        let v = cocycle(&k, &[(Deriv::X, &[1, 2], -2, 1), (Deriv::Xi(3), &[1, 2, 3], -3, 2)]);
        let CoboundaryDecision::Coboundary(w) = is_coboundary(&v).unwrap() else { panic!() };
        assert!(w.verify(&v));
        // The U1 side is exactly eta_1 eta_2 d/dy.
        let expected = VectorField::monomial(3, Chart::U1, Deriv::X, word(&[1, 2]), 0, Scalar::one());
        assert_eq!(w.w1, expected);
    }

    #[test]
    fn window_overflow() {
        let k = kt(&[2, 2, 2]);
        let v = cocycle(&k, &[(Deriv::X, &[1, 2], -5000, 1)]);
        assert!(matches!(is_coboundary(&v), Err(Error::WindowOverflow { .. })));
    }

    #[test]
    fn oracle_dimension_matches_layout_and_is_stable() {
        for k in [&[2, 2, 2][..], &[1, 1, 0], &[3, 2, 1], &[1, 1, 1], &[-2, 4, 3], &[3, 2], &[2, 1], &[4, 4]] {
            let k = kt(k);
            let d = cohomology_dimension(&k);
            assert_eq!(d, basis(&k).dimension(), "k = {k}");
            let lo = -shift_bound(&k) - 4;
            assert_eq!(dimension_on_window(&k, lo - 3, 3), d, "k = {k}");
        }
    }
}
