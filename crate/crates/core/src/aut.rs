//! Automorphisms of the bundle `E = L(k_1) + .. + L(k_m)` and their action
//! `Int A: v -> A v A^{-1}` on vector fields.
//!
//! `A` acts on the odd coordinates of `U0` by `xi_j -> sum_i a_ij(x) xi_i`
//! and fixes `x`. Holomorphy on `U1` forces `a_ij` to be a polynomial of
//! degree `<= k_j - k_i` (zero when `k_j < k_i`), so `det A` is a nonzero
//! constant.
//!
//! The action is implemented twice: [`int_action_oracle`] conjugates the
//! derivation directly, evaluating `A v A^{-1}` on the coordinate functions;
//! [`int_action_formula`] applies the closed formulas for `T_2` sections.

use num_traits::{One, Zero};

use crate::cech::Cocycle;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::sections::{Chart, Deriv, KTuple, SuperFunction, VectorField, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleAut {
    k: KTuple,
    /// Row-major `a_ij`, 0-based.
    entries: Vec<Vec<LaurentPoly>>,
    det: Scalar,
}

fn poly_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    match m.len() {
        0 => LaurentPoly::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = LaurentPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &poly_det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn minor(m: &[Vec<LaurentPoly>], skip_row: usize, skip_col: usize) -> Vec<Vec<LaurentPoly>> {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != skip_row)
        .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != skip_col).map(|(_, p)| p.clone()).collect())
        .collect()
}

impl BundleAut {
    /// Validates the shape, the degree bounds and invertibility.
    pub fn new(k: KTuple, entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let m = k.m();
        if entries.len() != m || entries.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension(format!("automorphism of a rank-{m} bundle needs a {m}x{m} matrix")));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                let bound = k.as_slice()[j] - k.as_slice()[i];
                let ok = a.is_zero() || (a.is_polynomial() && a.max_exp().map_or(true, |d| d <= bound));
                if !ok {
                    return Err(Error::DegreeBound { row: i + 1, col: j + 1, entry: a.to_string(), bound });
                }
            }
        }
        let det = poly_det(&entries);
        let det = match det.as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::BadDeterminant(det.to_string())),
        };
        Ok(Self { k, entries, det })
    }

    pub fn identity(k: KTuple) -> Self {
        let m = k.m();
        let entries = (0..m)
            .map(|i| (0..m).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        Self { k, entries, det: Scalar::one() }
    }

    /// A constant matrix; allowed when every nonzero entry sits where
    /// `k_j >= k_i`.
    pub fn from_matrix(k: KTuple, a: &Matrix) -> Result<Self> {
        let entries = (0..a.rows())
            .map(|i| (0..a.cols()).map(|j| LaurentPoly::constant(a.get(i, j).clone())).collect())
            .collect();
        Self::new(k, entries)
    }

    pub fn k(&self) -> &KTuple {
        &self.k
    }

    pub fn m(&self) -> usize {
        self.k.m()
    }

    /// `a_ij`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn determinant(&self) -> &Scalar {
        &self.det
    }

    /// `Some` when every entry is constant.
    pub fn constant_matrix(&self) -> Option<Matrix> {
        let m = self.m();
        let mut out = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, self.entries[i][j].as_constant()?);
            }
        }
        Some(out)
    }

    /// `B = A^{-1}` via the adjugate; its entries obey the same degree bounds.
    pub fn inverse(&self) -> Result<BundleAut> {
        let m = self.m();
        let inv_det = self.det.inv()?;
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let cof = poly_det(&minor(&self.entries, j, i)).scale(&inv_det);
                        if (i + j) % 2 == 0 { cof } else { -&cof }
                    })
                    .collect()
            })
            .collect();
        BundleAut::new(self.k.clone(), entries)
    }

    /// Matrix product `self * rhs`, the automorphism `self ∘ rhs`.
    pub fn compose(&self, rhs: &BundleAut) -> Result<BundleAut> {
        if self.k != rhs.k {
            return Err(Error::KTupleMismatch { left: self.k.to_string(), right: rhs.k.to_string() });
        }
        let m = self.m();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m).fold(LaurentPoly::zero(), |acc, t| &acc + &(&self.entries[i][t] * &rhs.entries[t][j]))
                    })
                    .collect()
            })
            .collect();
        BundleAut::new(self.k.clone(), entries)
    }

    /// `A(xi_j) = sum_i a_ij xi_i`.
    pub fn image_of_generator(&self, j: u8) -> SuperFunction {
        let col = usize::from(j) - 1;
        let mut out = SuperFunction::zero();
        for (i, row) in self.entries.iter().enumerate() {
            out.add_poly(Word::generator(i as u8 + 1), &row[col]);
        }
        out
    }

    /// The induced algebra automorphism of `U0` functions; `x` is fixed.
    pub fn apply_to_function(&self, f: &SuperFunction) -> SuperFunction {
        let images: Vec<SuperFunction> = (1..=self.m() as u8).map(|j| self.image_of_generator(j)).collect();
        let mut out = SuperFunction::zero();
        for (w, p) in f.parts() {
            let product = w
                .indices()
                .fold(SuperFunction::one(), |acc, j| &acc * &images[usize::from(j) - 1]);
            out = &out + &product.mul_poly(p);
        }
        out
    }

    /// `D(A) = det(A) (A^{-1})^T`, the induced action `W -> D W` on the
    /// coefficient matrix of a class for the retract `(k,k,k)`.
    pub fn matrix_action(&self) -> Result<Matrix> {
        let inv = self.inverse()?;
        let b = inv
            .constant_matrix()
            .ok_or_else(|| Error::Unsupported("matrix action needs a constant automorphism".into()))?;
        Ok(b.transpose().scale(&self.det))
    }
}

/// `A v A^{-1}` by conjugating the derivation: the result sends each
/// coordinate function `g` to `A(v(A^{-1}(g)))`.
pub fn int_action_oracle(a: &BundleAut, v: &VectorField) -> Result<VectorField> {
    if v.chart() != Chart::U0 {
        return Err(Error::ChartMismatch);
    }
    if v.m() != a.m() {
        return Err(Error::Dimension(format!("field has {} odd coordinates, automorphism rank {}", v.m(), a.m())));
    }
    let inv = a.inverse()?;
    let conjugated = |g: &SuperFunction| a.apply_to_function(&v.apply(&inv.apply_to_function(g)));
    let dx = conjugated(&SuperFunction::x_pow(1));
    let dxi = (1..=a.m() as u8).map(|j| conjugated(&SuperFunction::generator(j))).collect();
    Ok(VectorField::from_components(Chart::U0, dx, dxi))
}

/// The closed formulas for `T_2` sections, `B = A^{-1}`, `b' = db/dx`:
///
/// ```text
/// A (xi_1 xi_2 xi_3 d/dxi_t) A^{-1} = det A sum_s b_ts xi_1 xi_2 xi_3 d/dxi_s
/// A (xi_i xi_j d/dx) A^{-1}         = det A sum_{p<q} (-1)^{l+r} b_lr xi_p xi_q d/dx
///                                   + det A sum_s b'_ls xi_i xi_j xi_l d/dxi_s
/// ```
///
/// with `l` the index outside `{i, j}` and `r` the index outside `{p, q}`.
/// For `m = 2` the action is multiplication by `det A`.
pub fn int_action_formula(a: &BundleAut, v: &Cocycle) -> Result<Cocycle> {
    if v.k() != a.k() {
        return Err(Error::KTupleMismatch { left: a.k().to_string(), right: v.k().to_string() });
    }
    let m = a.m();
    if m == 2 {
        return Ok(v.scale(a.determinant()));
    }
    let b = a.inverse()?;
    let det = a.determinant();
    let full = Word::full(3);
    let mut out = VectorField::zero(3, Chart::U0);
    let b_at = |r: u8, c: u8| b.entry(usize::from(r) - 1, usize::from(c) - 1);
    for (d, w, e, c) in v.section().terms() {
        let coeff = LaurentPoly::monomial(&c * det, e);
        match d {
            Deriv::Xi(t) => {
                for s in 1..=3u8 {
                    out.add_component(Deriv::Xi(s), &SuperFunction::from_poly(&coeff * b_at(t, s), full));
                }
            }
            Deriv::X => {
                let l = w.complement(3).indices().next().expect("pair word");
                for r in 1..=3u8 {
                    let pq = Word::generator(r).complement(3);
                    let sign = if (l + r) % 2 == 0 { 1 } else { -1 };
                    let term = (&coeff * b_at(l, r)).scale(&Scalar::from_int(sign));
                    out.add_component(Deriv::X, &SuperFunction::from_poly(term, pq));
                }
                let mut ix = w.indices();
                let (i, j) = (ix.next().expect("pair"), ix.next().expect("pair"));
                let (eps, _) = Word::from_indices(&[i, j, l]).expect("distinct");
                for s in 1..=3u8 {
                    let term = (&coeff * &b_at(l, s).derivative()).scale(&Scalar::from_int(eps.into()));
                    out.add_component(Deriv::Xi(s), &SuperFunction::from_poly(term, full));
                }
            }
        }
    }
    Cocycle::new(v.k().clone(), out)
}

/// `Int A` on a cocycle, by conjugation.
pub fn int_action(a: &BundleAut, v: &Cocycle) -> Result<Cocycle> {
    if v.k() != a.k() {
        return Err(Error::KTupleMismatch { left: a.k().to_string(), right: v.k().to_string() });
    }
    Cocycle::new(v.k().clone(), int_action_oracle(a, v.section())?)
}
