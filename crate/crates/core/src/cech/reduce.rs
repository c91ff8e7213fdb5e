//! Rule-based normal form for `T_2` cocycles.
//!
//! For a pair `i < j` with `s = k_i + k_j` and `l` the remaining index, the
//! summand `T_2^{ij}` has the sections `xi_i xi_j d/dx` (first type) and
//! `xi_i xi_j xi_l d/dxi_l` (second type). In `U1` coordinates
//!
//! ```text
//! x^e xi_i xi_j d/dx          = -y^{2-s-e} eta_i eta_j d/dy - k_l y^{1-s-e} eta_i eta_j eta_l d/deta_l
//! x^e xi_i xi_j xi_l d/dxi_l  =  y^{-s-e}  eta_i eta_j eta_l d/deta_l
//! ```
//!
//! so a term is trivial in cohomology when `e >= 0` (holomorphic on `U0`),
//! when a first-type term has `e <= 1 - s` or a second-type term has
//! `e <= -s` (holomorphic on `U1`), and the first-type term at `e = 2 - s`
//! is cohomologous to `-k_l` times the second-type term at `1 - s`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::layout::{BasisLabel, LabelKind};
use super::{basis, Cocycle, CohomologyClass};
use crate::scalar::Scalar;
use crate::sections::{Deriv, KTuple, Word};

struct Accumulator<'a> {
    k: &'a KTuple,
    coords: BTreeMap<BasisLabel, Scalar>,
}

impl Accumulator<'_> {
    fn push(&mut self, label: BasisLabel, c: Scalar) {
        let slot = self.coords.entry(label).or_default();
        *slot += &c;
    }

    fn first_type(&mut self, pair: (u8, u8), e: i64, c: Scalar) {
        let s = self.k.k(pair.0) + self.k.k(pair.1);
        if e >= 0 {
            return;
        }
        if self.k.m() == 2 {
            // No odd part: holomorphic on U1 as soon as 2 - s - e >= 0.
            if e > 2 - s {
                self.push(BasisLabel { pair, kind: LabelKind::Dx, n: -e }, c);
            }
            return;
        }
        let l = 6 - pair.0 - pair.1;
        if e <= 1 - s {
            return;
        }
        if e == 2 - s {
            let c = &c * &Scalar::from_int(-self.k.k(l));
            self.second_type(pair, 1 - s, c);
            return;
        }
        self.push(BasisLabel { pair, kind: LabelKind::Dx, n: -e }, c);
    }

    /// `c x^e xi_i xi_j xi_l d/dxi_l`.
    fn second_type(&mut self, pair: (u8, u8), e: i64, c: Scalar) {
        let s = self.k.k(pair.0) + self.k.k(pair.1);
        if e >= 0 || e <= -s {
            return;
        }
        let l = 6 - pair.0 - pair.1;
        // Only e = -1 survives the window for s = 2; there the relation ties
        // it to the first-type term at x^0, which is holomorphic on U0.
        if s == 2 && self.k.k(l) != 0 {
            return;
        }
        self.push(BasisLabel { pair, kind: LabelKind::Dxi, n: -e }, c);
    }
}

/// Coordinates of the class of `v` in the basis of [`basis`]. Linear in `v`.
pub fn reduce(v: &Cocycle) -> CohomologyClass {
    let k = v.k();
    let layout = basis(k);
    let mut acc = Accumulator { k, coords: BTreeMap::new() };
    let full = Word::full(k.m());
    for (d, w, e, c) in v.section().terms() {
        match d {
            Deriv::X => {
                let mut ix = w.indices();
                let pair = (ix.next().expect("degree-2 word"), ix.next().expect("degree-2 word"));
                acc.first_type(pair, e, c);
            }
            Deriv::Xi(l) => {
                debug_assert_eq!(w, full);
                let pair_word = Word::generator(l).complement(k.m());
                let mut ix = pair_word.indices();
                let pair = (ix.next().expect("pair"), ix.next().expect("pair"));
                // xi_1 xi_2 xi_3 = sign * xi_i xi_j xi_l
                let (sign, _) = Word::from_indices(&[pair.0, pair.1, l]).expect("distinct");
                let c = if sign < 0 { -c } else { c };
                acc.second_type(pair, e, c);
            }
        }
    }
    let mut class = CohomologyClass::zero(layout);
    for (label, c) in acc.coords {
        if c.is_zero() {
            continue;
        }
        let idx = class.layout.index_of(&label).expect("reduction only produces basis labels");
        class.coords[idx] = c;
    }
    class
}
