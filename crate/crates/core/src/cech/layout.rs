use std::fmt;

use num_traits::One;

use crate::scalar::Scalar;
use crate::sections::{Chart, Deriv, KTuple, VectorField, Word};

/// The two section shapes of a rank-2 summand `T_2^{ij}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    /// `x^{-n} xi_i xi_j d/dx`
    Dx,
    /// `x^{-n} xi_i xi_j xi_l d/dxi_l`, `l` the index outside the pair
    Dxi,
}

/// One basis cocycle of `H^1(CP^1, T_2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub pair: (u8, u8),
    pub kind: LabelKind,
    pub n: i64,
}

impl BasisLabel {
    pub fn pair_word(&self) -> Word {
        Word::generator(self.pair.0).mul(Word::generator(self.pair.1)).expect("distinct pair").1
    }

    /// The index `l` completing the pair to `{1,2,3}`; `None` for `m = 2`.
    pub fn complement(&self, m: usize) -> Option<u8> {
        self.pair_word().complement(m).indices().next()
    }

    /// The cocycle this label stands for, in `U0` coordinates.
    pub fn representative(&self, m: usize) -> VectorField {
        match self.kind {
            LabelKind::Dx => VectorField::monomial(m, Chart::U0, Deriv::X, self.pair_word(), -self.n, Scalar::one()),
            LabelKind::Dxi => {
                let l = self.complement(m).expect("second-type labels need a third generator");
                let (sign, w) = Word::from_indices(&[self.pair.0, self.pair.1, l]).expect("distinct indices");
                VectorField::monomial(m, Chart::U0, Deriv::Xi(l), w, -self.n, Scalar::from_int(sign.into()))
            }
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.pair;
        match self.kind {
            LabelKind::Dx => write!(f, "x^-{} xi{i}xi{j} d/dx", self.n),
            LabelKind::Dxi => {
                let l = 6 - i - j;
                write!(f, "x^-{} xi{i}xi{j}xi{l} d/dxi{l}", self.n)
            }
        }
    }
}

/// Ordered basis of `H^1(CP^1, T_2)` for a retract `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisLayout {
    k: KTuple,
    labels: Vec<BasisLabel>,
}

/// Pairs `i < j` of a k-tuple, lexicographic.
pub(crate) fn pairs(m: usize) -> Vec<(u8, u8)> {
    let m = m as u8;
    (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect()
}

/// Basis of `H^1` of the summand for pair `(i, j)`, split by the value of
/// `s = k_i + k_j`.
fn pair_labels(k: &KTuple, (i, j): (u8, u8)) -> Vec<BasisLabel> {
    let s = k.k(i) + k.k(j);
    let label = |kind, n| BasisLabel { pair: (i, j), kind, n };
    if k.m() == 2 {
        return (1..=s - 3).map(|n| label(LabelKind::Dx, n)).collect();
    }
    let l = 6 - i - j;
    match s {
        s if s > 3 => (1..=s - 3)
            .map(|n| label(LabelKind::Dx, n))
            .chain((1..=s - 1).map(|n| label(LabelKind::Dxi, n)))
            .collect(),
        3 => vec![label(LabelKind::Dxi, 1), label(LabelKind::Dxi, 2)],
        2 if k.k(l) == 0 => vec![label(LabelKind::Dxi, 1)],
        _ => Vec::new(),
    }
}

impl BasisLayout {
    pub fn new(k: &KTuple) -> Self {
        let labels = pairs(k.m()).into_iter().flat_map(|p| pair_labels(k, p)).collect();
        Self { k: k.clone(), labels }
    }

    pub fn k(&self) -> &KTuple {
        &self.k
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `(p, a, q) = (2k-3, 2k-1, 4k-4)` for a retract `(k,k,k)` with `k >= 2`.
    pub fn block_sizes(&self) -> Option<(usize, usize, usize)> {
        let k = self.k.common_degree().filter(|_| self.k.m() == 3)?;
        (k >= 2).then(|| {
            let (p, a) = ((2 * k - 3) as usize, (2 * k - 1) as usize);
            (p, a, p + a)
        })
    }
}

pub fn basis(k: &KTuple) -> BasisLayout {
    BasisLayout::new(k)
}
