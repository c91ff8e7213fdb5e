//! Isomorphism-class labels.
//!
//! For a retract `(k,k,k)`, `k >= 2`, the class is repackaged as a
//! `3 x (4k-4)` matrix `W` on which a bundle automorphism acts by
//! `W -> D W`, `D` ranging over `GL_3`. The orbit is labelled by the rank of
//! `W` and its row space, stored as the reduced row-echelon basis. For
//! `m = 2` the action is scaling, so the label is a projective point or the
//! split marker.

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cech::{BasisLabel, CohomologyClass, LabelKind};
use crate::error::{Error, Result};
use crate::linalg::{Elimination, Matrix};
use crate::scalar::Scalar;
use crate::sections::KTuple;

/// The coefficient matrix `W` of a class for the retract `(k,k,k)`: row `s`,
/// column `i` holds the coordinate of `v_is`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassMatrix {
    k: i64,
    w: Matrix,
}

/// `4k - 4` columns, none for `k < 2`.
fn column_count(k: i64) -> usize {
    if k < 2 {
        0
    } else {
        (4 * k - 4) as usize
    }
}

/// Row, column and sign of a basis label inside `W`. The standard basis
/// vectors in row 2 are the negatives of the layout representatives.
fn placement(k: i64, label: &BasisLabel) -> (usize, usize, Scalar) {
    let p = (2 * k - 3) as usize;
    let row = label.complement(3).expect("m = 3");
    let col = match label.kind {
        LabelKind::Dx => label.n as usize - 1,
        LabelKind::Dxi => p + label.n as usize - 1,
    };
    let sign = if row == 2 { -1 } else { 1 };
    (usize::from(row) - 1, col, Scalar::from_int(sign))
}

fn unsupported_retract(k: &KTuple) -> Error {
    Error::Unsupported(format!("only retracts (k,k,k) are classified for m = 3, got {k}"))
}

impl ClassMatrix {
    pub fn new(k: i64, w: Matrix) -> Result<Self> {
        let cols = column_count(k);
        if w.rows() != 3 || w.cols() != cols {
            return Err(Error::Dimension(format!(
                "class matrix for k = {k} must be 3x{cols}, got {}x{}",
                w.rows(),
                w.cols()
            )));
        }
        Ok(Self { k, w })
    }

    pub fn zero(k: i64) -> Self {
        Self { k, w: Matrix::zeros(3, column_count(k)) }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn matrix(&self) -> &Matrix {
        &self.w
    }

    pub fn rank(&self) -> usize {
        self.w.rank()
    }

    /// `D W`.
    pub fn act(&self, d: &Matrix) -> Result<ClassMatrix> {
        if d.rows() != 3 || d.cols() != 3 {
            return Err(Error::Dimension("the acting matrix must be 3x3".into()));
        }
        Ok(Self { k: self.k, w: d.mul(&self.w)? })
    }

    /// Back to coordinates in the layout of `(k,k,k)`.
    pub fn to_class(&self) -> CohomologyClass {
        let layout = crate::cech::basis(&KTuple::uniform(3, self.k).expect("m = 3"));
        let coords = layout
            .labels()
            .iter()
            .map(|label| {
                let (r, c, sign) = placement(self.k, label);
                self.w.get(r, c) * &sign
            })
            .collect();
        CohomologyClass::from_coords(layout, coords).expect("one coordinate per label")
    }
}

/// Place the coordinates of a `(k,k,k)` class into `W`.
pub fn to_matrix(c: &CohomologyClass) -> Result<ClassMatrix> {
    let k = c.k();
    let Some(common) = k.common_degree().filter(|_| k.m() == 3) else {
        return Err(unsupported_retract(k));
    };
    let mut w = ClassMatrix::zero(common);
    for (label, value) in c.support() {
        let (r, col, sign) = placement(common, label);
        w.w.set(r, col, value * &sign);
    }
    Ok(w)
}

/// A point of the moduli space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuliPoint {
    /// Retract `(k,k,k)`: rank and row space of `W`.
    M3 { k: i64, rank: usize, echelon: Vec<Vec<Scalar>>, pluecker: Vec<Scalar> },
    /// `m = 2`, the class vanishes.
    M2Split,
    /// `m = 2`, the class up to scaling, first nonzero entry `1`.
    M2Point(Vec<Scalar>),
}

impl ModuliPoint {
    pub fn is_split(&self) -> bool {
        match self {
            ModuliPoint::M3 { rank, .. } => *rank == 0,
            ModuliPoint::M2Split => true,
            ModuliPoint::M2Point(_) => false,
        }
    }
}

/// `r`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Maximal minors of the echelon basis, column subsets in lexicographic
/// order; `[1]` for the zero subspace.
fn pluecker(echelon: &[Vec<Scalar>], cols: usize) -> Vec<Scalar> {
    let r = echelon.len();
    subsets(cols, r)
        .into_iter()
        .map(|set| {
            let rows = echelon.iter().map(|row| set.iter().map(|&c| row[c].clone()).collect()).collect();
            Matrix::from_rows(rows, r).and_then(|m| m.determinant()).expect("square minor")
        })
        .collect()
}

/// Rank and canonical row space of `W`.
pub fn moduli_point(w: &ClassMatrix) -> ModuliPoint {
    let elim = Elimination::new(&w.w);
    let rank = elim.rank();
    let echelon: Vec<Vec<Scalar>> = (0..rank).map(|r| elim.rref().row(r).to_vec()).collect();
    let pluecker = pluecker(&echelon, w.w.cols());
    ModuliPoint::M3 { k: w.k, rank, echelon, pluecker }
}

/// The `m = 2` label of a coordinate vector.
pub fn classify_m2(c: &[Scalar]) -> ModuliPoint {
    let Some(lead) = c.iter().find(|v| !v.is_zero()) else { return ModuliPoint::M2Split };
    let inv = lead.inv().expect("nonzero");
    ModuliPoint::M2Point(c.iter().map(|v| v * &inv).collect())
}

/// The label of a class: through `W` for `(k,k,k)`, projectively for `m = 2`.
pub fn classify(c: &CohomologyClass) -> Result<ModuliPoint> {
    match c.k().m() {
        2 => Ok(classify_m2(c.coords())),
        _ => Ok(moduli_point(&to_matrix(c)?)),
    }
}

/// Whether two classes define isomorphic supermanifolds.
pub fn isomorphic(c1: &CohomologyClass, c2: &CohomologyClass) -> Result<bool> {
    let (k1, k2) = (c1.k(), c2.k());
    if k1.canonical() != k2.canonical() {
        return Err(Error::KTupleMismatch { left: k1.to_string(), right: k2.to_string() });
    }
    if k1.m() == 3 && k1.common_degree().is_none() {
        return Err(unsupported_retract(k1));
    }
    Ok(classify(c1)? == classify(c2)?)
}

/// A `D` in `GL_3` with `D W = W'`, or `None` when the row spaces differ.
/// Built from the echelon transforms and checked by multiplication.
pub fn orbit_witness(w: &ClassMatrix, w2: &ClassMatrix) -> Result<Option<Matrix>> {
    if w.k != w2.k {
        return Err(Error::KTupleMismatch { left: w.k.to_string(), right: w2.k.to_string() });
    }
    let (e1, e2) = (Elimination::new(&w.w), Elimination::new(&w2.w));
    if e1.rref() != e2.rref() {
        return Ok(None);
    }
    let d = e2.transform().inverse()?.mul(&e1.transform())?;
    if d.mul(&w.w)? != w2.w {
        return Err(Error::Dimension("orbit witness failed verification".into()));
    }
    Ok(Some(d))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointRepr {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    echelon: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pluecker: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    split: Option<bool>,
}

impl Serialize for ModuliPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut repr = PointRepr {
            kind: "m2".into(),
            k: None,
            rank: None,
            echelon: None,
            pluecker: None,
            point: None,
            split: None,
        };
        match self {
            ModuliPoint::M3 { k, rank, echelon, pluecker } => {
                repr.kind = "m3".into();
                repr.k = Some(*k);
                repr.rank = Some(*rank);
                repr.echelon = Some(echelon.clone());
                repr.pluecker = Some(pluecker.clone());
            }
            ModuliPoint::M2Split => repr.split = Some(true),
            ModuliPoint::M2Point(p) => repr.point = Some(p.clone()),
        }
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuliPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PointRepr::deserialize(d)?;
        match (repr.kind.clone().as_str(), repr) {
            ("m3", PointRepr { k: Some(k), rank: Some(rank), echelon: Some(echelon), pluecker: Some(pluecker), point: None, split: None, .. }) => {
                if echelon.len() != rank {
                    return Err(D::Error::custom("rank must equal the number of echelon rows"));
                }
                Ok(ModuliPoint::M3 { k, rank, echelon, pluecker })
            }
            ("m2", PointRepr { split: Some(true), point: None, k: None, rank: None, echelon: None, pluecker: None, .. }) => {
                Ok(ModuliPoint::M2Split)
            }
            ("m2", PointRepr { point: Some(p), split: None, k: None, rank: None, echelon: None, pluecker: None, .. }) => {
                Ok(ModuliPoint::M2Point(p))
            }
            (kind, _) => Err(D::Error::custom(format!("malformed moduli point of kind {kind:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::{basis, reduce, Cocycle};
    use crate::sections::{Chart, Deriv, VectorField, Word};
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect()).collect(), cols)
            .unwrap()
    }

    fn monomial_class(k: &KTuple, d: Deriv, ix: &[u8], e: i64) -> CohomologyClass {
        let w = Word::from_indices(ix).unwrap().1;
        reduce(&Cocycle::new(k.clone(), VectorField::monomial(k.m(), Chart::U0, d, w, e, Scalar::one())).unwrap())
    }

    #[test]
    fn placement_examples() {
        let k = KTuple::uniform(3, 2).unwrap();
        assert_eq!(to_matrix(&CohomologyClass::zero(basis(&k))).unwrap(), ClassMatrix::zero(2));

        let w = to_matrix(&monomial_class(&k, Deriv::X, &[1, 2], -1)).unwrap();
        assert_eq!(w.matrix(), &int_matrix(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0]]));

        let w = to_matrix(&monomial_class(&k, Deriv::X, &[1, 2], -2)).unwrap();
        assert_eq!(w.matrix(), &int_matrix(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -2]]));

        let mixed = KTuple::new(vec![2, 2, 1]).unwrap();
        assert!(matches!(to_matrix(&CohomologyClass::zero(basis(&mixed))), Err(Error::Unsupported(_))));
        assert_eq!(ClassMatrix::zero(1).matrix().cols(), 0);
    }

    #[test]
    fn matrix_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for k in 2..=4 {
            let layout = basis(&KTuple::uniform(3, k).unwrap());
            let coords = (0..layout.dimension()).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect();
            let class = CohomologyClass::from_coords(layout, coords).unwrap();
            assert_eq!(to_matrix(&class).unwrap().to_class(), class);
        }
    }

    #[test]
    fn echelon_examples() {
        assert!(moduli_point(&ClassMatrix::zero(2)).is_split());
        let e = ClassMatrix::new(2, int_matrix(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
        let ModuliPoint::M3 { rank, echelon, pluecker, .. } = moduli_point(&e) else { panic!() };
        assert_eq!(rank, 3);
        assert_eq!(echelon, e.matrix().to_rows());
        assert_eq!(pluecker.len(), 4);

        let w = ClassMatrix::new(2, int_matrix(&[&[1, 1, 0, 0], &[2, 2, 0, 0], &[0, 0, 0, 0]])).unwrap();
        let point = moduli_point(&w);
        let ModuliPoint::M3 { rank, echelon, .. } = &point else { panic!() };
        assert_eq!(*rank, 1);
        assert_eq!(echelon, &int_matrix(&[&[1, 1, 0, 0]]).to_rows());
        let single = ClassMatrix::new(2, int_matrix(&[&[1, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])).unwrap();
        let d = orbit_witness(&w, &single).unwrap().unwrap();
        assert_eq!(w.act(&d).unwrap(), single);
    }

    #[test]
    fn serialization_shapes() {
        let w = ClassMatrix::new(2, int_matrix(&[&[1, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])).unwrap();
        let json = serde_json::to_string(&moduli_point(&w)).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"m3","k":2,"rank":1,"echelon":[["1","1","0","0"]],"pluecker":["1","1","0","0"]}"#
        );
        let p = classify_m2(&[Scalar::from_int(2), Scalar::from_int(4)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"kind":"m2","point":["1","2"]}"#);
        assert_eq!(serde_json::to_string(&ModuliPoint::M2Split).unwrap(), r#"{"kind":"m2","split":true}"#);
        for p in [moduli_point(&w), p, ModuliPoint::M2Split, moduli_point(&ClassMatrix::zero(3))] {
            let back: ModuliPoint = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            assert_eq!(back, p);
        }
        assert!(serde_json::from_str::<ModuliPoint>(r#"{"kind":"m2","split":true,"k":2}"#).is_err());
        assert!(serde_json::from_str::<ModuliPoint>(r#"{"kind":"m4"}"#).is_err());
    }

    #[test]
    fn m2_labels() {
        assert_eq!(classify_m2(&[Scalar::zero(), Scalar::zero()]), ModuliPoint::M2Split);
        assert_eq!(classify_m2(&[]), ModuliPoint::M2Split);
        let c = [Scalar::zero(), Scalar::from_int(3), Scalar::i()];
        let lambda = Scalar::gaussian((2, 3), (-1, 5)).unwrap();
        let scaled: Vec<Scalar> = c.iter().map(|v| v * &lambda).collect();
        assert_eq!(classify_m2(&scaled), classify_m2(&c));
    }

    #[test]
    fn isomorphism_checks() {
        let k = KTuple::uniform(3, 2).unwrap();
        let a = monomial_class(&k, Deriv::X, &[2, 3], -1);
        let b = monomial_class(&k, Deriv::Xi(1), &[1, 2, 3], -1);
        assert!(!isomorphic(&a, &b).unwrap());
        let zero = CohomologyClass::zero(basis(&k));
        assert!(isomorphic(&zero, &zero).unwrap());
        let other = CohomologyClass::zero(basis(&KTuple::uniform(3, 3).unwrap()));
        assert!(matches!(isomorphic(&zero, &other), Err(Error::KTupleMismatch { .. })));
        let mixed = CohomologyClass::zero(basis(&KTuple::new(vec![3, 2, 2]).unwrap()));
        assert!(matches!(isomorphic(&mixed, &mixed), Err(Error::Unsupported(_))));
    }

    #[test]
    fn invariance_and_witness() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let k = rng.gen_range(2..=3);
            let q = column_count(k);
            let rank = rng.gen_range(0..=3);
            // Rows beyond `rank` are combinations of the first ones.
            let mut rows: Vec<Vec<Scalar>> =
                (0..rank).map(|_| (0..q).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect()).collect();
            while rows.len() < 3 {
                let c = Scalar::from_int(rng.gen_range(-2..=2));
                let combo = match rows.first() {
                    Some(r) => r.iter().map(|v| v * &c).collect(),
                    None => vec![Scalar::zero(); q],
                };
                rows.push(combo);
            }
            let w = ClassMatrix::new(k, Matrix::from_rows(rows, q).unwrap()).unwrap();
            let d = loop {
                let d = Matrix::from_rows(
                    (0..3).map(|_| (0..3).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect()).collect(),
                    3,
                )
                .unwrap();
                if !d.determinant().unwrap().is_zero() {
                    break d;
                }
            };
            let dw = w.act(&d).unwrap();
            assert_eq!(dw.rank(), w.rank());
            assert_eq!(moduli_point(&dw), moduli_point(&w));
            let found = orbit_witness(&w, &dw).unwrap().unwrap();
            assert_eq!(w.act(&found).unwrap(), dw);
        }
    }

    #[test]
    fn automorphisms_act_through_d() {
        use crate::aut::{int_action, BundleAut};
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..40 {
            let kk = rng.gen_range(2..=3);
            let k = KTuple::uniform(3, kk).unwrap();
            let a = loop {
                let m = Matrix::from_rows(
                    (0..3).map(|_| (0..3).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect()).collect(),
                    3,
                )
                .unwrap();
                if let Ok(a) = BundleAut::from_matrix(k.clone(), &m) {
                    break a;
                }
            };
            let layout = basis(&k);
            let coords = (0..layout.dimension()).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect();
            let v = CohomologyClass::from_coords(layout, coords).unwrap().representative();
            let before = to_matrix(&reduce(&v)).unwrap();
            let after = to_matrix(&reduce(&int_action(&a, &v).unwrap())).unwrap();
            assert_eq!(after, before.act(&a.matrix_action().unwrap()).unwrap());
            assert_eq!(moduli_point(&after), moduli_point(&before));
        }
    }
}
