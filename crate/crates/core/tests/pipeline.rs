//! End-to-end properties of reduce -> act -> classify.

use cp1moduli::aut::{int_action, int_action_formula};
use cp1moduli::cech::{basis, is_coboundary, reduce, t2_shapes};
use cp1moduli::io::JobDocument;
use cp1moduli::moduli::{classify, isomorphic, moduli_point, to_matrix};
use cp1moduli::{BundleAut, Chart, Cocycle, KTuple, Matrix, Scalar, VectorField};
use num_traits::Zero;
use proptest::prelude::*;

fn cocycle_from(k: &KTuple, terms: &[(usize, i64, i64, i64)]) -> Cocycle {
    let shapes = t2_shapes(k.m());
    let mut v = VectorField::zero(k.m(), Chart::U0);
    for &(shape, e, re, im) in terms {
        let (d, w) = shapes[shape % shapes.len()];
        v.add_term(d, w, e, &Scalar::gaussian((re, 1), (im, 1)).unwrap());
    }
    Cocycle::new(k.clone(), v).unwrap()
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64, i64, i64)>> {
    prop::collection::vec((0usize..6, -7i64..=3, -3i64..=3, -1i64..=1), 0..6)
}

fn invertible() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, 9)
        .prop_map(|v| {
            Matrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect(), 3)
                .unwrap()
        })
        .prop_filter("invertible", |m| !m.determinant().unwrap().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduce_is_linear(k in prop::collection::vec(-1i64..=4, 3), a in terms(), b in terms(), c in -3i64..=3) {
        let k = KTuple::new(k).unwrap();
        let (u, v) = (cocycle_from(&k, &a), cocycle_from(&k, &b));
        let c = Scalar::from_int(c);
        let lhs = reduce(&u.scale(&c).try_add(&v).unwrap());
        let rhs: Vec<Scalar> = reduce(&u).coords().iter().zip(reduce(&v).coords()).map(|(x, y)| &(x * &c) + y).collect();
        prop_assert_eq!(lhs.coords(), &rhs[..]);
    }

    #[test]
    fn representative_differs_by_a_coboundary(k in prop::collection::vec(-2i64..=4, 3), t in terms()) {
        let k = KTuple::new(k).unwrap();
        let v = cocycle_from(&k, &t);
        let rest = v.try_sub(&reduce(&v).representative()).unwrap();
        prop_assert!(is_coboundary(&rest).unwrap().is_coboundary());
    }

    #[test]
    fn classification_is_invariant(kk in 2i64..=3, t in terms(), a in invertible()) {
        let k = KTuple::uniform(3, kk).unwrap();
        let aut = BundleAut::from_matrix(k.clone(), &a).unwrap();
        let v = cocycle_from(&k, &t);
        let moved = int_action(&aut, &v).unwrap();
        prop_assert_eq!(&int_action_formula(&aut, &v).unwrap(), &moved);
        let (c1, c2) = (reduce(&v), reduce(&moved));
        prop_assert!(isomorphic(&c1, &c2).unwrap());
        prop_assert_eq!(moduli_point(&to_matrix(&c2).unwrap()), classify(&c1).unwrap());
    }

    #[test]
    fn documents_round_trip(k in prop::collection::vec(-1i64..=4, 2..=3), t in terms()) {
        let k = KTuple::new(k).unwrap();
        let v = cocycle_from(&k, &t);
        let doc = JobDocument::new(&v);
        let back = JobDocument::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.cocycle().unwrap(), v);
    }
}

#[test]
fn uniform_dimensions() {
    for k in -2..=5 {
        let dim = basis(&KTuple::uniform(3, k).unwrap()).dimension();
        assert_eq!(dim, if k >= 2 { 3 * (4 * k - 4) as usize } else { 0 });
    }
}
