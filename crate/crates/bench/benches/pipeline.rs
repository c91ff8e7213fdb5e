use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use cp1moduli::aut::{int_action, int_action_formula};
use cp1moduli::cech::{cohomology_dimension, reduce, t2_shapes, CoboundarySolver};
use cp1moduli::moduli::{moduli_point, to_matrix};
use cp1moduli::{BundleAut, Chart, Cocycle, KTuple, Matrix, Scalar, VectorField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_cocycle(rng: &mut ChaCha8Rng, k: &KTuple, terms: usize) -> Cocycle {
    let shapes = t2_shapes(k.m());
    let mut v = VectorField::zero(k.m(), Chart::U0);
    for _ in 0..terms {
        let (d, w) = shapes[rng.gen_range(0..shapes.len())];
        let c = Scalar::gaussian((rng.gen_range(-5..=5), rng.gen_range(1..=4)), (rng.gen_range(-2..=2), 1)).unwrap();
        v.add_term(d, w, rng.gen_range(-8..=8), &c);
    }
    Cocycle::new(k.clone(), v).unwrap()
}

fn reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 2..=4 {
        let k = KTuple::uniform(3, k).unwrap();
        let v = random_cocycle(&mut rng, &k, 24);
        group.bench_with_input(BenchmarkId::new("rules", &k), &v, |b, v| b.iter(|| reduce(black_box(v))));
        let solver = CoboundarySolver::new(&k, -8).unwrap();
        group.bench_with_input(BenchmarkId::new("solver", &k), &v, |b, v| b.iter(|| solver.solve(black_box(v)).unwrap()));
    }
    group.finish();
}

fn solver_setup(c: &mut Criterion) {
    let k = KTuple::new(vec![4, 3, 1]).unwrap();
    c.bench_function("solver setup (4,3,1)", |b| b.iter(|| CoboundarySolver::new(black_box(&k), -8).unwrap()));
    c.bench_function("cohomology dimension (4,3,1)", |b| b.iter(|| cohomology_dimension(black_box(&k))));
}

fn action(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let k = KTuple::uniform(3, 3).unwrap();
    let m = Matrix::from_rows(
        vec![
            vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(0)],
            vec![Scalar::from_int(0), Scalar::from_int(1), Scalar::from_int(-1)],
            vec![Scalar::from_int(3), Scalar::from_int(0), Scalar::from_int(1)],
        ],
        3,
    )
    .unwrap();
    let a = BundleAut::from_matrix(k.clone(), &m).unwrap();
    let v = random_cocycle(&mut rng, &k, 24);
    c.bench_function("int action formula", |b| b.iter(|| int_action_formula(black_box(&a), black_box(&v)).unwrap()));
    c.bench_function("int action oracle", |b| b.iter(|| int_action(black_box(&a), black_box(&v)).unwrap()));
}

fn classification(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let k = KTuple::uniform(3, 4).unwrap();
    let class = reduce(&random_cocycle(&mut rng, &k, 40));
    c.bench_function("moduli point k=4", |b| b.iter(|| moduli_point(&to_matrix(black_box(&class)).unwrap())));
}

criterion_group!(benches, reduction, solver_setup, action, classification);
criterion_main!(benches);
