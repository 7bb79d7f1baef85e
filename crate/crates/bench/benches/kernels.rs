use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fibra_core::{census, chowla_count, distinct_degree, generate, BiPoly, CensusOptions, Field, Perm, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bench_census(c: &mut Criterion) {
    let cover = BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)]);
    let field = Field::prime(1999).unwrap();
    let opts = CensusOptions::default();
    c.bench_function("census Y^3+Y-T q=1999", |b| {
        b.iter(|| census(black_box(&cover), &field, &opts).unwrap())
    });
}

fn bench_chowla(c: &mut Criterion) {
    c.bench_function("trinomial count n=3 p=1009", |b| {
        b.iter(|| chowla_count(3, black_box(1009)).unwrap())
    });
}

fn bench_ddf(c: &mut Criterion) {
    let field = Field::prime(10007).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut coeffs: Vec<u64> = (0..64).map(|_| rng.gen_range(0..10007)).collect();
    coeffs.push(1);
    let f = Poly::new(&field, coeffs);
    c.bench_function("distinct_degree deg 64 over F_10007", |b| {
        b.iter(|| distinct_degree(black_box(&f)).unwrap())
    });
}

fn bench_generate(c: &mut Criterion) {
    let gens = [Perm::from_cycles(7, &[&[1, 2]]).unwrap(), Perm::from_cycles(7, &[&[1, 2, 3, 4, 5, 6, 7]]).unwrap()];
    c.bench_function("generate S_7", |b| b.iter(|| generate(7, black_box(&gens)).unwrap()));
}

criterion_group!(kernels, bench_census, bench_chowla, bench_ddf, bench_generate);
criterion_main!(kernels);
