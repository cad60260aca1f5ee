use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use flagsub::harness::{random_flag_sphere, random_simplex_subdivision, GeneratorSpec};
use flagsub::{barycentric_subdivision, classify, h_polynomial, local_h, validate, FieldSpec, ValidationMode};

fn spheres(c: &mut Criterion) {
    let mut group = c.benchmark_group("sphere");
    for d in [3, 4, 5] {
        let g = random_flag_sphere(&GeneratorSpec::new(d, 12, 1)).unwrap();
        let k = g.complex().clone();
        group.bench_with_input(BenchmarkId::new("h_polynomial", d), &k, |b, k| {
            b.iter(|| h_polynomial(black_box(k)))
        });
        group.bench_with_input(BenchmarkId::new("classify_gf2", d), &k, |b, k| {
            b.iter(|| classify(black_box(k), FieldSpec::Gf2))
        });
    }
    group.finish();
}

fn subdivisions(c: &mut Criterion) {
    let mut group = c.benchmark_group("simplex");
    for d in [3, 4, 5] {
        let s = random_simplex_subdivision(&GeneratorSpec::new(d, 8, 2), "a", false)
            .unwrap()
            .map;
        group.bench_with_input(BenchmarkId::new("local_h", d), &s, |b, s| {
            b.iter(|| local_h(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("validate_fast", d), &s, |b, s| {
            b.iter(|| validate(black_box(s), ValidationMode::Fast))
        });
    }
    let names: Vec<String> = (0..5).map(|i| format!("x{i}")).collect();
    let bary = barycentric_subdivision(&names).unwrap();
    group.bench_function("validate_full_barycentric_5", |b| {
        b.iter(|| validate(black_box(&bary), ValidationMode::Full(FieldSpec::Gf2)))
    });
    group.finish();
}

criterion_group!(benches, spheres, subdivisions);
criterion_main!(benches);
