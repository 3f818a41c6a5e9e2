use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fibrous_bench::{catalog_terms, sphere, EXPRESSIONS};
use fibrous_core::oracle::{homology, smith_normal_form};
use fibrous_core::{chi, expand, parse, render, Catalog, Evaluator};

fn evaluation(c: &mut Criterion) {
    let catalog = Catalog::builtin();
    let mut group = c.benchmark_group("chi");
    for n in [4u64, 16, 64] {
        for (name, term) in catalog_terms(n) {
            group.bench_with_input(BenchmarkId::new(name, n), &term, |b, t| {
                b.iter(|| Evaluator::new(catalog).chi(black_box(t)).unwrap().chi)
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("expand");
    for n in [4u64, 16] {
        let term = fibrous_core::SpaceTerm::catalog("M", vec![n]);
        group.bench_with_input(BenchmarkId::new("M", n), &term, |b, t| {
            b.iter(|| expand(black_box(t), catalog).unwrap())
        });
    }
    group.finish();
}

fn dsl(c: &mut Criterion) {
    let mut group = c.benchmark_group("dsl");
    for (i, text) in EXPRESSIONS.iter().enumerate() {
        let term = parse(text).unwrap();
        group.bench_with_input(BenchmarkId::new("parse", i), text, |b, s| {
            b.iter(|| parse(black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("render", i), &term, |b, t| {
            b.iter(|| render(black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("parse+chi", i), text, |b, s| {
            b.iter(|| {
                chi(&parse(black_box(s)).unwrap(), Catalog::builtin())
                    .unwrap()
                    .chi
            })
        });
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    for dim in [3usize, 5, 7] {
        let complex = sphere(dim);
        let top = complex.boundary_matrix(dim - 1).unwrap();
        group.bench_with_input(BenchmarkId::new("snf-top-boundary", dim), &top, |b, m| {
            b.iter(|| smith_normal_form(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("homology", dim), &complex, |b, k| {
            b.iter(|| homology(black_box(k)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, evaluation, dsl, oracles);
criterion_main!(benches);
