use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use parity_descents::genocchi::dumont_count;
use parity_descents::{
    brute_distribution, closed_form_poly, family_poly, Family, Limits, RecursiveBijections,
};

fn recursion_vs_closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("family_poly");
    for n in [10, 30, 50] {
        group.bench_with_input(BenchmarkId::new("recursion", n), &n, |b, &n| {
            b.iter(|| family_poly(Family::P, black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| closed_form_poly(Family::P, black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for n in [7, 8, 9] {
        group.bench_with_input(BenchmarkId::new("brute_distribution", n), &n, |b, &n| {
            b.iter(|| brute_distribution(black_box(n), Family::R, &limits).unwrap())
        });
    }
    group.bench_function("dumont_count/9", |b| {
        b.iter(|| dumont_count(black_box(9), &limits).unwrap())
    });
    group.finish();
}

fn matchings(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("recursive_bijections");
    group.sample_size(10);
    for n in [6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| RecursiveBijections::build(black_box(n), &limits).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, recursion_vs_closed_form, enumeration, matchings);
criterion_main!(benches);
