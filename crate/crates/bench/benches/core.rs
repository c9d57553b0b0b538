use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use maxab_bench::bench_groups;
use maxab_core::catalog::enumerate_groups_of_order;
use maxab_core::{all_subgroups, maximal_abelian_subgroups, run_checks, SuiteOptions, TheoremId};

fn maximal_abelian(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximal_abelian_subgroups");
    for g in bench_groups() {
        group.bench_with_input(BenchmarkId::from_parameter(g.name()), &g, |b, g| {
            b.iter(|| maximal_abelian_subgroups(black_box(g)))
        });
    }
    group.finish();
}

fn subgroups(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_subgroups");
    group.sample_size(20);
    for g in bench_groups() {
        group.bench_with_input(BenchmarkId::from_parameter(g.name()), &g, |b, g| {
            b.iter(|| all_subgroups(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_checks");
    group.sample_size(10);
    for g in bench_groups() {
        group.bench_with_input(BenchmarkId::from_parameter(g.name()), &g, |b, g| {
            b.iter(|| run_checks(black_box(g), &TheoremId::ALL, &SuiteOptions::default()))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_groups_of_order");
    group.sample_size(10);
    for n in [8, 12, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_groups_of_order(black_box(n)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, maximal_abelian, subgroups, suite, enumeration);
criterion_main!(benches);
