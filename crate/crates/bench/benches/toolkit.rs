use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ferrers_core::bounds::{conflict_graph, dilworth_width, induced_matching_number, Side};
use ferrers_core::constructions::crown_partition;
use ferrers_core::recognition::is_ferrers;
use ferrers_core::solver::{fp_exact_with, verify_partition, SolverConfig};
use ferrers_core::FamilySpec;

fn bench_recognition(c: &mut Criterion) {
    let mut group = c.benchmark_group("recognition");
    for n in [32usize, 64, 128] {
        let (g, p) = crown_partition(n).unwrap();
        let part = p.part(0).to_vec();
        group.bench_with_input(BenchmarkId::new("crown_triangle", n), &n, |b, _| {
            b.iter(|| is_ferrers(&g, &part).unwrap().is_ferrers());
        });
    }
    group.finish();
}

fn bench_bounds(c: &mut Criterion) {
    let mut group = c.benchmark_group("bounds");
    let ladder = FamilySpec::Ladder(8).generate().unwrap();
    group.bench_function("nu_ind_ladder8", |b| {
        b.iter(|| induced_matching_number(&ladder).0);
    });
    let crown = FamilySpec::Crown(50).generate().unwrap();
    group.bench_function("width_crown50", |b| {
        b.iter(|| dilworth_width(&crown, Side::U).width);
    });
    let cycle = FamilySpec::Cycle(40).generate().unwrap();
    group.bench_function("conflict_graph_cycle40", |b| {
        b.iter(|| conflict_graph(&cycle).edge_count());
    });
    group.finish();
}

fn bench_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solver");
    let cfg = SolverConfig::default();
    for spec in [
        FamilySpec::Cycle(12),
        FamilySpec::Crown(5),
        FamilySpec::Ladder(5),
    ] {
        let g = spec.generate().unwrap();
        group.bench_with_input(
            BenchmarkId::new("fp_exact", spec.to_string()),
            &g,
            |b, g| {
                b.iter(|| fp_exact_with(g, &cfg).unwrap().value);
            },
        );
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let (g, p) = crown_partition(100).unwrap();
    c.bench_function("verify_crown_partition_100", |b| {
        b.iter(|| verify_partition(&g, &p).is_ok());
    });
}

criterion_group!(benches, bench_recognition, bench_bounds, bench_solver, bench_verify);
criterion_main!(benches);
