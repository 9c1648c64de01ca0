use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use itline::oracles::{collapsible, hamiltonian, spanning_closed_trail, st_supereulerian};
use itline::triangular::triangle_counts;
use itline::{line_graph, named};
use itline_bench::{family, level};

const BUDGET: u64 = 2_000_000;

fn line_graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("line_graph");
    for (name, g) in family() {
        let l2 = level(&g, 2);
        group.bench_with_input(BenchmarkId::new("L^3", name), &l2, |b, g| b.iter(|| line_graph(g).unwrap()));
    }
    group.finish();
}

fn triangles(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangle_counts");
    for (name, g) in family() {
        let l3 = level(&g, 3);
        group.bench_with_input(BenchmarkId::new("L^3", name), &l3, |b, g| b.iter(|| triangle_counts(g)));
    }
    group.finish();
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(20);
    for (name, g) in family() {
        let l1 = level(&g, 1);
        group.bench_with_input(BenchmarkId::new("hamiltonian L", name), &l1, |b, g| b.iter(|| hamiltonian(g, BUDGET).unwrap()));
        group.bench_with_input(BenchmarkId::new("spanning_trail", name), &g, |b, g| {
            b.iter(|| spanning_closed_trail(g, BUDGET).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("st_supereulerian(1,1) L", name), &l1, |b, g| {
            b.iter(|| st_supereulerian(g, 1, 1, BUDGET).unwrap())
        });
    }
    let k5 = named::complete(5);
    group.bench_function("collapsible K5", |b| b.iter(|| collapsible(&k5, 14).unwrap()));
    group.finish();
}

criterion_group!(benches, line_graphs, triangles, oracles);
criterion_main!(benches);
