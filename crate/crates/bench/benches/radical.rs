use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use raddeg_bench::fixtures;
use raddeg_core::degrees::{degree, fixture_reports, PlacedMorphism, Side, Theorem};
use raddeg_core::{RadicalTable, DEFAULT_CAP};

fn radical_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("radical_table");
    for fx in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&fx.name), &fx, |b, fx| {
            b.iter(|| RadicalTable::build(&fx.catalogue, DEFAULT_CAP).unwrap())
        });
    }
    group.finish();
}

fn degrees(c: &mut Criterion) {
    let mut group = c.benchmark_group("degrees");
    for fx in fixtures() {
        let t = RadicalTable::build(&fx.catalogue, DEFAULT_CAP).unwrap();
        let maps: Vec<PlacedMorphism> = (0..t.len())
            .flat_map(|i| (0..t.len()).map(move |j| (i, j)))
            .flat_map(|(i, j)| t.irr(i, j).basis)
            .map(|g| PlacedMorphism::new(&t, &g).unwrap())
            .collect();
        group.bench_function(BenchmarkId::from_parameter(&fx.name), |b| {
            b.iter(|| {
                for f in &maps {
                    degree(&t, f, Side::Left).unwrap();
                    degree(&t, f, Side::Right).unwrap();
                }
            })
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for fx in fixtures() {
        let t = RadicalTable::build(&fx.catalogue, DEFAULT_CAP).unwrap();
        group.bench_function(BenchmarkId::from_parameter(&fx.name), |b| {
            b.iter(|| fixture_reports(&t, &fx.name, &Theorem::ALL).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, radical_table, degrees, sweep);
criterion_main!(benches);
