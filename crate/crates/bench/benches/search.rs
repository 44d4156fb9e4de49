use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use supermagic_core::{build_graph_structural, find_labelings, FamilySpec, Graph, SearchConfig};

fn search(c: &mut Criterion) {
    let k3 = Graph::complete(3);
    c.bench_function("search K3 exhaustive", |b| {
        b.iter(|| find_labelings(black_box(&k3), &SearchConfig::new(3)).unwrap())
    });

    let fan = build_graph_structural(&FamilySpec::Fans { m: 1, n: 3 }).unwrap();
    c.bench_function("search F3 exhaustive", |b| {
        b.iter(|| find_labelings(black_box(&fan), &SearchConfig::new(3)).unwrap())
    });

    let wheel = build_graph_structural(&FamilySpec::Wheels { m: 1, n: 4 }).unwrap();
    let first = SearchConfig { limit: 1, ..SearchConfig::new(3) };
    c.bench_function("search W4 first solution", |b| b.iter(|| find_labelings(black_box(&wheel), &first).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = search
}
criterion_main!(benches);
