use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use supermagic_bench::representative_specs;
use supermagic_core::{build_graph, construct, covering_cycles_in, enumerate_cycles, verify, Mode};

fn labelers(c: &mut Criterion) {
    for spec in representative_specs() {
        c.bench_function(&format!("construct {spec}"), |b| b.iter(|| construct(black_box(&spec)).unwrap()));
    }
}

fn verification(c: &mut Criterion) {
    for spec in representative_specs() {
        let g = build_graph(&spec).unwrap();
        let cycles = covering_cycles_in(&spec, &g).unwrap();
        let lab = construct(&spec).unwrap().labeling;
        let k = spec.cycle_length();
        c.bench_function(&format!("verify covering {spec}"), |b| {
            b.iter(|| verify(&g, black_box(&lab), k, Mode::Covering, Some(&cycles)).unwrap())
        });
        c.bench_function(&format!("enumerate {spec}"), |b| b.iter(|| enumerate_cycles(black_box(&g), k).unwrap()));
    }
}

criterion_group!(benches, labelers, verification);
criterion_main!(benches);
