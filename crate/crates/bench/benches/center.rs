use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use alcove_core::center::{bernstein_trace, translation_trace_scalar, CentralElement, DEFAULT_MULTIPLICITY};
use alcove_core::charring::{to_fundamental_basis, weyl_character, LaurentRing};
use alcove_core::gkm::check_pushforward_commutation;
use alcove_core::linkage::{block_label, enumerate_blocks, enumerate_minus_blocks};
use alcove_core::{root_datum_from_str, Weight};

fn characters(c: &mut Criterion) {
    let d = root_datum_from_str("A2").unwrap();
    let lambda = Weight(vec![3, 2]);
    c.bench_function("weyl_character A2 (3,2)", |b| {
        b.iter(|| weyl_character(&d, &LaurentRing, black_box(&lambda)).unwrap())
    });
    let ch = weyl_character(&d, &LaurentRing, &lambda).unwrap();
    c.bench_function("to_fundamental_basis A2 (3,2)", |b| b.iter(|| to_fundamental_basis(&d, black_box(&ch)).unwrap()));
}

fn traces(c: &mut Criterion) {
    let d = root_datum_from_str("A2").unwrap();
    let f = CentralElement::fundamental(&d, &LaurentRing, 0).mul(&CentralElement::fundamental(&d, &LaurentRing, 1));
    c.bench_function("bernstein_trace A2 V(ρ)", |b| b.iter(|| bernstein_trace(&d, &d.rho, black_box(&f)).unwrap()));

    let mut group = c.benchmark_group("translation scalar");
    group.sample_size(10);
    let a1 = root_datum_from_str("A1").unwrap();
    let singular = block_label(&a1, 3, &Weight(vec![2]));
    group.bench_function("A1 l=3 ω=2", |b| b.iter(|| translation_trace_scalar(&a1, &singular, DEFAULT_MULTIPLICITY).unwrap()));
    let vertex = enumerate_blocks(&d, 5).unwrap().into_iter().find(|b| b.stabilizer_order() == 6).unwrap();
    group.bench_function("A2 l=5 vertex", |b| b.iter(|| translation_trace_scalar(&d, &vertex, DEFAULT_MULTIPLICITY).unwrap()));
    group.finish();
}

fn pushforwards(c: &mut Criterion) {
    let d = root_datum_from_str("A2").unwrap();
    let block = enumerate_minus_blocks(&d, 5).unwrap().into_iter().find(|b| !b.is_regular()).unwrap();
    let mut group = c.benchmark_group("fixed points");
    group.sample_size(10);
    group.bench_function("commutation check A2 deg 3 trunc 3", |b| b.iter(|| check_pushforward_commutation(&d, &block, 3, 3).unwrap()));
    group.finish();
}

criterion_group!(benches, characters, traces, pushforwards);
criterion_main!(benches);
