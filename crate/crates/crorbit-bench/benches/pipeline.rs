//! Benchmarks for the main pipeline stages: root-system construction, the
//! reduction tower, the fundamental group, and a full document analysis.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use crorbit::lattice::{Chamber, DynkinSpec, RootSystem};
use crorbit::parabolic::{CrAlgebraSpec, ParabolicSet};
use crorbit::realform::{catalog, CayleySet, Conjugation};
use crorbit::report::{analyze, OrbitDocument};

fn kf_document() -> OrbitDocument {
    OrbitDocument::from_json(
        r#"{
            "dynkin": "A6",
            "real_form": "sl7R",
            "cayley": ["e1-e7", "e3-e6"],
            "phi": [1, 2, 3, 4, 5, 6]
        }"#,
    )
    .unwrap()
}

fn kf_spec() -> (RootSystem, CrAlgebraSpec) {
    let rs = RootSystem::build(DynkinSpec::parse("A6").unwrap()).unwrap();
    let conj = Conjugation::from_entry(&rs, &catalog::find("sl7R").unwrap()).unwrap();
    let conj = conj
        .apply_cayley(
            &rs,
            &CayleySet::new(vec![vec![1, 1, 1, 1, 1, 1], vec![0, 0, 1, 1, 1, 0]]),
        )
        .unwrap();
    let chamber = Chamber::standard(&rs);
    let q = ParabolicSet::from_phi(&rs, &chamber, &(1..=6).collect()).unwrap();
    (rs, CrAlgebraSpec::new(conj, q))
}

fn bench_root_systems(c: &mut Criterion) {
    c.bench_function("build_root_system_e7", |b| {
        let spec = DynkinSpec::parse("E7").unwrap();
        b.iter(|| RootSystem::build(black_box(spec.clone())).unwrap())
    });
    c.bench_function("enumerate_chambers_a4", |b| {
        let rs = RootSystem::build(DynkinSpec::parse("A4").unwrap()).unwrap();
        b.iter(|| crorbit::lattice::enumerate_chambers(black_box(&rs), 200).unwrap())
    });
}

fn bench_reductions(c: &mut Criterion) {
    let (rs, spec) = kf_spec();
    c.bench_function("real_core_kf", |b| {
        b.iter(|| crorbit::reduce::real_core(black_box(&rs), black_box(&spec)))
    });
    c.bench_function("pi1_orbit_kf", |b| {
        b.iter(|| crorbit::topo::pi1_orbit(black_box(&rs), black_box(&spec)).unwrap())
    });
}

fn bench_analyze(c: &mut Criterion) {
    let doc = kf_document();
    c.bench_function("analyze_kf_document", |b| {
        b.iter(|| analyze(black_box(&doc)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let rs = RootSystem::build(DynkinSpec::parse("A2").unwrap()).unwrap();
    let conj = Conjugation::from_entry(&rs, &catalog::find("su21").unwrap()).unwrap();
    c.bench_function("oracle_reductions_a2_su21", |b| {
        b.iter(|| {
            crorbit::oracle::run_oracle(
                black_box(&rs),
                black_box(&conj),
                crorbit::oracle::OracleCheck::ReductionsMinimality,
                100,
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_root_systems,
    bench_reductions,
    bench_analyze,
    bench_oracle
);
criterion_main!(benches);
