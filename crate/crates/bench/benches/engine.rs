use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tensorideal_bench::{field_pairs, polynomials, reducible_tensor, sum_tensor};
use tensorideal_core::exact::factor::factor_over_q;
use tensorideal_core::ideal::oracle::TruncatedModel;
use tensorideal_core::ideal::{check_admissibility, classify_ideal_of, rank_reduction, replay_certificate};
use tensorideal_core::{EngineConfig, FieldTensorRing, NearlySimpleDescriptor};

fn factoring(c: &mut Criterion) {
    let mut g = c.benchmark_group("factor_over_q");
    for (name, p, _) in polynomials() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| factor_over_q(black_box(p)).unwrap())
        });
    }
    g.finish();
}

fn field_rings(c: &mut Criterion) {
    let mut g = c.benchmark_group("field_tensor_ring");
    for (name, k, l) in field_pairs() {
        g.bench_function(name, |b| {
            b.iter(|| {
                let ring = FieldTensorRing::build(black_box(&k), black_box(&l), 8).unwrap();
                ring.decompose()
            })
        });
    }
    g.finish();
}

fn admissibility(c: &mut Criterion) {
    let pairs = field_pairs();
    let (k, l) = (&pairs[2].1, &pairs[2].2);
    let a = NearlySimpleDescriptor::new(k.clone(), l.clone());
    let b = NearlySimpleDescriptor::new(l.clone(), k.clone());
    let cfg = EngineConfig::default();
    c.bench_function("check_admissibility/cubic-cyclotomic", |bch| {
        bch.iter(|| check_admissibility(black_box(&a), black_box(&b), &cfg).unwrap())
    });
}

fn classification(c: &mut Criterion) {
    let cfg = EngineConfig::default();
    let mut g = c.benchmark_group("classify_ideal_of");
    for rank in [2, 4, 8] {
        let t = sum_tensor(rank);
        g.bench_with_input(BenchmarkId::from_parameter(rank), &t, |b, t| {
            b.iter(|| classify_ideal_of(black_box(t), &cfg).unwrap())
        });
    }
    g.finish();
}

fn reduction(c: &mut Criterion) {
    let cfg = EngineConfig::default();
    let mut g = c.benchmark_group("rank_reduction");
    for rank in [2, 3, 4, 6] {
        let t = reducible_tensor(rank);
        g.bench_with_input(BenchmarkId::new("certify", rank), &t, |b, t| {
            b.iter(|| rank_reduction(black_box(t), 0, &cfg).unwrap())
        });
        let cert = rank_reduction(&t, 0, &cfg).unwrap();
        g.bench_with_input(BenchmarkId::new("replay", rank), &t, |b, t| {
            b.iter(|| replay_certificate(black_box(t), &cert).unwrap())
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("truncated_oracle");
    g.sample_size(10);
    for rank in [2, 3] {
        let t = sum_tensor(rank);
        let model = TruncatedModel::fitting(4, &[&t]);
        g.bench_with_input(BenchmarkId::new("tag_of", rank), &t, |b, t| b.iter(|| model.tag_of(black_box(t))));
        g.bench_with_input(BenchmarkId::new("closure", rank), &t, |b, t| {
            b.iter(|| model.closure(black_box(t)).tag())
        });
    }
    g.finish();
}

criterion_group!(benches, factoring, field_rings, admissibility, classification, reduction, oracle);
criterion_main!(benches);
