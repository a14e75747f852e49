use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use rootgeo::embeddings::{check_equivariance, EmbeddingKind};
use rootgeo::exec;
use rootgeo::ronan::ronan_cover;
use rootgeo::RunConfig;

fn ronan(c: &mut Criterion) {
    let mut group = c.benchmark_group("ronan_cover_n3_q2");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| ronan_cover(black_box(3), 2, EmbeddingKind::Natural).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| exec::sequential(|| ronan_cover(black_box(3), 2, EmbeddingKind::Natural).unwrap()))
    });
    group.finish();
}

fn equivariance(c: &mut Criterion) {
    let cfg = RunConfig::new("fp(t):5".parse().unwrap(), 3, 100, 1).unwrap();
    let mut group = c.benchmark_group("equivariance_fp5t_n3_100");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| check_equivariance(black_box(&cfg)).unwrap()));
    group.bench_function("sequential", |b| {
        b.iter(|| exec::sequential(|| check_equivariance(black_box(&cfg)).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, ronan, equivariance);
criterion_main!(benches);
