//! Parallel versus sequential timing of the two heaviest check grids.
//! With the default "parallel" feature the parallel entries run on the
//! rayon pool; built with --no-default-features both entries time the
//! same sequential path.

use criterion::{criterion_group, criterion_main, Criterion};
use quatmult_core::params::FieldParams;
use quatmult_core::selftest::{sym_oracle_cases, tensor_oracle_cases};

fn bench_tensor_oracle(c: &mut Criterion) {
    let params = FieldParams::new(5, 1).expect("valid parameters");
    let mut group = c.benchmark_group("tensor_oracle_q5");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| tensor_oracle_cases(params, false).expect("grid passes"))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| tensor_oracle_cases(params, true).expect("grid passes"))
    });
    group.finish();
}

fn bench_sym_oracle(c: &mut Criterion) {
    let params = FieldParams::new(7, 1).expect("valid parameters");
    let mut group = c.benchmark_group("sym_oracle_p7");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| sym_oracle_cases(params, 24, false).expect("grid passes"))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sym_oracle_cases(params, 24, true).expect("grid passes"))
    });
    group.finish();
}

criterion_group!(grids, bench_tensor_oracle, bench_sym_oracle);
criterion_main!(grids);
