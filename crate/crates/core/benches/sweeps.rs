//! One-worker versus all-worker timings of the bulk sweeps.
//!
//! `cargo bench -p mincode` runs both variants through the rayon pool;
//! `cargo bench -p mincode --no-default-features` builds the sequential
//! fallback, where both variants take the same path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mincode::hwconstruct::{build_spec, HWParams};
use mincode::minimality::{is_minimal_bruteforce, theorem2_check, CheckOptions, StopPolicy};
use mincode::spectrum::{transform, transform_naive};
use mincode::{par, CodeSpec, TernaryFunction};

fn random_spec(m: usize, seed: u64) -> CodeSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let f = TernaryFunction::random_vanishing(m, &mut rng).unwrap();
        let g = TernaryFunction::random_vanishing(m, &mut rng).unwrap();
        if let Ok(s) = CodeSpec::validate(f, g) {
            return s;
        }
    }
}

fn workers() -> [(&'static str, usize); 2] {
    [("1", 1), ("all", 0)]
}

fn bench_transforms(c: &mut Criterion) {
    let mut g = c.benchmark_group("transform");
    let f9 = TernaryFunction::random_vanishing(9, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
    let f6 = TernaryFunction::random_vanishing(6, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
    for (name, threads) in workers() {
        g.bench_function(BenchmarkId::new("fast_m9", name), |b| {
            par::with_threads(threads, || b.iter(|| transform(&f9).unwrap()))
        });
        g.bench_function(BenchmarkId::new("naive_m6", name), |b| {
            par::with_threads(threads, || b.iter(|| transform_naive(&f6).unwrap()))
        });
    }
    g.finish();
}

fn bench_enumerators(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerators");
    g.sample_size(10);
    let spec = build_spec(&HWParams::new(9, 2, 4).unwrap()).unwrap();
    for (name, threads) in workers() {
        g.bench_function(BenchmarkId::new("weights_m9", name), |b| {
            par::with_threads(threads, || b.iter(|| spec.weight_distribution()))
        });
        g.bench_function(BenchmarkId::new("cwe_m9", name), |b| par::with_threads(threads, || b.iter(|| spec.cwe())));
    }
    g.finish();
}

fn bench_minimality(c: &mut Criterion) {
    let mut g = c.benchmark_group("minimality");
    g.sample_size(10);
    let s6 = random_spec(6, 3);
    let s4 = random_spec(4, 4);
    let full = CheckOptions { stop: StopPolicy::Exhaustive { max_witnesses: 0 }, deadline: None };
    for (name, threads) in workers() {
        g.bench_function(BenchmarkId::new("spectral_m6", name), |b| {
            par::with_threads(threads, || b.iter(|| theorem2_check(&s6, &full).unwrap()))
        });
        g.bench_function(BenchmarkId::new("bruteforce_m4", name), |b| {
            par::with_threads(threads, || b.iter(|| is_minimal_bruteforce(&s4).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_transforms, bench_enumerators, bench_minimality);
criterion_main!(benches);
