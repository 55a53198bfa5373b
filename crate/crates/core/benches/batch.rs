use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grossone::batch::{self, Execution};
use grossone::measure::DEFAULT_EXTRACTION_BOUND;
use grossone::numeral_system::{scan_integers, NumeralSystem, DEFAULT_SCAN_LIMIT};
use grossone::{GrossNumber, IntervalSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn random_sets(n: usize) -> Vec<IntervalSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..n)
        .map(|_| {
            IntervalSet::make_set((0..rng.gen_range(1..=8)).map(|_| {
                let lo = rng.gen_range(1..=5_000i64);
                (
                    GrossNumber::from(lo),
                    GrossNumber::from(lo + rng.gen_range(0..300)),
                )
            }))
            .unwrap()
        })
        .collect()
}

fn extraction(c: &mut Criterion) {
    let sets = random_sets(64);
    let mut group = c.benchmark_group("extraction_mismatches");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                batch::extraction_mismatches(black_box(&sets), DEFAULT_EXTRACTION_BOUND, exec)
            })
        });
    }
    group.finish();
}

fn budget_scan(c: &mut Criterion) {
    let sys = NumeralSystem::gross_budget(2, 1, 1).unwrap();
    let psi = sys.min_infinite().unwrap();
    let mut group = c.benchmark_group("scan_integers");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                scan_integers(black_box(&sys), DEFAULT_SCAN_LIMIT, exec, |x| x <= &psi).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, extraction, budget_scan);
criterion_main!(benches);
