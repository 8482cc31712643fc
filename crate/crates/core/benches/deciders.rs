use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use factorlab::constructions::g_na;
use factorlab::factor::{decide_by_criterion, Limits, ParityParams};
use factorlab::harness::corpus::connected_corpus;
use factorlab::harness::grids::degree_bound_grid;
use factorlab::harness::oracle::{sweep_oracle_equivalence, SWEEP_PARAMS};
use factorlab::harness::sampler::{connected_min_degree, sample_rng};
use factorlab::harness::survey::survey_theorem;
use factorlab::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn criterion_decider(c: &mut Criterion) {
    let mut group = c.benchmark_group("criterion_decider");
    group.sample_size(10);
    let params = ParityParams::new(2, 4).unwrap();
    let mut rng = sample_rng(3, 0);
    let inputs = [
        ("g_na_14", g_na(14, 2).unwrap().graph),
        (
            "random_14",
            connected_min_degree(14, 2, 0.5, &mut rng).unwrap(),
        ),
    ];
    for (label, g) in &inputs {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, label), g, |bench, g| {
                bench.iter(|| {
                    decide_by_criterion(black_box(g), &params, Limits::batch(), exec).unwrap()
                })
            });
        }
    }
    group.finish();
}

fn oracle_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_sweep");
    group.sample_size(10);
    let corpus = connected_corpus(7).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |bench| {
            bench.iter(|| sweep_oracle_equivalence(black_box(&corpus), &SWEEP_PARAMS, exec))
        });
    }
    group.finish();
}

fn survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey_n12");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |bench| {
            bench.iter(|| survey_theorem(12, 2, 4, 200, 1, exec).unwrap())
        });
    }
    group.finish();
}

fn spectral_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("degree_bound_grid");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |bench| {
            bench.iter(|| degree_bound_grid(black_box(500), 1, exec))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    criterion_decider,
    oracle_sweep,
    survey,
    spectral_grid
);
criterion_main!(benches);
