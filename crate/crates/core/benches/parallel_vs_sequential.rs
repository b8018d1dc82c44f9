use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use runstruct::enumerate::{apply_operator_with, atomic_polys, OperatorChain, OperatorKind};
use runstruct::oracle::{tally_run_structures, OracleConfig, PermutationKind};
use runstruct::{Assignment, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn operator_step(c: &mut Criterion) {
    let mut group = c.benchmark_group("operator_step");
    group.sample_size(10);
    for n in [30usize, 38] {
        let a = atomic_polys(n);
        let an = a.get(n).unwrap();
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), an, |b, p| {
                b.iter(|| apply_operator_with(OperatorKind::D, p, strategy))
            });
        }
    }
    group.finish();
}

fn linear_chain(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_chain_to_30");
    group.sample_size(10);
    for (name, strategy) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| OperatorChain::linear(strategy).take(31).last())
        });
    }
    group.finish();
}

fn product_and_evaluate(c: &mut Criterion) {
    let mut group = c.benchmark_group("product_and_evaluate");
    group.sample_size(10);
    let a = atomic_polys(24);
    let (p, q) = (a.get(24).unwrap(), a.get(20).unwrap());
    let ones = Assignment::ones();
    for (name, strategy) in STRATEGIES {
        group.bench_function(BenchmarkId::new("mul", name), |b| {
            b.iter(|| p.mul_with(q, strategy))
        });
        group.bench_function(BenchmarkId::new("evaluate", name), |b| {
            b.iter(|| p.evaluate_with(&ones, strategy).unwrap())
        });
    }
    group.finish();
}

fn oracle_tally(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_tally_circular_9");
    group.sample_size(10);
    for (name, strategy) in STRATEGIES {
        let config = OracleConfig {
            strategy,
            ..OracleConfig::default()
        };
        group.bench_function(name, |b| {
            b.iter(|| tally_run_structures(PermutationKind::Circular, 9, &config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, operator_step, linear_chain, product_and_evaluate, oracle_tally);
criterion_main!(benches);
