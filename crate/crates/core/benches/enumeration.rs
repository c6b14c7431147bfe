use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qwl_core::characters::{whittaker, Method};
use qwl_core::par::Exec;
use qwl_core::shapes::Partition;
use qwl_core::verify::{run_suite, Bounds};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn whittaker_sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("whittaker");
    g.sample_size(10);
    let lambda = Partition::new(vec![3, 2, 1]).unwrap();
    for method in [Method::Inv, Method::Fermionic] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(format!("{method:?}"), name), &exec, |b, &exec| {
                b.iter(|| whittaker(black_box(&lambda), 5, method, exec))
            });
        }
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let bounds = Bounds { max_cells: 6, max_n: 4 };
    for suite in ["bijection-roundtrip", "lattice-readout"] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(suite, name), &exec, |b, &exec| {
                b.iter(|| run_suite(suite, bounds, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, whittaker_sums, suites);
criterion_main!(benches);
