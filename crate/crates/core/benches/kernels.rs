//! Kernel throughput. With the default `parallel` feature every kernel runs
//! on a one-thread rayon pool (`rayon-single`) and on a pool with one thread
//! per core (`rayon-pool`); with `--no-default-features` it runs the
//! sequential fallback (`sequential`). Kernel ids are shared across groups.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use lhydro::dynamics::{project_divergence_free, rhs, Model};
use lhydro::fields::nonlinear_term;
use lhydro::init::random_field;
use lhydro::{laplacian, Chain, LatticeConfig, SolverOptions, VectorField};

const SIZES: [usize; 2] = [16, 32];

struct Case {
    cfg: LatticeConfig,
    field: VectorField,
    chain: Chain,
}

fn cases() -> Vec<Case> {
    SIZES
        .iter()
        .map(|&n| {
            let cfg = LatticeConfig::new(n, 1.0).unwrap();
            let field = random_field(&cfg, 1, 1.0);
            let chain = field.braces();
            Case { cfg, field, chain }
        })
        .collect()
}

/// Where a kernel runs. Pool installation is per call and costs far less
/// than the smallest kernel measured here.
enum Mode {
    #[cfg(feature = "parallel")]
    Pool(rayon::ThreadPool),
    #[cfg(not(feature = "parallel"))]
    Sequential,
}

impl Mode {
    #[cfg(feature = "parallel")]
    fn all() -> Vec<(String, Mode)> {
        let pool = |t: usize| {
            Mode::Pool(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .unwrap(),
            )
        };
        vec![
            ("rayon-single".to_string(), pool(1)),
            ("rayon-pool".to_string(), pool(0)),
        ]
    }

    #[cfg(not(feature = "parallel"))]
    fn all() -> Vec<(String, Mode)> {
        vec![("sequential".to_string(), Mode::Sequential)]
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self {
            #[cfg(feature = "parallel")]
            Mode::Pool(pool) => pool.install(f),
            #[cfg(not(feature = "parallel"))]
            Mode::Sequential => f(),
        }
    }
}

fn kernels(c: &mut Criterion) {
    let cases = cases();
    let opts = SolverOptions::default();
    let model = Model::new(0.01);
    for (name, mode) in Mode::all() {
        let mut group = c.benchmark_group(name);
        group.sample_size(10);
        for case in &cases {
            let n = case.cfg.n();
            group.bench_with_input(BenchmarkId::new("laplacian_deg1", n), case, |b, case| {
                b.iter(|| black_box(mode.run(|| laplacian(&case.chain))))
            });
            group.bench_with_input(BenchmarkId::new("nonlinear_term", n), case, |b, case| {
                b.iter(|| black_box(mode.run(|| nonlinear_term(&case.field, &case.cfg))))
            });
            group.bench_with_input(BenchmarkId::new("projection", n), case, |b, case| {
                b.iter(|| {
                    black_box(mode.run(|| project_divergence_free(&case.chain, &opts).unwrap()))
                })
            });
            group.bench_with_input(BenchmarkId::new("rhs", n), case, |b, case| {
                b.iter(|| {
                    black_box(mode.run(|| rhs(&case.chain, &model, &case.cfg, &opts).unwrap()))
                })
            });
        }
        group.finish();
    }
}

criterion_group!(benches, kernels);
criterion_main!(benches);
