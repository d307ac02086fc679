//! Initial velocity fields.

use std::f64::consts::PI;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{InitKind, RunConfig};
use crate::dynamics::project_divergence_free;
use crate::error::{Error, Result};
use crate::fields::VectorField;
use crate::lattice::LatticeConfig;
use crate::snapshot::read_snapshot;

/// Portable seeded stream: ChaCha8 keyed by `seed_from_u64(seed)`; a draw
/// takes the top 53 bits of one `u64` output as a fraction in `[0, 1)`.
pub struct UniformStream(ChaCha8Rng);

impl UniformStream {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-amplitude, amplitude)`.
    pub fn symmetric(&mut self, amplitude: f64) -> f64 {
        amplitude * (2.0 * self.unit() - 1.0)
    }
}

pub fn taylor_green(cfg: &LatticeConfig, amplitude: f64) -> VectorField {
    let n = cfg.n() as f64;
    VectorField::from_fn(cfg, |q| {
        let (x, y) = (2.0 * PI * q.i as f64 / n, 2.0 * PI * q.j as f64 / n);
        [
            amplitude * x.sin() * y.cos(),
            -amplitude * x.cos() * y.sin(),
            0.0,
        ]
    })
}

/// Uniform components in `[-amplitude, amplitude)`, drawn site by site in
/// storage order, `x` then `y` then `z`.
pub fn random_field(cfg: &LatticeConfig, seed: u64, amplitude: f64) -> VectorField {
    let mut rng = UniformStream::new(seed);
    let mut v = VectorField::zeros(cfg);
    for s in 0..cfg.sites() {
        let sample = [
            rng.symmetric(amplitude),
            rng.symmetric(amplitude),
            rng.symmetric(amplitude),
        ];
        v.set(s, sample);
    }
    v
}

/// Builds the configured initial field and projects it onto
/// divergence-free fields.
pub fn make_initial(config: &RunConfig) -> Result<VectorField> {
    let cfg = config.lattice()?;
    let raw = match &config.init {
        InitKind::TaylorGreen => taylor_green(&cfg, config.amplitude),
        InitKind::RandomSolenoidal => random_field(&cfg, config.seed, config.amplitude),
        InitKind::File(path) => {
            let snap = read_snapshot(path)?;
            if snap.n != config.n {
                return Err(Error::Snapshot {
                    path: path.clone(),
                    message: format!(
                        "snapshot has n={} but the config has n={}",
                        snap.n, config.n
                    ),
                });
            }
            snap.field
        }
    };
    let u = project_divergence_free(&raw.braces(), &config.solver())?;
    VectorField::unbraces(&u)
}
