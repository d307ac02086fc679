//! Command implementations behind the `lhydro` binary: simulation with
//! diagnostics and snapshot output, Hodge decomposition of a snapshot, and
//! the verification suite.

use std::fmt;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::config::RunConfig;
use crate::dynamics::{self, suggest_dt, SimState};
use crate::error::{Error, Result};
use crate::hodge::hodge_decompose;
use crate::init::make_initial;
use crate::lattice::Axis;
use crate::operators::{boundary, coboundary, star};
use crate::snapshot::{read_snapshot, write_snapshot};
use crate::verify::{run_verify, VerifyOptions, VerifyReport};

pub const DIAGNOSTICS_HEADER: &str = "step,t,kinetic_energy,divergence_norm,enstrophy,px,py,pz";

/// One `diagnostics.csv` row.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticsRow {
    pub step: u64,
    pub t: f64,
    pub kinetic_energy: f64,
    pub divergence_norm: f64,
    pub enstrophy: f64,
    pub momentum: [f64; 3],
}

impl DiagnosticsRow {
    pub fn of(state: &SimState) -> Result<Self> {
        let u = &state.u;
        let sites = state.config.sites();
        Ok(Self {
            step: state.step,
            t: state.t,
            kinetic_energy: 0.5 * u.norm_squared(),
            divergence_norm: boundary(u)?.norm(),
            enstrophy: star(&coboundary(u)?).norm_squared(),
            momentum: Axis::ALL.map(|a| {
                u.coeffs()[a.index() * sites..(a.index() + 1) * sites]
                    .iter()
                    .sum()
            }),
        })
    }
}

impl fmt::Display for DiagnosticsRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [px, py, pz] = self.momentum;
        write!(
            f,
            "{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            self.step,
            self.t,
            self.kinetic_energy,
            self.divergence_norm,
            self.enstrophy,
            px,
            py,
            pz
        )
    }
}

#[derive(Debug, Clone)]
pub struct SimulateSummary {
    pub steps: u64,
    pub dt: f64,
    pub rows: Vec<DiagnosticsRow>,
    pub snapshots: Vec<PathBuf>,
    /// Largest `|∂u| / |u|` over the written rows (0 for a zero field).
    pub max_relative_divergence: f64,
}

pub fn snapshot_path(out_dir: &Path, step: u64) -> PathBuf {
    out_dir.join(format!("snapshot_{step}.csv"))
}

/// Step count and step size: `dt = 0` means the suggested step, which is
/// then shrunk so that an integer number of steps lands on `t_end`.
pub fn plan_steps(t_end: f64, dt: f64) -> (u64, f64) {
    if t_end == 0.0 {
        return (0, dt);
    }
    let steps = (t_end / dt).ceil().max(1.0) as u64;
    (steps, t_end / steps as f64)
}

/// Integrates from the configured initial field to `t_end`, writing
/// `diagnostics.csv` and snapshots at step 0, every `output_every` steps
/// and the final step.
pub fn simulate(config: &RunConfig) -> Result<SimulateSummary> {
    let cfg = config.lattice()?;
    let u = make_initial(config)?.braces();
    let mut state = SimState::new(cfg, u, config.model(), config.dt, config.solver());
    let dt = if config.dt > 0.0 {
        config.dt
    } else {
        suggest_dt(&state)
    };
    let (steps, dt) = plan_steps(config.t_end, dt);
    state.dt = dt;

    fs::create_dir_all(&config.out_dir)?;
    let mut csv = BufWriter::new(File::create(config.out_dir.join("diagnostics.csv"))?);
    writeln!(csv, "{DIAGNOSTICS_HEADER}")?;
    let mut summary = SimulateSummary {
        steps,
        dt,
        rows: Vec::new(),
        snapshots: Vec::new(),
        max_relative_divergence: 0.0,
    };

    let mut emit = |state: &SimState, summary: &mut SimulateSummary| -> Result<()> {
        let row = DiagnosticsRow::of(state)?;
        writeln!(csv, "{row}")?;
        let norm = state.u.norm();
        if norm > 0.0 {
            summary.max_relative_divergence = summary
                .max_relative_divergence
                .max(row.divergence_norm / norm);
        }
        let path = snapshot_path(&config.out_dir, state.step);
        write_snapshot(&path, &state.field(), &state.config, state.t)?;
        summary.rows.push(row);
        summary.snapshots.push(path);
        Ok(())
    };

    emit(&state, &mut summary)?;
    for k in 1..=steps {
        state = dynamics::step(&state, config.scheme)?;
        state.t = if k == steps {
            config.t_end
        } else {
            k as f64 * dt
        };
        if k % config.output_every == 0 || k == steps {
            emit(&state, &mut summary)?;
        }
    }
    csv.flush()?;
    Ok(summary)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposeReport {
    pub norm: f64,
    pub exact: f64,
    pub coexact: f64,
    pub harmonic: f64,
    pub divergence_norm: f64,
}

impl fmt::Display for DecomposeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "norm            {:.16e}", self.norm)?;
        writeln!(f, "exact_norm      {:.16e}", self.exact)?;
        writeln!(f, "coexact_norm    {:.16e}", self.coexact)?;
        writeln!(f, "harmonic_norm   {:.16e}", self.harmonic)?;
        writeln!(f, "divergence_norm {:.16e}", self.divergence_norm)
    }
}

/// Hodge norms of the braces chain of a snapshot field, unprojected.
pub fn decompose(config: &RunConfig, snapshot: &Path) -> Result<DecomposeReport> {
    let snap = read_snapshot(snapshot)?;
    if snap.n != config.n {
        return Err(Error::Snapshot {
            path: snapshot.to_path_buf(),
            message: format!(
                "snapshot has n={} but the config has n={}",
                snap.n, config.n
            ),
        });
    }
    let u = snap.field.braces();
    let [exact, coexact, harmonic] = hodge_decompose(&u, &config.solver())?.norms();
    Ok(DecomposeReport {
        norm: u.norm(),
        exact,
        coexact,
        harmonic,
        divergence_norm: boundary(&u)?.norm(),
    })
}

pub fn verify(config: &RunConfig, corrupt_star: bool) -> Result<VerifyReport> {
    run_verify(&VerifyOptions {
        seed: config.seed,
        corrupt_star,
        ..VerifyOptions::new(config.n)
    })
}
