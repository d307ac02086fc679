//! Right-hand side of the momentum ODE, pressure projection and explicit
//! time stepping.

use std::str::FromStr;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::fields::{nonlinear_term, VectorField};
use crate::hodge::{harmonic_project, hodge_decompose, solve_poisson_deg0, SolverOptions};
use crate::lattice::{Axis, LatticeConfig};
use crate::operators::{boundary, coboundary, laplacian, star};

/// Physical parameters of the ODE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Model {
    /// Viscosity `ν ≥ 0`.
    pub nu: f64,
    /// Include the momentum-flux term. Disabled only to isolate diffusion.
    pub nonlinear: bool,
}

impl Model {
    pub fn new(nu: f64) -> Self {
        Self {
            nu,
            nonlinear: true,
        }
    }

    pub fn diffusion_only(nu: f64) -> Self {
        Self {
            nu,
            nonlinear: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimState {
    pub t: f64,
    /// The 1-chain `{V}`.
    pub u: Chain,
    pub config: LatticeConfig,
    pub model: Model,
    pub dt: f64,
    pub solver: SolverOptions,
    pub step: u64,
}

impl SimState {
    pub fn new(
        config: LatticeConfig,
        u: Chain,
        model: Model,
        dt: f64,
        solver: SolverOptions,
    ) -> Self {
        Self {
            t: 0.0,
            u,
            config,
            model,
            dt,
            solver,
            step: 0,
        }
    }

    pub fn field(&self) -> VectorField {
        VectorField::unbraces(&self.u).expect("state holds a 1-chain")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Euler,
    Rk4,
}

impl FromStr for Scheme {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "euler" => Ok(Scheme::Euler),
            "rk4" => Ok(Scheme::Rk4),
            other => Err(format!("unknown scheme {other:?} (expected euler or rk4)")),
        }
    }
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Euler => "euler",
            Scheme::Rk4 => "rk4",
        }
    }
}

/// Pressure `P ⊥ ker Δ` with `−ΔP = ∂{★δ(V_F·v_F)}`, so that the
/// nonlinear term plus `δP` has no boundary.
pub fn compute_pressure(u: &Chain, config: &LatticeConfig, opts: &SolverOptions) -> Result<Chain> {
    let n = nonlinear_term(&VectorField::unbraces(u)?, config);
    pressure_for(&n, opts)
}

fn pressure_for(nonlinear: &Chain, opts: &SolverOptions) -> Result<Chain> {
    solve_boundary_source(&boundary(nonlinear)?, opts)
}

/// Poisson solve for a source in `im ∂`. Such a source is orthogonal to
/// `ker Δ`; its computed harmonic part is roundoff and is dropped.
fn solve_boundary_source(div: &Chain, opts: &SolverOptions) -> Result<Chain> {
    solve_poisson_deg0(&(div - &harmonic_project(div)), opts)
}

/// `{★δ(V_F·v_F)} + δP − νΔ{V}`.
pub fn rhs(
    u: &Chain,
    model: &Model,
    config: &LatticeConfig,
    opts: &SolverOptions,
) -> Result<Chain> {
    u.expect_degree(1)?;
    let mut out = laplacian(u).scaled(-model.nu);
    if model.nonlinear {
        let n = nonlinear_term(&VectorField::unbraces(u)?, config);
        let p = pressure_for(&n, opts)?;
        out.axpy(1.0, &n);
        out.axpy(1.0, &coboundary(&p)?);
    }
    Ok(out)
}

/// `u − δΔ⁻¹∂u`: removes the image-of-δ component, leaving the exact and
/// harmonic parts untouched.
pub fn project_divergence_free(u: &Chain, opts: &SolverOptions) -> Result<Chain> {
    u.expect_degree(1)?;
    let div = boundary(u)?;
    if div.max_abs() == 0.0 {
        return Ok(u.clone());
    }
    // ΔP = −∂u, so u + δP has zero boundary.
    let p = solve_boundary_source(&div, opts)?;
    let mut out = u.clone();
    out.axpy(1.0, &coboundary(&p)?);
    Ok(out)
}

/// Advances one step of `state.dt`, then re-projects onto divergence-free
/// chains.
pub fn step(state: &SimState, scheme: Scheme) -> Result<SimState> {
    let f = |u: &Chain| rhs(u, &state.model, &state.config, &state.solver);
    let dt = state.dt;
    let u0 = &state.u;
    let next = match scheme {
        Scheme::Euler => {
            let mut u = u0.clone();
            u.axpy(dt, &f(u0)?);
            u
        }
        Scheme::Rk4 => {
            let k1 = f(u0)?;
            let mut stage = u0.clone();
            stage.axpy(0.5 * dt, &k1);
            let k2 = f(&stage)?;
            let mut stage = u0.clone();
            stage.axpy(0.5 * dt, &k2);
            let k3 = f(&stage)?;
            let mut stage = u0.clone();
            stage.axpy(dt, &k3);
            let k4 = f(&stage)?;
            let mut u = u0.clone();
            u.axpy(dt / 6.0, &k1);
            u.axpy(dt / 3.0, &k2);
            u.axpy(dt / 3.0, &k3);
            u.axpy(dt / 6.0, &k4);
            u
        }
    };
    if !next.is_finite() {
        return Err(Error::NonFinite {
            step: state.step + 1,
        });
    }
    let u = project_divergence_free(&next, &state.solver)?;
    Ok(SimState {
        t: state.t + dt,
        u,
        step: state.step + 1,
        ..state.clone()
    })
}

/// Safety constants for [`suggest_dt`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DtPolicy {
    /// Multiplier on `2h / max|V|`.
    pub c_adv: f64,
    /// Multiplier on `(2h)² / ν`.
    pub c_visc: f64,
    /// Returned when neither bound applies.
    pub dt_max: f64,
}

impl Default for DtPolicy {
    fn default() -> Self {
        Self {
            c_adv: 0.05,
            c_visc: 1.0 / 48.0,
            dt_max: 0.1,
        }
    }
}

/// `min(c_adv·2h/max|V|, c_visc·(2h)²/ν)`, ignoring bounds whose scale is
/// zero; `dt_max` when both vanish.
pub fn suggest_dt(state: &SimState) -> f64 {
    suggest_dt_with(state, &DtPolicy::default())
}

pub fn suggest_dt_with(state: &SimState, policy: &DtPolicy) -> f64 {
    let two_h = 2.0 * state.config.h();
    let speed = state.field().max_speed();
    let adv = if speed > 0.0 {
        policy.c_adv * two_h / speed
    } else {
        f64::INFINITY
    };
    let nu = state.model.nu;
    let visc = if nu > 0.0 {
        policy.c_visc * two_h * two_h / nu
    } else {
        f64::INFINITY
    };
    let dt = adv.min(visc);
    if dt.is_finite() {
        dt
    } else {
        policy.dt_max
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    /// `½|u|²`.
    pub kinetic_energy: f64,
    /// `|∂u|`.
    pub divergence_norm: f64,
    /// Sum of edge coefficients per axis.
    pub momentum: [f64; 3],
    /// `|★δu|²`.
    pub enstrophy: f64,
    /// Norms of the exact, coexact and harmonic parts of `u`.
    pub hodge_norms: [f64; 3],
}

pub fn diagnostics(state: &SimState) -> Result<Diagnostics> {
    let u = &state.u;
    let sites = state.config.sites();
    let momentum = Axis::ALL.map(|a| {
        u.coeffs()[a.index() * sites..(a.index() + 1) * sites]
            .iter()
            .sum()
    });
    let parts = hodge_decompose(u, &state.solver)?;
    Ok(Diagnostics {
        kinetic_energy: 0.5 * u.norm_squared(),
        divergence_norm: boundary(u)?.norm(),
        momentum,
        enstrophy: star(&coboundary(u)?).norm_squared(),
        hodge_norms: parts.norms(),
    })
}
