//! Hodge decomposition, harmonic projection and inversion of the Laplacian
//! on the orthogonal complement of its kernel.
//!
//! The kernel of `Δ` is known in closed form: in degrees 0 and 3 it is
//! spanned by the indicator chains of the eight parity components, in degrees
//! 1 and 2 by the uniform chains on each (component, axis) pair. Projecting
//! onto it is a per-group mean.

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::lattice::{LatticeConfig, ParityClass, TOP_DEGREE};
use crate::operators::{boundary, coboundary, laplacian};

/// Iterations between re-projections of the iterate off the kernel.
const REPROJECT_EVERY: usize = 50;

/// Smallest tolerance used when testing a source for a harmonic component.
const HARMONIC_CHECK_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Relative residual tolerance.
    pub tol: f64,
    /// Iteration cap; `None` means ten times the number of cells.
    pub max_iter: Option<usize>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: None,
        }
    }
}

impl SolverOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidOptions(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == Some(0) {
            return Err(Error::InvalidOptions("max_iter must be at least 1".into()));
        }
        Ok(())
    }

    fn cap(&self, cells: usize) -> usize {
        self.max_iter.unwrap_or(10 * cells)
    }
}

/// The three Hodge components of a chain.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeParts {
    /// Component in the image of `∂`.
    pub exact: Chain,
    /// Component in the image of `δ`.
    pub coexact: Chain,
    /// Component in the kernel of `Δ`.
    pub harmonic: Chain,
}

impl HodgeParts {
    pub fn reconstruct(&self) -> Chain {
        &(&self.exact + &self.coexact) + &self.harmonic
    }

    /// Norms `(exact, coexact, harmonic)`.
    pub fn norms(&self) -> [f64; 3] {
        [self.exact.norm(), self.coexact.norm(), self.harmonic.norm()]
    }
}

fn config_of(c: &Chain) -> LatticeConfig {
    LatticeConfig::new(c.n(), 1.0).expect("chain extent is valid")
}

/// Index of the harmonic basis vector supported on the cell at `index`:
/// the parity component in degrees 0 and 3, `3 * component + axis` in
/// degrees 1 and 2.
pub fn harmonic_group(cfg: &LatticeConfig, degree: usize, index: usize) -> usize {
    let cell = cfg.cell_at(degree, index).expect("valid degree");
    let comp = cfg.component_of(&cell).index();
    match cell.axis {
        Some(a) => 3 * comp + a.index(),
        None => comp,
    }
}

/// Number of harmonic basis chains in `degree`.
pub fn harmonic_dimension(degree: usize) -> Result<usize> {
    match degree {
        0 | 3 => Ok(8),
        1 | 2 => Ok(24),
        d => Err(Error::InvalidDegree(d)),
    }
}

/// Coefficients of `c` against the normalized closed-form harmonic basis.
pub fn harmonic_coefficients(c: &Chain) -> Vec<f64> {
    let cfg = config_of(c);
    let groups = harmonic_dimension(c.degree()).unwrap();
    let mut sums = vec![0.0; groups];
    for (i, &x) in c.coeffs().iter().enumerate() {
        sums[harmonic_group(&cfg, c.degree(), i)] += x;
    }
    let size = (c.len() / groups) as f64;
    sums.iter().map(|s| s / size.sqrt()).collect()
}

/// Orthogonal projection onto `ker Δ`.
pub fn harmonic_project(c: &Chain) -> Chain {
    let cfg = config_of(c);
    let degree = c.degree();
    let groups = harmonic_dimension(degree).unwrap();
    let mut sums = vec![0.0; groups];
    for (i, &x) in c.coeffs().iter().enumerate() {
        sums[harmonic_group(&cfg, degree, i)] += x;
    }
    let size = (c.len() / groups) as f64;
    let means: Vec<f64> = sums.iter().map(|s| s / size).collect();
    let coeffs = (0..c.len())
        .map(|i| means[harmonic_group(&cfg, degree, i)])
        .collect();
    Chain::from_coeffs_n(c.n(), degree, coeffs).unwrap()
}

/// Normalized harmonic basis chain for a group index.
pub fn harmonic_basis(cfg: &LatticeConfig, degree: usize, group: usize) -> Result<Chain> {
    let groups = harmonic_dimension(degree)?;
    assert!(group < groups);
    let size = (cfg.dims(degree)? / groups) as f64;
    let c = *cfg;
    Chain::from_fn(cfg, degree, move |i| {
        if harmonic_group(&c, degree, i) == group {
            1.0 / size.sqrt()
        } else {
            0.0
        }
    })
}

/// Uniform chain on one component's harmonic group in degrees 1 and 2.
pub fn component_axis_indicator(
    cfg: &LatticeConfig,
    degree: usize,
    class: ParityClass,
    axis: usize,
) -> Result<Chain> {
    let c = *cfg;
    let group = 3 * class.index() + axis;
    Chain::from_fn(cfg, degree, move |i| {
        if harmonic_group(&c, degree, i) == group {
            1.0
        } else {
            0.0
        }
    })
}

/// Solves `Δ y = rhs` for `y ⊥ ker Δ`; the harmonic part of `rhs` is
/// discarded. Conjugate gradients on the positive semidefinite `Δ`.
pub fn solve_laplacian(rhs: &Chain, opts: &SolverOptions) -> Result<Chain> {
    opts.validate()?;
    let b = rhs - &harmonic_project(rhs);
    let bnorm = b.norm();
    let mut x = Chain::zeros_n(rhs.n(), rhs.degree())?;
    if bnorm == 0.0 {
        return Ok(x);
    }
    let target = opts.tol * bnorm;
    let cap = opts.cap(rhs.len());
    let mut r = b.clone();
    let mut p = r.clone();
    let mut rr = r.norm_squared();
    for it in 1..=cap {
        let ap = laplacian(&p);
        let pap = p.dot(&ap);
        if pap.is_nan() || pap <= 0.0 {
            break;
        }
        let alpha = rr / pap;
        x.axpy(alpha, &p);
        r.axpy(-alpha, &ap);
        if it % REPROJECT_EVERY == 0 {
            x = &x - &harmonic_project(&x);
            r = &b - &laplacian(&x);
        }
        let rr_new = r.norm_squared();
        if rr_new.sqrt() <= target {
            x = &x - &harmonic_project(&x);
            let true_r = &b - &laplacian(&x);
            if true_r.norm() <= target {
                return Ok(x);
            }
            // Recurrence drifted from the true residual; restart from it.
            r = true_r;
            p = r.clone();
            rr = r.norm_squared();
            continue;
        }
        let beta = rr_new / rr;
        p.scale(beta);
        p.axpy(1.0, &r);
        rr = rr_new;
    }
    let residual = (&b - &laplacian(&x)).norm() / bnorm;
    Err(Error::NotConverged {
        iterations: cap,
        residual,
    })
}

/// Degree-0 pressure-type solve: returns `P ⊥ ker Δ` with `Δ(-P) = rhs`.
/// `rhs` must have no harmonic component.
pub fn solve_poisson_deg0(rhs: &Chain, opts: &SolverOptions) -> Result<Chain> {
    rhs.expect_degree(0)?;
    opts.validate()?;
    let norm = rhs.norm();
    if norm == 0.0 {
        return Ok(rhs.clone());
    }
    let harmonic = harmonic_project(rhs).norm();
    if harmonic > opts.tol.max(HARMONIC_CHECK_FLOOR) * norm {
        return Err(Error::HarmonicSource(harmonic / norm));
    }
    Ok(-&solve_laplacian(rhs, opts)?)
}

/// Splits `c` into its exact, coexact and harmonic parts.
pub fn hodge_decompose(c: &Chain, opts: &SolverOptions) -> Result<HodgeParts> {
    let harmonic = harmonic_project(c);
    let y = solve_laplacian(&(c - &harmonic), opts)?;
    let zero = Chain::zeros_n(c.n(), c.degree())?;
    let exact = if c.degree() < TOP_DEGREE {
        boundary(&coboundary(&y)?)?
    } else {
        zero.clone()
    };
    let coexact = if c.degree() > 0 {
        coboundary(&boundary(&y)?)?
    } else {
        zero
    };
    Ok(HodgeParts {
        exact,
        coexact,
        harmonic,
    })
}

/// Eigenvalues of degree-0 `Δ` restricted to one parity component,
/// ascending with multiplicity: `Σ_axis (2 - 2 cos(2π k_axis / M))` for
/// `k ∈ {0..M-1}^3`, `M = n/2`.
pub fn analytic_eigenvalues_deg0(cfg: &LatticeConfig) -> Vec<f64> {
    let m = cfg.n() / 2;
    let axis: Vec<f64> = (0..m)
        .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / m as f64).cos())
        .collect();
    let mut out = Vec::with_capacity(m * m * m);
    for a in &axis {
        for b in &axis {
            for c in &axis {
                out.push(a + b + c);
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Full degree-0 spectrum: eight copies of the per-component spectrum.
pub fn analytic_spectrum_deg0(cfg: &LatticeConfig) -> Vec<f64> {
    let per = analytic_eigenvalues_deg0(cfg);
    let mut out: Vec<f64> = per
        .iter()
        .flat_map(|&l| std::iter::repeat_n(l, 8))
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Dense paths for small lattices: eigendecomposition of the assembled
/// Laplacian, used for nullity counts and as the oracle for the iterative
/// solver.
pub mod dense {
    use nalgebra::{DMatrix, DVector, SymmetricEigen};

    use super::*;
    use crate::assembly::laplacian_matrix;

    pub const MAX_DENSE_N: usize = 8;

    /// Eigenvalues with magnitude below this count toward the nullity.
    pub const NULLITY_THRESHOLD: f64 = 1e-8;

    fn check_size(cfg: &LatticeConfig) -> Result<()> {
        if cfg.n() > MAX_DENSE_N {
            return Err(Error::TooLargeForDense {
                n: cfg.n(),
                max: MAX_DENSE_N,
            });
        }
        Ok(())
    }

    pub fn laplacian_eigen(
        cfg: &LatticeConfig,
        degree: usize,
    ) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
        check_size(cfg)?;
        let lap = laplacian_matrix(cfg, degree)?.to_dense();
        Ok(lap.symmetric_eigen())
    }

    /// Numerical nullity of the assembled `Δ` in `degree`. For a symmetric
    /// matrix the singular values are the eigenvalue magnitudes.
    pub fn harmonic_rank(cfg: &LatticeConfig, degree: usize) -> Result<usize> {
        let eig = laplacian_eigen(cfg, degree)?;
        Ok(eig
            .eigenvalues
            .iter()
            .filter(|l| l.abs() < NULLITY_THRESHOLD)
            .count())
    }

    /// Sorted eigenvalues of the assembled `Δ`.
    pub fn spectrum(cfg: &LatticeConfig, degree: usize) -> Result<Vec<f64>> {
        let eig = laplacian_eigen(cfg, degree)?;
        let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        v.sort_by(f64::total_cmp);
        Ok(v)
    }

    /// Orthonormal basis of the numerical kernel, one column per vector.
    pub fn nullspace_basis(cfg: &LatticeConfig, degree: usize) -> Result<DMatrix<f64>> {
        let eig = laplacian_eigen(cfg, degree)?;
        let cols: Vec<DVector<f64>> = eig
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, l)| l.abs() < NULLITY_THRESHOLD)
            .map(|(i, _)| eig.eigenvectors.column(i).into_owned())
            .collect();
        Ok(DMatrix::from_columns(&cols))
    }

    /// Projection onto the kernel through the dense basis.
    pub fn harmonic_project(cfg: &LatticeConfig, c: &Chain) -> Result<Chain> {
        let basis = nullspace_basis(cfg, c.degree())?;
        let x = DVector::from_column_slice(c.coeffs());
        let p = &basis * (basis.transpose() * x);
        Chain::from_coeffs(cfg, c.degree(), p.as_slice().to_vec())
    }

    /// Minimum-norm solution of `Δ y = rhs` through the pseudo-inverse.
    pub fn solve_laplacian(cfg: &LatticeConfig, rhs: &Chain) -> Result<Chain> {
        let eig = laplacian_eigen(cfg, rhs.degree())?;
        let b = DVector::from_column_slice(rhs.coeffs());
        let coords = eig.eigenvectors.transpose() * b;
        let scaled = DVector::from_iterator(
            coords.len(),
            coords.iter().zip(eig.eigenvalues.iter()).map(|(c, l)| {
                if l.abs() < NULLITY_THRESHOLD {
                    0.0
                } else {
                    c / l
                }
            }),
        );
        let y = &eig.eigenvectors * scaled;
        Chain::from_coeffs(cfg, rhs.degree(), y.as_slice().to_vec())
    }
}

pub use dense::harmonic_rank;
