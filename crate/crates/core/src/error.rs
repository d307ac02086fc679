use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("lattice extent must be even and at least 4, got {0}")]
    InvalidExtent(usize),
    #[error("lattice spacing must be positive and finite, got {0}")]
    InvalidSpacing(f64),
    #[error("degree {0} is outside 0..=3")]
    InvalidDegree(usize),
    #[error("{op} is undefined on degree {degree}")]
    DegreeOutOfRange { op: &'static str, degree: usize },
    #[error("chain shape mismatch: expected degree {expected_degree} on n={expected_n}, got degree {degree} on n={n}")]
    ShapeMismatch {
        expected_degree: usize,
        expected_n: usize,
        degree: usize,
        n: usize,
    },
    #[error("solver did not converge in {iterations} iterations (relative residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("right-hand side has a harmonic component of relative size {0:e}")]
    HarmonicSource(f64),
    #[error("dense path limited to n <= {max}, got n={n}")]
    TooLargeForDense { n: usize, max: usize },
    #[error("non-finite value in the velocity field at step {step}")]
    NonFinite { step: u64 },
    #[error("invalid solver options: {0}")]
    InvalidOptions(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("snapshot {}: {message}", path.display())]
    Snapshot { path: PathBuf, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
