//! Real chains: dense coefficient vectors over the canonical cells of one
//! degree. Reversing a cell's orientation negates its coefficient.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::lattice::{dims, CellId, LatticeConfig, Orientation};
use crate::par;

#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    degree: usize,
    n: usize,
    coeffs: Vec<f64>,
}

impl Chain {
    pub fn zeros(config: &LatticeConfig, degree: usize) -> Result<Self> {
        Self::zeros_n(config.n(), degree)
    }

    pub(crate) fn zeros_n(n: usize, degree: usize) -> Result<Self> {
        let len = dims(n, degree)?;
        Ok(Self {
            degree,
            n,
            coeffs: vec![0.0; len],
        })
    }

    pub fn from_coeffs(config: &LatticeConfig, degree: usize, coeffs: Vec<f64>) -> Result<Self> {
        Self::from_coeffs_n(config.n(), degree, coeffs)
    }

    pub(crate) fn from_coeffs_n(n: usize, degree: usize, coeffs: Vec<f64>) -> Result<Self> {
        let len = dims(n, degree)?;
        assert_eq!(
            coeffs.len(),
            len,
            "degree-{degree} chain on n={n} needs {len} coefficients"
        );
        Ok(Self { degree, n, coeffs })
    }

    /// Chain whose coefficient on cell index `i` is `f(i)`.
    pub fn from_fn<F>(config: &LatticeConfig, degree: usize, f: F) -> Result<Self>
    where
        F: Fn(usize) -> f64 + Sync + Send,
    {
        let len = config.dims(degree)?;
        Ok(Self {
            degree,
            n: config.n(),
            coeffs: par::collect(len, f),
        })
    }

    /// Unit coefficient on a single oriented cell.
    pub fn basis(config: &LatticeConfig, cell: &CellId, orientation: Orientation) -> Result<Self> {
        let mut c = Self::zeros(config, cell.degree)?;
        c.coeffs[config.cell_index(cell)] = orientation.sign();
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Coefficient of `cell` taken with the given orientation.
    pub fn coeff(&self, config: &LatticeConfig, cell: &CellId, orientation: Orientation) -> f64 {
        orientation.sign() * self.coeffs[config.cell_index(cell)]
    }

    pub fn same_shape(&self, other: &Chain) -> Result<()> {
        if self.degree != other.degree || self.n != other.n {
            return Err(Error::ShapeMismatch {
                expected_degree: self.degree,
                expected_n: self.n,
                degree: other.degree,
                n: other.n,
            });
        }
        Ok(())
    }

    pub fn expect_degree(&self, degree: usize) -> Result<()> {
        if self.degree != degree {
            return Err(Error::ShapeMismatch {
                expected_degree: degree,
                expected_n: self.n,
                degree: self.degree,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Cellular inner product; the canonical cells form an orthonormal basis.
    pub fn dot(&self, other: &Chain) -> f64 {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        assert_eq!(self.degree, other.degree);
        let (a, b) = (&self.coeffs, &other.coeffs);
        par::sum_by(a.len(), |i| a[i] * b[i])
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        let c = &self.coeffs;
        par::max_by(c.len(), |i| c[i].abs())
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_finite())
    }

    /// `self += alpha * x`
    pub fn axpy(&mut self, alpha: f64, x: &Chain) {
        assert_eq!(self.coeffs.len(), x.coeffs.len());
        for (s, v) in self.coeffs.iter_mut().zip(&x.coeffs) {
            *s += alpha * v;
        }
    }

    pub fn scale(&mut self, alpha: f64) {
        for s in &mut self.coeffs {
            *s *= alpha;
        }
    }

    pub fn scaled(&self, alpha: f64) -> Chain {
        let mut c = self.clone();
        c.scale(alpha);
        c
    }

    pub(crate) fn map_with(&self, other: &Chain, f: impl Fn(f64, f64) -> f64) -> Chain {
        assert_eq!(self.degree, other.degree, "chain degree mismatch");
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "chain length mismatch"
        );
        Chain {
            degree: self.degree,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        self.map_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        self.map_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scaled(-1.0)
    }
}

impl Mul<&Chain> for f64 {
    type Output = Chain;
    fn mul(self, rhs: &Chain) -> Chain {
        rhs.scaled(self)
    }
}
