//! Exact integer assembly of the chain-complex operators.
//!
//! Matrices are built cell by cell from [`LatticeConfig::cell_boundary`]
//! and the geometric duality pairing, independently of the stencils in
//! [`crate::operators`]. Entries are integers, so identities such as
//! `∂∘∂ = 0` are checked exactly.

use nalgebra::DMatrix;
use sprs::{CsMat, TriMat};

use crate::error::{Error, Result};
use crate::lattice::{Axis, CellId, LatticeConfig, TOP_DEGREE};
use crate::operators::STAR_SIGNS;

/// Sparse integer matrix in canonical CSR form: column indices sorted within
/// each row and no explicit zeros, so two matrices representing the same
/// operator compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct IntMatrix(CsMat<i64>);

impl IntMatrix {
    /// Duplicate entries are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, i64)>) -> Self {
        let mut tri = TriMat::with_capacity((rows, cols), triplets.len());
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "triplet ({r}, {c}) outside {rows}x{cols}"
            );
            tri.add_triplet(r, c, v);
        }
        Self::canonical(tri.to_csr())
    }

    pub fn identity(n: usize) -> Self {
        Self(CsMat::eye(n))
    }

    fn canonical(m: CsMat<i64>) -> Self {
        let m = if m.is_csr() { m } else { m.to_csr() };
        if m.data().iter().all(|&v| v != 0) {
            return Self(m);
        }
        let mut tri = TriMat::new(m.shape());
        for (&v, (r, c)) in m.iter() {
            if v != 0 {
                tri.add_triplet(r, c, v);
            }
        }
        Self(tri.to_csr())
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn nnz(&self) -> usize {
        self.0.nnz()
    }

    pub fn is_zero(&self) -> bool {
        self.0.nnz() == 0
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.0.get(row, col).copied().unwrap_or(0)
    }

    /// Nonzero entries of one row as `(col, value)`.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let span = self.0.indptr().outer_inds_sz(row);
        self.0.indices()[span.clone()]
            .iter()
            .copied()
            .zip(self.0.data()[span].iter().copied())
    }

    /// All nonzero entries as `(row, col, value)`, row by row.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.0.iter().map(|(&v, (r, c))| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose_view().to_csr())
    }

    pub fn scaled(&self, s: i64) -> Self {
        Self::canonical(self.0.map(|&v| s * v))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::canonical(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::canonical(&self.0 - &other.0)
    }

    /// Exact product `self * other`.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows(), "inner dimensions differ");
        Self::canonical(&self.0 * &other.0)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols());
        (0..self.rows())
            .map(|r| self.row(r).map(|(c, v)| v as f64 * x[c]).sum())
            .collect()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.rows(), self.cols());
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v as f64;
        }
        m
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_pos = vec![usize::MAX; self.cols()];
        for (p, &c) in cols.iter().enumerate() {
            col_pos[c] = p;
        }
        let mut t = Vec::new();
        for (pr, &r) in rows.iter().enumerate() {
            for (c, v) in self.row(r) {
                if col_pos[c] != usize::MAX {
                    t.push((pr, col_pos[c], v));
                }
            }
        }
        Self::from_triplets(rows.len(), cols.len(), t)
    }
}

/// `∂ : L_k -> L_{k-1}` for `k` in `1..=3`.
pub fn boundary_matrix(cfg: &LatticeConfig, degree: usize) -> Result<IntMatrix> {
    if degree == 0 || degree > TOP_DEGREE {
        return Err(Error::DegreeOutOfRange {
            op: "boundary",
            degree,
        });
    }
    let rows = cfg.dims(degree - 1)?;
    let cols = cfg.dims(degree)?;
    let mut t = Vec::with_capacity(cols * 6);
    for (col, cell) in cfg.cells(degree)?.iter().enumerate() {
        for (face, sign) in cfg.cell_boundary(cell)? {
            t.push((cfg.cell_index(&face), col, sign as i64));
        }
    }
    Ok(IntMatrix::from_triplets(rows, cols, t))
}

/// `δ : L_k -> L_{k+1}` for `k` in `0..=2`, the transpose of `∂`.
pub fn coboundary_matrix(cfg: &LatticeConfig, degree: usize) -> Result<IntMatrix> {
    if degree >= TOP_DEGREE {
        return Err(Error::DegreeOutOfRange {
            op: "coboundary",
            degree,
        });
    }
    Ok(boundary_matrix(cfg, degree + 1)?.transpose())
}

/// Cell of complementary dimension crossing `cell` transversally at its center.
pub fn dual_cell(cell: &CellId) -> CellId {
    match cell.degree {
        0 => CellId::cube(cell.center),
        1 => CellId::face(cell.center, cell.axis.expect("edges carry an axis")),
        2 => CellId::edge(cell.center, cell.axis.expect("faces carry an axis")),
        _ => CellId::vertex(cell.center),
    }
}

/// `★ : L_k -> L_{3-k}` with per-degree signs.
pub fn star_matrix_with_signs(
    cfg: &LatticeConfig,
    degree: usize,
    signs: &[i64; 4],
) -> Result<IntMatrix> {
    let cells = cfg.cells(degree)?;
    let rows = cfg.dims(TOP_DEGREE - degree)?;
    let t = cells
        .iter()
        .enumerate()
        .map(|(col, cell)| (cfg.cell_index(&dual_cell(cell)), col, signs[degree]))
        .collect();
    Ok(IntMatrix::from_triplets(rows, cells.len(), t))
}

pub fn star_matrix(cfg: &LatticeConfig, degree: usize) -> Result<IntMatrix> {
    star_matrix_with_signs(cfg, degree, &STAR_SIGNS.map(|s| s as i64))
}

/// `Δ = ∂δ + δ∂` on `L_k`.
pub fn laplacian_matrix(cfg: &LatticeConfig, degree: usize) -> Result<IntMatrix> {
    let n = cfg.dims(degree)?;
    let mut lap = IntMatrix::from_triplets(n, n, Vec::new());
    if degree < TOP_DEGREE {
        let b = boundary_matrix(cfg, degree + 1)?;
        lap = lap.add(&b.matmul(&b.transpose()));
    }
    if degree > 0 {
        let b = boundary_matrix(cfg, degree)?;
        lap = lap.add(&b.transpose().matmul(&b));
    }
    Ok(lap)
}

/// Degree-0 stencil `Σ_{|r|=2h} f(q+r) - 6 f(q)` assembled from site offsets.
pub fn neighbor_stencil_matrix(cfg: &LatticeConfig) -> IntMatrix {
    let n = cfg.sites();
    let mut t = Vec::with_capacity(7 * n);
    for i in 0..n {
        let q = cfg.site_at(i);
        t.push((i, i, -6));
        for d in Axis::ALL {
            for delta in [-2, 2] {
                t.push((i, cfg.site_index(cfg.shift(q, d, delta)), 1));
            }
        }
    }
    IntMatrix::from_triplets(n, n, t)
}
