//! The periodic site lattice and the canonical oriented cells of side 2h.
//!
//! Sites are integer points of `Z_n^3` in units of `h`. Every cell of every
//! degree has side length `2h` and is centered at a site; degree-1 and
//! degree-2 cells also carry an axis (edge direction, face normal). The
//! canonical generator of each cell is positively oriented: edges along the
//! positive axis, faces by the right-hand rule about the positive normal,
//! vertices and cubes by the global right-handed orientation of `(x, y, z)`.
//!
//! Cells are stored axis-major, then site-lexicographic with `k` fastest,
//! which makes a 3-vector per site and a degree-1 chain the same array.

use std::fmt;

use crate::error::{Error, Result};

/// Highest degree of the complex.
pub const TOP_DEGREE: usize = 3;

/// Lattice extent and spacing. The global orientation is the fixed
/// right-handed orientation of `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeConfig {
    n: usize,
    h: f64,
}

impl LatticeConfig {
    pub fn new(n: usize, h: f64) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::InvalidExtent(n));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidSpacing(h));
        }
        Ok(Self { n, h })
    }

    /// Sites per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Lattice spacing.
    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn sites(&self) -> usize {
        self.n * self.n * self.n
    }

    /// Number of canonical cells in `degree`.
    pub fn dims(&self, degree: usize) -> Result<usize> {
        dims(self.n, degree)
    }

    /// Linear index of a site.
    pub fn site_index(&self, s: SiteIndex) -> usize {
        (s.i * self.n + s.j) * self.n + s.k
    }

    pub fn site_at(&self, index: usize) -> SiteIndex {
        let n = self.n;
        SiteIndex {
            i: index / (n * n),
            j: (index / n) % n,
            k: index % n,
        }
    }

    /// Site with coordinates reduced modulo `n`.
    pub fn site(&self, i: i64, j: i64, k: i64) -> SiteIndex {
        let n = self.n as i64;
        SiteIndex {
            i: i.rem_euclid(n) as usize,
            j: j.rem_euclid(n) as usize,
            k: k.rem_euclid(n) as usize,
        }
    }

    /// `s + delta * e_axis`, periodically wrapped.
    pub fn shift(&self, s: SiteIndex, axis: Axis, delta: i64) -> SiteIndex {
        let mut c = [s.i as i64, s.j as i64, s.k as i64];
        c[axis.index()] += delta;
        self.site(c[0], c[1], c[2])
    }

    pub fn cell_index(&self, cell: &CellId) -> usize {
        let site = self.site_index(cell.center);
        match cell.axis {
            Some(a) => a.index() * self.sites() + site,
            None => site,
        }
    }

    pub fn cell_at(&self, degree: usize, index: usize) -> Result<CellId> {
        let count = self.dims(degree)?;
        assert!(
            index < count,
            "cell index {index} out of range for degree {degree}"
        );
        Ok(match degree {
            0 | 3 => CellId {
                degree,
                center: self.site_at(index),
                axis: None,
            },
            _ => CellId {
                degree,
                center: self.site_at(index % self.sites()),
                axis: Some(Axis::ALL[index / self.sites()]),
            },
        })
    }

    /// All canonical cells of a degree in storage order.
    pub fn cells(&self, degree: usize) -> Result<Vec<CellId>> {
        let count = self.dims(degree)?;
        (0..count).map(|i| self.cell_at(degree, i)).collect()
    }

    /// Signed algebraic boundary of a canonical cell, built from the cell's
    /// geometry: the extreme-point vertices, the four side-2h edges of a
    /// square circulating by the right-hand rule, the six outward faces of a
    /// cube.
    pub fn cell_boundary(&self, cell: &CellId) -> Result<Vec<(CellId, i8)>> {
        let q = cell.center;
        Ok(match (cell.degree, cell.axis) {
            (1, Some(d)) => vec![
                (CellId::vertex(self.shift(q, d, 1)), 1),
                (CellId::vertex(self.shift(q, d, -1)), -1),
            ],
            (2, Some(d)) => {
                let (a, b) = d.in_plane();
                // Counter-clockwise about +d, starting from the corner q - e_a - e_b.
                vec![
                    (CellId::edge(self.shift(q, b, -1), a), 1),
                    (CellId::edge(self.shift(q, a, 1), b), 1),
                    (CellId::edge(self.shift(q, b, 1), a), -1),
                    (CellId::edge(self.shift(q, a, -1), b), -1),
                ]
            }
            (3, None) => Axis::ALL
                .iter()
                .flat_map(|&d| {
                    [
                        (CellId::face(self.shift(q, d, 1), d), 1),
                        (CellId::face(self.shift(q, d, -1), d), -1),
                    ]
                })
                .collect(),
            (0, None) => {
                return Err(Error::DegreeOutOfRange {
                    op: "boundary",
                    degree: 0,
                });
            }
            _ => return Err(Error::InvalidDegree(cell.degree)),
        })
    }

    /// Label of the connected subcomplex containing `cell`.
    pub fn component_of(&self, cell: &CellId) -> ParityClass {
        let p = ParityClass::of_site(cell.center);
        match (cell.degree, cell.axis) {
            (0, _) => p.flip_all(),
            (1, Some(d)) => p.flip_all().flip(d),
            (2, Some(d)) => p.flip(d),
            _ => p,
        }
    }
}

/// Number of canonical cells of `degree` on a lattice of extent `n`.
pub fn dims(n: usize, degree: usize) -> Result<usize> {
    let sites = n * n * n;
    match degree {
        0 | 3 => Ok(sites),
        1 | 2 => Ok(3 * sites),
        d => Err(Error::InvalidDegree(d)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The two in-plane axes `(a, b)` with `(self, a, b)` cyclic, so that
    /// `e_a × e_b = e_self`.
    pub fn in_plane(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// Integer site coordinates, each in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SiteIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl SiteIndex {
    pub fn coord(&self, axis: Axis) -> usize {
        match axis {
            Axis::X => self.i,
            Axis::Y => self.j,
            Axis::Z => self.k,
        }
    }
}

/// A canonical, positively oriented cell of side `2h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellId {
    pub degree: usize,
    pub center: SiteIndex,
    pub axis: Option<Axis>,
}

impl CellId {
    pub fn vertex(center: SiteIndex) -> Self {
        Self {
            degree: 0,
            center,
            axis: None,
        }
    }

    pub fn edge(center: SiteIndex, axis: Axis) -> Self {
        Self {
            degree: 1,
            center,
            axis: Some(axis),
        }
    }

    pub fn face(center: SiteIndex, normal: Axis) -> Self {
        Self {
            degree: 2,
            center,
            axis: Some(normal),
        }
    }

    pub fn cube(center: SiteIndex) -> Self {
        Self {
            degree: 3,
            center,
            axis: None,
        }
    }
}

/// Orientation of a cell relative to its canonical generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Positive => 1.0,
            Orientation::Negative => -1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// Coordinate parities `(p_x, p_y, p_z)`; labels the eight disjoint
/// subcomplexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityClass(pub [u8; 3]);

impl ParityClass {
    pub fn of_site(s: SiteIndex) -> Self {
        Self([(s.i % 2) as u8, (s.j % 2) as u8, (s.k % 2) as u8])
    }

    /// All eight classes, ordered by `index`.
    pub fn all() -> [ParityClass; 8] {
        std::array::from_fn(|i| Self([(i >> 2) as u8 & 1, (i >> 1) as u8 & 1, i as u8 & 1]))
    }

    /// Position in `0..8`.
    pub fn index(self) -> usize {
        ((self.0[0] as usize) << 2) | ((self.0[1] as usize) << 1) | self.0[2] as usize
    }

    pub fn flip(mut self, axis: Axis) -> Self {
        self.0[axis.index()] ^= 1;
        self
    }

    pub fn flip_all(self) -> Self {
        Self([self.0[0] ^ 1, self.0[1] ^ 1, self.0[2] ^ 1])
    }

    /// Parity of the centers of the cells with this label, degree and axis.
    pub fn center_parity(self, degree: usize, axis: Option<Axis>) -> ParityClass {
        // The labeling is an XOR with a fixed pattern, so it is its own inverse.
        match (degree, axis) {
            (0, _) => self.flip_all(),
            (1, Some(d)) => self.flip_all().flip(d),
            (2, Some(d)) => self.flip(d),
            _ => self,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}
