//! Lattice vector fields and the site-level differential operators.
//!
//! A [`VectorField`] holds one 3-vector per site: the average velocity over
//! the side-2h cube centered there. The braces map attaches component `d` to
//! the side-2h edge along `d` centered at the same site; with axis-major
//! cell storage it is a plain concatenation of the three component arrays.

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::lattice::{Axis, CellId, LatticeConfig, Orientation};
use crate::operators::{boundary, coboundary, laplacian, star};
use crate::par;

#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    n: usize,
    components: [Vec<f64>; 3],
}

impl VectorField {
    pub fn zeros(cfg: &LatticeConfig) -> Self {
        let s = cfg.sites();
        Self {
            n: cfg.n(),
            components: [vec![0.0; s], vec![0.0; s], vec![0.0; s]],
        }
    }

    /// Field with `f(site)` at every site.
    pub fn from_fn(cfg: &LatticeConfig, f: impl Fn(crate::SiteIndex) -> [f64; 3]) -> Self {
        let mut v = Self::zeros(cfg);
        for s in 0..cfg.sites() {
            v.set(s, f(cfg.site_at(s)));
        }
        v
    }

    pub fn from_components(cfg: &LatticeConfig, components: [Vec<f64>; 3]) -> Self {
        for c in &components {
            assert_eq!(
                c.len(),
                cfg.sites(),
                "component length must equal the site count"
            );
        }
        Self {
            n: cfg.n(),
            components,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sites(&self) -> usize {
        self.components[0].len()
    }

    pub fn component(&self, axis: Axis) -> &[f64] {
        &self.components[axis.index()]
    }

    pub fn get(&self, site: usize) -> [f64; 3] {
        [
            self.components[0][site],
            self.components[1][site],
            self.components[2][site],
        ]
    }

    pub fn set(&mut self, site: usize, v: [f64; 3]) {
        for (c, x) in self.components.iter_mut().zip(v) {
            c[site] = x;
        }
    }

    /// Largest Euclidean speed over the sites.
    pub fn max_speed(&self) -> f64 {
        let [x, y, z] = &self.components;
        par::max_by(self.sites(), |s| {
            (x[s] * x[s] + y[s] * y[s] + z[s] * z[s]).sqrt()
        })
    }

    pub fn is_finite(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.iter().all(|x| x.is_finite()))
    }

    /// The degree-1 chain `{V}`.
    pub fn braces(&self) -> Chain {
        let coeffs = self.components.concat();
        Chain::from_coeffs_n(self.n, 1, coeffs).expect("field extent is valid")
    }

    /// Inverse of [`VectorField::braces`].
    pub fn unbraces(chain: &Chain) -> Result<Self> {
        chain.expect_degree(1)?;
        Ok(Self::from_tangent_chains(chain.coeffs()))
    }

    fn from_tangent_chains(coeffs: &[f64]) -> Self {
        let s = coeffs.len() / 3;
        let n = (s as f64).cbrt().round() as usize;
        Self {
            n,
            components: [
                coeffs[..s].to_vec(),
                coeffs[s..2 * s].to_vec(),
                coeffs[2 * s..].to_vec(),
            ],
        }
    }
}

/// A 3-vector per cell, stored as three parallel scalar chains (one per
/// tangent direction). Operators act componentwise.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorValuedCochain {
    pub components: [Chain; 3],
}

impl VectorValuedCochain {
    pub fn degree(&self) -> usize {
        self.components[0].degree()
    }

    /// Value on one oriented cell.
    pub fn value(&self, cfg: &LatticeConfig, cell: &CellId, orientation: Orientation) -> [f64; 3] {
        std::array::from_fn(|c| self.components[c].coeff(cfg, cell, orientation))
    }

    pub fn coboundary(&self) -> Result<Self> {
        let [a, b, c] = &self.components;
        Ok(Self {
            components: [coboundary(a)?, coboundary(b)?, coboundary(c)?],
        })
    }

    pub fn star(&self) -> Self {
        Self {
            components: self.components.each_ref().map(star),
        }
    }
}

/// `(V_F, v_F)` for a face: `V_F = 2h·V(center)` and `v_F` its component
/// along the oriented normal.
pub fn face_velocity(
    v: &VectorField,
    face: &CellId,
    orientation: Orientation,
    cfg: &LatticeConfig,
) -> Result<([f64; 3], f64)> {
    if face.degree != 2 {
        return Err(Error::InvalidDegree(face.degree));
    }
    let normal = face.axis.expect("faces carry an axis");
    let two_h = 2.0 * cfg.h();
    let center = v.get(cfg.site_index(face.center));
    let big = center.map(|x| two_h * x);
    Ok((big, orientation.sign() * big[normal.index()]))
}

/// The closure `V_F·v_F` on every canonical face.
pub fn momentum_flux(v: &VectorField, cfg: &LatticeConfig) -> VectorValuedCochain {
    let sites = cfg.sites();
    let two_h = 2.0 * cfg.h();
    let components = std::array::from_fn(|c| {
        let vc = &v.components[c];
        Chain::from_fn(cfg, 2, |i| {
            let (d, s) = (i / sites, i % sites);
            let big = two_h * vc[s];
            let normal = two_h * v.components[d][s];
            big * normal
        })
        .expect("degree 2 is valid")
    });
    VectorValuedCochain { components }
}

/// `{★δ(V_F·v_F)}`: coboundary of the face flux summed over each cube's six
/// outward faces, placed at the cube centers, then braced.
pub fn nonlinear_term(v: &VectorField, cfg: &LatticeConfig) -> Chain {
    let at_sites = momentum_flux(v, cfg)
        .coboundary()
        .expect("faces have a coboundary")
        .star();
    let [a, b, c] = at_sites.components.map(Chain::into_coeffs);
    VectorField::from_components(cfg, [a, b, c]).braces()
}

/// `∂{V}`.
pub fn divergence(v: &VectorField) -> Chain {
    boundary(&v.braces()).expect("degree 1 has a boundary")
}

/// `δf` on a scalar field.
pub fn gradient(f: &Chain) -> Result<Chain> {
    f.expect_degree(0)?;
    coboundary(f)
}

/// The field whose braces equal `★δ{V}`.
pub fn curl(v: &VectorField) -> VectorField {
    let c = star(&coboundary(&v.braces()).expect("degree 1 has a coboundary"));
    VectorField::unbraces(&c).expect("dual of a 2-chain is a 1-chain")
}

/// `Σ_{|r| = 2h} f(q + r) − 6 f(q)`, evaluated directly on the sites.
pub fn scalar_laplacian(f: &Chain, cfg: &LatticeConfig) -> Result<Chain> {
    f.expect_degree(0)?;
    let x = f.coeffs();
    let c = *cfg;
    Chain::from_fn(cfg, 0, move |i| {
        let q = c.site_at(i);
        let mut acc = -6.0 * x[i];
        for d in Axis::ALL {
            acc += x[c.site_index(c.shift(q, d, 2))] + x[c.site_index(c.shift(q, d, -2))];
        }
        acc
    })
}

/// `−∂δf`, the same operator through the chain complex.
pub fn scalar_laplacian_via_complex(f: &Chain) -> Result<Chain> {
    f.expect_degree(0)?;
    Ok(-&laplacian(f))
}
