//! Matrix-free boundary, coboundary, duality and Laplacian.
//!
//! Each operator is a gather stencil evaluated independently per output
//! cell. The coboundary is the transpose of the boundary in the cellular
//! basis; the assembled matrices in [`crate::assembly`] are built separately
//! from cell geometry and must agree with these stencils exactly.

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::lattice::{Axis, LatticeConfig, SiteIndex, TOP_DEGREE};
use crate::par;

/// Sign of the duality map out of each degree. Vertices pair with `+cube`,
/// edges with `-face`; these are the constants for which
/// `star ∘ coboundary = boundary ∘ star` and `star ∘ star = id` hold.
pub const STAR_SIGNS: [f64; 4] = [1.0, -1.0, -1.0, 1.0];

struct Gather<'a> {
    cfg: LatticeConfig,
    x: &'a [f64],
    n: usize,
    sites: usize,
}

impl<'a> Gather<'a> {
    fn new(x: &'a Chain) -> Self {
        // Chains only exist for valid extents.
        let cfg = LatticeConfig::new(x.n(), 1.0).expect("chain extent is valid");
        Self {
            cfg,
            x: x.coeffs(),
            n: cfg.n(),
            sites: cfg.sites(),
        }
    }

    /// Coefficient of component `comp` at the site one step from `s` along
    /// `axis`; `delta` is `±1`.
    #[inline]
    fn at(&self, comp: usize, s: SiteIndex, axis: Axis, delta: i64) -> f64 {
        let n = self.n;
        let step = |c: usize| match delta {
            1 if c + 1 == n => 0,
            1 => c + 1,
            _ if c == 0 => n - 1,
            _ => c - 1,
        };
        let (mut i, mut j, mut k) = (s.i, s.j, s.k);
        match axis {
            Axis::X => i = step(i),
            Axis::Y => j = step(j),
            Axis::Z => k = step(k),
        }
        self.x[comp * self.sites + (i * n + j) * n + k]
    }

    #[inline]
    fn split(&self, index: usize) -> (usize, SiteIndex) {
        (index / self.sites, self.cfg.site_at(index % self.sites))
    }
}

/// Algebraic boundary, degree `k -> k-1`.
pub fn boundary(c: &Chain) -> Result<Chain> {
    let degree = c.degree();
    if degree == 0 {
        return Err(Error::DegreeOutOfRange {
            op: "boundary",
            degree,
        });
    }
    let g = Gather::new(c);
    let mut out = Chain::zeros_n(c.n(), degree - 1)?;
    match degree {
        1 => par::fill(out.coeffs_mut(), |i| {
            let q = g.cfg.site_at(i);
            Axis::ALL
                .iter()
                .map(|&d| g.at(d.index(), q, d, -1) - g.at(d.index(), q, d, 1))
                .sum()
        }),
        2 => par::fill(out.coeffs_mut(), |i| curl_gather(&g, i)),
        _ => par::fill(out.coeffs_mut(), |i| {
            let (d, p) = g.split(i);
            let d = Axis::ALL[d];
            g.at(0, p, d, -1) - g.at(0, p, d, 1)
        }),
    }
    Ok(out)
}

/// Coboundary, degree `k -> k+1`; the adjoint of [`boundary`].
pub fn coboundary(c: &Chain) -> Result<Chain> {
    let degree = c.degree();
    if degree >= TOP_DEGREE {
        return Err(Error::DegreeOutOfRange {
            op: "coboundary",
            degree,
        });
    }
    let g = Gather::new(c);
    let mut out = Chain::zeros_n(c.n(), degree + 1)?;
    match degree {
        0 => par::fill(out.coeffs_mut(), |i| {
            let (d, p) = g.split(i);
            let d = Axis::ALL[d];
            g.at(0, p, d, 1) - g.at(0, p, d, -1)
        }),
        // The face-to-edge incidence matrix is symmetric under the shared
        // (axis, site) indexing, so δ on edges uses the same stencil as ∂ on faces.
        1 => par::fill(out.coeffs_mut(), |i| curl_gather(&g, i)),
        _ => par::fill(out.coeffs_mut(), |i| {
            let q = g.cfg.site_at(i);
            Axis::ALL
                .iter()
                .map(|&d| g.at(d.index(), q, d, 1) - g.at(d.index(), q, d, -1))
                .sum()
        }),
    }
    Ok(out)
}

fn curl_gather(g: &Gather<'_>, i: usize) -> f64 {
    let (a, p) = g.split(i);
    let (b, c) = Axis::ALL[a].in_plane();
    g.at(b.index(), p, c, -1) + g.at(c.index(), p, b, 1)
        - g.at(b.index(), p, c, 1)
        - g.at(c.index(), p, b, -1)
}

/// Duality, degree `k -> 3-k`, pairing cells that cross at a shared center.
pub fn star(c: &Chain) -> Chain {
    star_with_signs(c, &STAR_SIGNS)
}

pub(crate) fn star_with_signs(c: &Chain, signs: &[f64; 4]) -> Chain {
    let s = signs[c.degree()];
    let coeffs = c.coeffs().iter().map(|&x| s * x).collect();
    Chain::from_coeffs_n(c.n(), TOP_DEGREE - c.degree(), coeffs).expect("dual degree is valid")
}

/// `∂δ + δ∂`, with the undefined term dropped in degrees 0 and 3. Positive
/// semidefinite in the cellular inner product.
pub fn laplacian(c: &Chain) -> Chain {
    let up = (c.degree() < TOP_DEGREE).then(|| boundary(&coboundary(c).unwrap()).unwrap());
    let down = (c.degree() > 0).then(|| coboundary(&boundary(c).unwrap()).unwrap());
    match (up, down) {
        (Some(u), Some(d)) => &u + &d,
        (Some(u), None) => u,
        (None, Some(d)) => d,
        (None, None) => unreachable!(),
    }
}
