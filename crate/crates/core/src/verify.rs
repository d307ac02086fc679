//! Structural verification suite: the chain-complex identities, harmonic
//! ranks, Hodge decomposition and model operators, each checked against an
//! independent path.

use std::fmt;

use crate::assembly::{
    boundary_matrix, laplacian_matrix, neighbor_stencil_matrix, star_matrix_with_signs, IntMatrix,
};
use crate::chain::Chain;
use crate::error::Result;
use crate::fields::{nonlinear_term, scalar_laplacian, VectorField};
use crate::hodge::{self, dense, hodge_decompose, SolverOptions};
use crate::init::UniformStream;
use crate::lattice::{Axis, LatticeConfig, ParityClass, TOP_DEGREE};
use crate::operators::{self, STAR_SIGNS};

/// Expected kernel dimensions of `Δ` by degree.
pub const HARMONIC_RANKS: [usize; 4] = [8, 24, 24, 8];

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n: usize,
    pub seed: u64,
    /// Random chains per degree for the Hodge checks.
    pub hodge_samples: usize,
    /// Random fields for the nonlinear-term oracle.
    pub flux_samples: usize,
    /// Random inputs for the stencil comparison.
    pub stencil_samples: usize,
    /// Negative control: flips the edge/face duality sign.
    pub corrupt_star: bool,
}

impl VerifyOptions {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            seed: 0,
            hodge_samples: 50,
            flux_samples: 20,
            stencil_samples: 50,
            corrupt_star: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// The matrix of a linear chain map, recovered by applying it to every
/// basis chain. Entries must be integers.
pub fn matrix_of(cfg: &LatticeConfig, degree: usize, op: impl Fn(&Chain) -> Chain) -> IntMatrix {
    let cols = cfg.dims(degree).unwrap();
    let mut t = Vec::new();
    let mut rows = 0;
    for col in 0..cols {
        let mut e = Chain::zeros(cfg, degree).unwrap();
        e.coeffs_mut()[col] = 1.0;
        let img = op(&e);
        rows = img.len();
        for (r, &v) in img.coeffs().iter().enumerate() {
            if v != 0.0 {
                assert_eq!(v.fract(), 0.0, "operator entry {v} is not an integer");
                t.push((r, col, v as i64));
            }
        }
    }
    IntMatrix::from_triplets(rows, cols, t)
}

/// All per-degree duality signs in `{±1}⁴` for which `★★ = id`,
/// `★δ = ∂★` and `★∂ = δ★` hold on the assembled operators.
pub fn solve_star_signs(cfg: &LatticeConfig) -> Result<Vec<[i64; 4]>> {
    let bd: Vec<IntMatrix> = (1..=TOP_DEGREE)
        .map(|k| boundary_matrix(cfg, k))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for mask in 0..16u32 {
        let signs: [i64; 4] = std::array::from_fn(|k| if mask >> k & 1 == 1 { -1 } else { 1 });
        if star_identities_hold(cfg, &bd, &signs)? {
            out.push(signs);
        }
    }
    Ok(out)
}

fn star_identities_hold(cfg: &LatticeConfig, bd: &[IntMatrix], signs: &[i64; 4]) -> Result<bool> {
    let st: Vec<IntMatrix> = (0..=TOP_DEGREE)
        .map(|k| star_matrix_with_signs(cfg, k, signs))
        .collect::<Result<_>>()?;
    for k in 0..=TOP_DEGREE {
        let id = IntMatrix::identity(cfg.dims(k)?);
        if st[TOP_DEGREE - k].matmul(&st[k]) != id {
            return Ok(false);
        }
        // δ_k = ∂_{k+1}ᵀ : L_k -> L_{k+1}
        if k < TOP_DEGREE {
            let delta = bd[k].transpose();
            // ★ δ on L_k equals ∂ ★ on L_k (both land in L_{2-k}).
            if st[k + 1].matmul(&delta) != bd[TOP_DEGREE - k - 1].matmul(&st[k]) {
                return Ok(false);
            }
        }
        if k > 0 {
            // ★ ∂ on L_k equals δ ★ on L_k (both land in L_{4-k}).
            let delta = bd[TOP_DEGREE - k].transpose();
            if st[k - 1].matmul(&bd[k - 1]) != delta.matmul(&st[k]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{★δ(V_F·v_F)}` by direct summation: for every cube, loop over its six
/// faces, evaluate the face velocity at the face center and its component
/// along the outward normal, sum the products, and attach the cube total to
/// the three edges centered at the cube's center.
pub fn nonlinear_term_oracle(v: &VectorField, cfg: &LatticeConfig) -> Chain {
    let two_h = 2.0 * cfg.h();
    let sites = cfg.sites();
    let mut out = Chain::zeros(cfg, 1).unwrap();
    for cube in 0..sites {
        let q = cfg.site_at(cube);
        let mut total = [0.0f64; 3];
        for axis in Axis::ALL {
            for outward in [1i64, -1] {
                let center = cfg.site_index(cfg.shift(q, axis, outward));
                let vel = v.get(center);
                let face_vel = vel.map(|x| two_h * x);
                let mut normal = [0.0; 3];
                normal[axis.index()] = outward as f64;
                let normal_part: f64 = face_vel.iter().zip(&normal).map(|(a, b)| a * b).sum();
                for c in 0..3 {
                    total[c] += face_vel[c] * normal_part;
                }
            }
        }
        // The canonical cube agrees with the orientation of space.
        for (c, t) in total.iter().enumerate() {
            out.coeffs_mut()[c * sites + cube] = *t;
        }
    }
    out
}

fn random_chain(cfg: &LatticeConfig, degree: usize, rng: &mut UniformStream) -> Chain {
    let len = cfg.dims(degree).unwrap();
    let coeffs = (0..len).map(|_| rng.symmetric(1.0)).collect();
    Chain::from_coeffs(cfg, degree, coeffs).unwrap()
}

fn random_integer_chain(cfg: &LatticeConfig, degree: usize, rng: &mut UniformStream) -> Chain {
    let len = cfg.dims(degree).unwrap();
    let coeffs = (0..len)
        .map(|_| (rng.unit() * 41.0).floor() - 20.0)
        .collect();
    Chain::from_coeffs(cfg, degree, coeffs).unwrap()
}

/// Runs every check and collects the results.
pub fn run_verify(opts: &VerifyOptions) -> Result<VerifyReport> {
    let cfg = LatticeConfig::new(opts.n, 1.0)?;
    let mut rng = UniformStream::new(opts.seed);
    let mut report = VerifyReport::default();
    let n = cfg.n();

    let dims: Vec<usize> = (0..=TOP_DEGREE)
        .map(|k| cfg.dims(k))
        .collect::<Result<_>>()?;
    let s = n * n * n;
    let edges_per_site = (0..s).all(|site| {
        cfg.cells(1)
            .unwrap()
            .iter()
            .filter(|e| cfg.site_index(e.center) == site)
            .count()
            == 3
    });
    report.push(
        "dims",
        dims == [s, 3 * s, 3 * s, s] && edges_per_site,
        format!("{dims:?}; three edges centered at every site: {edges_per_site}"),
    );

    let bd: Vec<IntMatrix> = (1..=TOP_DEGREE)
        .map(|k| boundary_matrix(&cfg, k))
        .collect::<Result<_>>()?;
    let dd = bd[0].matmul(&bd[1]).is_zero() && bd[1].matmul(&bd[2]).is_zero();
    report.push(
        "boundary∘boundary = 0",
        dd,
        "exact integer products in degrees 2 and 3",
    );
    let cobd: Vec<IntMatrix> = bd.iter().map(IntMatrix::transpose).collect();
    let cc = cobd[1].matmul(&cobd[0]).is_zero() && cobd[2].matmul(&cobd[1]).is_zero();
    report.push(
        "coboundary∘coboundary = 0",
        cc,
        "exact integer products in degrees 0 and 1",
    );

    let mut adjoint = true;
    for k in 0..TOP_DEGREE {
        let stencil_d = matrix_of(&cfg, k + 1, |c| operators::boundary(c).unwrap());
        let stencil_c = matrix_of(&cfg, k, |c| operators::coboundary(c).unwrap());
        adjoint &= stencil_d == bd[k] && stencil_c == cobd[k];
    }
    report.push(
        "coboundary = boundaryᵀ",
        adjoint,
        "stencil operators equal the geometric incidence matrices and their transposes",
    );

    let mut signs = STAR_SIGNS.map(|x| x as i64);
    if opts.corrupt_star {
        signs[1] = -signs[1];
        signs[2] = -signs[2];
    }
    let st: Vec<IntMatrix> = (0..=TOP_DEGREE)
        .map(|k| star_matrix_with_signs(&cfg, k, &signs))
        .collect::<Result<_>>()?;
    let mut intertwine = true;
    for k in 0..TOP_DEGREE {
        intertwine &= st[k + 1].matmul(&cobd[k]) == bd[TOP_DEGREE - k - 1].matmul(&st[k]);
    }
    for k in 1..=TOP_DEGREE {
        intertwine &= st[k - 1].matmul(&bd[k - 1]) == cobd[TOP_DEGREE - k].matmul(&st[k]);
    }
    if !opts.corrupt_star {
        for (k, m) in st.iter().enumerate() {
            intertwine &= matrix_of(&cfg, k, operators::star) == *m;
        }
    }
    report.push(
        "star intertwines",
        intertwine,
        format!("★δ = ∂★ and ★∂ = δ★ with signs {signs:?}"),
    );
    let involution =
        (0..=TOP_DEGREE).all(|k| st[TOP_DEGREE - k].matmul(&st[k]) == IntMatrix::identity(dims[k]));
    report.push("star∘star = id", involution, "all degrees");

    let ranks: Vec<usize> = if n <= dense::MAX_DENSE_N {
        (0..=TOP_DEGREE)
            .map(|k| dense::harmonic_rank(&cfg, k))
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    report.push(
        "harmonic ranks",
        ranks == HARMONIC_RANKS,
        format!(
            "nullity {ranks:?} at threshold {:e}",
            dense::NULLITY_THRESHOLD
        ),
    );

    let mut basis_ok = n <= dense::MAX_DENSE_N;
    let mut basis_err: f64 = 0.0;
    if basis_ok {
        for k in 0..=TOP_DEGREE {
            for _ in 0..3 {
                let c = random_chain(&cfg, k, &mut rng);
                let fast = hodge::harmonic_project(&c);
                let slow = dense::harmonic_project(&cfg, &c)?;
                basis_err = basis_err.max((&fast - &slow).norm() / c.norm());
            }
        }
        basis_ok = basis_err <= 1e-10;
    }
    report.push(
        "closed-form harmonic basis",
        basis_ok,
        format!("max projection mismatch {basis_err:.2e}"),
    );

    let solver = SolverOptions::with_tol(1e-12);
    let (mut recon, mut ortho, mut cyc) = (0.0f64, 0.0f64, 0.0f64);
    for k in 0..=TOP_DEGREE {
        for _ in 0..opts.hodge_samples {
            let c = random_chain(&cfg, k, &mut rng);
            let p = hodge_decompose(&c, &solver)?;
            let cn = c.norm();
            recon = recon.max((&c - &p.reconstruct()).norm() / cn);
            let cn2 = cn * cn;
            for (a, b) in [
                (&p.exact, &p.coexact),
                (&p.exact, &p.harmonic),
                (&p.coexact, &p.harmonic),
            ] {
                ortho = ortho.max(a.dot(b).abs() / cn2);
            }
            if k > 0 {
                cyc = cyc.max(operators::boundary(&p.harmonic)?.norm() / cn);
            }
            if k < TOP_DEGREE {
                cyc = cyc.max(operators::coboundary(&p.harmonic)?.norm() / cn);
            }
        }
    }
    report.push(
        "hodge decomposition",
        recon <= 1e-10 && ortho <= 1e-10 && cyc <= 1e-10,
        format!("reconstruction {recon:.2e}, orthogonality {ortho:.2e}, harmonic cycle/cocycle {cyc:.2e}"),
    );

    let (partition, detail) = check_component_partition(&cfg, &bd)?;
    report.push("component partition", partition, detail);

    let mut flux_err: f64 = 0.0;
    for _ in 0..opts.flux_samples {
        let v = VectorField::unbraces(&random_chain(&cfg, 1, &mut rng))?;
        let fast = nonlinear_term(&v, &cfg);
        let slow = nonlinear_term_oracle(&v, &cfg);
        flux_err = flux_err.max((&fast - &slow).norm() / slow.norm());
    }
    report.push(
        "nonlinear term oracle",
        flux_err <= 1e-12,
        format!("max relative difference {flux_err:.2e}"),
    );

    let lap0 = laplacian_matrix(&cfg, 0)?;
    let mut stencil_ok = neighbor_stencil_matrix(&cfg) == lap0.scaled(-1);
    for _ in 0..opts.stencil_samples {
        let f = random_integer_chain(&cfg, 0, &mut rng);
        stencil_ok &= scalar_laplacian(&f, &cfg)? == -&operators::laplacian(&f);
    }
    report.push(
        "stencil = −∂δ",
        stencil_ok,
        format!(
            "assembled and {} integer-valued inputs, exact",
            opts.stencil_samples
        ),
    );

    Ok(report)
}

/// Every incidence joins cells with the same parity label, and the
/// Laplacian restricted to each label is the same matrix.
pub fn check_component_partition(cfg: &LatticeConfig, bd: &[IntMatrix]) -> Result<(bool, String)> {
    let label = |degree: usize, idx: usize| cfg.component_of(&cfg.cell_at(degree, idx).unwrap());
    let mut ok = true;
    for (k, m) in bd.iter().enumerate() {
        let degree = k + 1;
        ok &= m
            .triplets()
            .all(|(r, c, _)| label(degree - 1, r) == label(degree, c));
    }
    let mut blocks_equal = true;
    let mut block_size = 0;
    for degree in 0..=TOP_DEGREE {
        let lap = laplacian_matrix(cfg, degree)?;
        ok &= lap
            .triplets()
            .all(|(r, c, _)| label(degree, r) == label(degree, c));
        let members: Vec<Vec<usize>> = ParityClass::all()
            .iter()
            .map(|p| {
                (0..lap.rows())
                    .filter(|&i| label(degree, i) == *p)
                    .collect()
            })
            .collect();
        block_size = members[0].len();
        let first = lap.submatrix(&members[0], &members[0]);
        for m in &members[1..] {
            blocks_equal &= m.len() == block_size && lap.submatrix(m, m) == first;
        }
    }
    let m = cfg.n() / 2;
    let detail = format!("8 labels, blocks of {block_size} cells in degree 3 ((n/2)³ = {}), identical: {blocks_equal}", m * m * m);
    Ok((ok && blocks_equal, detail))
}
