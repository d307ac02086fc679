//! Run configuration: line-oriented `key = value` text with `#` comments.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use crate::dynamics::{Model, Scheme};
use crate::error::{Error, Result};
use crate::hodge::SolverOptions;
use crate::lattice::LatticeConfig;

#[derive(Debug, Clone, PartialEq)]
pub enum InitKind {
    TaylorGreen,
    RandomSolenoidal,
    File(PathBuf),
}

impl InitKind {
    fn parse(s: &str) -> std::result::Result<Self, String> {
        match s {
            "taylor_green" => Ok(InitKind::TaylorGreen),
            "random_solenoidal" => Ok(InitKind::RandomSolenoidal),
            _ => match s.strip_prefix("file:") {
                Some(p) if !p.is_empty() => Ok(InitKind::File(PathBuf::from(p))),
                _ => Err(format!(
                    "unknown init {s:?} (expected taylor_green, random_solenoidal or file:<path>)"
                )),
            },
        }
    }

    fn render(&self) -> String {
        match self {
            InitKind::TaylorGreen => "taylor_green".into(),
            InitKind::RandomSolenoidal => "random_solenoidal".into(),
            InitKind::File(p) => format!("file:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub h: f64,
    pub nu: f64,
    /// Step size; `0` selects one from the initial field.
    pub dt: f64,
    pub t_end: f64,
    pub init: InitKind,
    pub seed: u64,
    pub amplitude: f64,
    pub output_every: u64,
    pub out_dir: PathBuf,
    pub solver_tol: f64,
    pub scheme: Scheme,
    /// Include the momentum-flux term.
    pub nonlinear: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 4,
            h: 1.0,
            nu: 0.01,
            dt: 0.0,
            t_end: 0.0,
            init: InitKind::TaylorGreen,
            seed: 0,
            amplitude: 1.0,
            output_every: 1,
            out_dir: PathBuf::from("out"),
            solver_tol: 1e-10,
            scheme: Scheme::Rk4,
            nonlinear: true,
        }
    }
}

const KEYS: [&str; 13] = [
    "n",
    "h",
    "nu",
    "dt",
    "t_end",
    "init",
    "seed",
    "amplitude",
    "output_every",
    "out_dir",
    "solver_tol",
    "scheme",
    "nonlinear",
];

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Config {
        line,
        message: message.into(),
    }
}

fn number(line: usize, key: &str, value: &str) -> Result<f64> {
    let x: f64 = value
        .parse()
        .map_err(|_| err(line, format!("{key}: {value:?} is not a number")))?;
    if !x.is_finite() {
        return Err(err(line, format!("{key} must be finite, got {value}")));
    }
    Ok(x)
}

fn integer<T: std::str::FromStr>(line: usize, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| {
        err(
            line,
            format!("{key}: {value:?} is not a non-negative integer"),
        )
    })
}

/// Parses and validates a configuration. Keys not present keep their
/// defaults; errors carry the 1-based line number (0 for defaults).
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(line, "expected `key = value`"))?;
        let (key, value) = (key.trim(), value.trim());
        let known = KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| err(line, format!("unknown key {key:?}")))?;
        if let Some(prev) = seen.insert(known, line) {
            return Err(err(
                line,
                format!("duplicate key {key:?} (first set on line {prev})"),
            ));
        }
        match key {
            "n" => cfg.n = integer(line, key, value)?,
            "h" => cfg.h = number(line, key, value)?,
            "nu" => cfg.nu = number(line, key, value)?,
            "dt" => cfg.dt = number(line, key, value)?,
            "t_end" => cfg.t_end = number(line, key, value)?,
            "init" => cfg.init = InitKind::parse(value).map_err(|m| err(line, m))?,
            "seed" => cfg.seed = integer(line, key, value)?,
            "amplitude" => cfg.amplitude = number(line, key, value)?,
            "output_every" => cfg.output_every = integer(line, key, value)?,
            "out_dir" => {
                if value.is_empty() {
                    return Err(err(line, "out_dir must not be empty"));
                }
                cfg.out_dir = PathBuf::from(value)
            }
            "solver_tol" => cfg.solver_tol = number(line, key, value)?,
            "scheme" => cfg.scheme = value.parse().map_err(|m: String| err(line, m))?,
            "nonlinear" => {
                cfg.nonlinear = value
                    .parse()
                    .map_err(|_| err(line, format!("nonlinear: {value:?} is not true or false")))?
            }
            _ => unreachable!(),
        }
    }
    let at = |key: &str| seen.get(key).copied().unwrap_or(0);
    if cfg.n < 4 || cfg.n % 2 != 0 {
        return Err(err(
            at("n"),
            format!("n must be even and at least 4, got {}", cfg.n),
        ));
    }
    let checks: [(&str, bool, &str); 6] = [
        ("h", cfg.h > 0.0, "h must be positive"),
        ("nu", cfg.nu >= 0.0, "nu must be non-negative"),
        ("dt", cfg.dt >= 0.0, "dt must be non-negative"),
        ("t_end", cfg.t_end >= 0.0, "t_end must be non-negative"),
        (
            "output_every",
            cfg.output_every >= 1,
            "output_every must be at least 1",
        ),
        (
            "solver_tol",
            cfg.solver_tol > 0.0,
            "solver_tol must be positive",
        ),
    ];
    if let Some((key, _, msg)) = checks.iter().find(|(_, ok, _)| !ok) {
        return Err(err(at(key), *msg));
    }
    Ok(cfg)
}

impl RunConfig {
    pub fn lattice(&self) -> Result<LatticeConfig> {
        LatticeConfig::new(self.n, self.h)
    }

    pub fn solver(&self) -> SolverOptions {
        SolverOptions::with_tol(self.solver_tol)
    }

    pub fn model(&self) -> Model {
        Model {
            nu: self.nu,
            nonlinear: self.nonlinear,
        }
    }

    /// Canonical text form; parsing it yields `self` again.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n = {}", self.n);
        let _ = writeln!(s, "h = {:?}", self.h);
        let _ = writeln!(s, "nu = {:?}", self.nu);
        let _ = writeln!(s, "dt = {:?}", self.dt);
        let _ = writeln!(s, "t_end = {:?}", self.t_end);
        let _ = writeln!(s, "init = {}", self.init.render());
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(s, "amplitude = {:?}", self.amplitude);
        let _ = writeln!(s, "output_every = {}", self.output_every);
        let _ = writeln!(s, "out_dir = {}", self.out_dir.display());
        let _ = writeln!(s, "solver_tol = {:?}", self.solver_tol);
        let _ = writeln!(s, "scheme = {}", self.scheme.name());
        let _ = writeln!(s, "nonlinear = {}", self.nonlinear);
        s
    }
}
