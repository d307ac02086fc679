//! Snapshot files: a header line `lhydro v1, n=<n>, h=<h>, t=<t>` followed by
//! `n³` lines `i,j,k,vx,vy,vz` in i-major, then j, then k order. Velocities
//! are written with 17 significant digits, so a write → read → write cycle
//! reproduces the file byte for byte.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::fields::VectorField;
use crate::lattice::LatticeConfig;

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub n: usize,
    pub h: f64,
    pub t: f64,
    pub field: VectorField,
}

pub fn format_snapshot(field: &VectorField, cfg: &LatticeConfig, t: f64) -> String {
    let mut s = String::with_capacity(cfg.sites() * 80 + 64);
    let _ = writeln!(s, "lhydro v1, n={}, h={:?}, t={:?}", cfg.n(), cfg.h(), t);
    for idx in 0..cfg.sites() {
        let q = cfg.site_at(idx);
        let [x, y, z] = field.get(idx);
        let _ = writeln!(
            s,
            "{},{},{},{:.16e},{:.16e},{:.16e}",
            q.i, q.j, q.k, x, y, z
        );
    }
    s
}

pub fn write_snapshot(path: &Path, field: &VectorField, cfg: &LatticeConfig, t: f64) -> Result<()> {
    std::fs::write(path, format_snapshot(field, cfg, t))?;
    Ok(())
}

pub fn read_snapshot(path: &Path) -> Result<Snapshot> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Snapshot {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_snapshot(&text, path)
}

fn header_field<'a>(part: Option<&'a str>, key: &str) -> std::result::Result<&'a str, String> {
    part.map(str::trim)
        .and_then(|p| p.strip_prefix(key))
        .and_then(|p| p.strip_prefix('='))
        .ok_or_else(|| format!("header is missing `{key}=`"))
}

pub fn parse_snapshot(text: &str, path: &Path) -> Result<Snapshot> {
    let fail = |message: String| Error::Snapshot {
        path: PathBuf::from(path),
        message,
    };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| fail("empty file".into()))?;
    let mut parts = header.split(',');
    if parts.next().map(str::trim) != Some("lhydro v1") {
        return Err(fail(format!("unrecognized header {header:?}")));
    }
    let n: usize = header_field(parts.next(), "n")
        .map_err(&fail)?
        .parse()
        .map_err(|_| fail("bad n in header".into()))?;
    let h: f64 = header_field(parts.next(), "h")
        .map_err(&fail)?
        .parse()
        .map_err(|_| fail("bad h in header".into()))?;
    let t: f64 = header_field(parts.next(), "t")
        .map_err(&fail)?
        .parse()
        .map_err(|_| fail("bad t in header".into()))?;
    let cfg = LatticeConfig::new(n, h).map_err(|e| fail(e.to_string()))?;
    let mut field = VectorField::zeros(&cfg);
    let mut count = 0;
    for (row, line) in lines.enumerate() {
        let lineno = row + 2;
        if count == cfg.sites() {
            if line.trim().is_empty() {
                continue;
            }
            return Err(fail(format!(
                "line {lineno}: more than n³ = {} data lines",
                cfg.sites()
            )));
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 6 {
            return Err(fail(format!(
                "line {lineno}: expected 6 columns, got {}",
                cols.len()
            )));
        }
        let idx: Vec<usize> = cols[..3]
            .iter()
            .map(|c| c.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| fail(format!("line {lineno}: bad site index")))?;
        let expected = cfg.site_at(count);
        if (idx[0], idx[1], idx[2]) != (expected.i, expected.j, expected.k) {
            return Err(fail(format!(
                "line {lineno}: expected site {},{},{} got {},{},{}",
                expected.i, expected.j, expected.k, idx[0], idx[1], idx[2]
            )));
        }
        let mut v = [0.0; 3];
        for (slot, c) in v.iter_mut().zip(&cols[3..]) {
            let x: f64 = c
                .trim()
                .parse()
                .map_err(|_| fail(format!("line {lineno}: bad velocity {c:?}")))?;
            if !x.is_finite() {
                return Err(fail(format!("line {lineno}: non-finite velocity")));
            }
            *slot = x;
        }
        field.set(count, v);
        count += 1;
    }
    if count != cfg.sites() {
        return Err(fail(format!(
            "expected {} data lines, found {count}",
            cfg.sites()
        )));
    }
    Ok(Snapshot { n, h, t, field })
}
