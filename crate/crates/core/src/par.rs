//! Data-parallel kernels.
//!
//! With the `parallel` feature (default) the per-cell loops run on the rayon
//! pool; without it they run sequentially. Reductions always combine fixed
//! chunks in index order, so results are bit-identical across thread counts
//! and across both builds.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Reduction chunk length.
pub const CHUNK: usize = 4096;

/// Writes `f(i)` into `out[i]` for every index.
pub fn fill<F>(out: &mut [f64], f: F)
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    out.par_iter_mut().enumerate().for_each(|(i, o)| *o = f(i));
    #[cfg(not(feature = "parallel"))]
    out.iter_mut().enumerate().for_each(|(i, o)| *o = f(i));
}

/// Builds a vector of length `len` from `f`.
pub fn collect<F>(len: usize, f: F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    let mut out = vec![0.0; len];
    fill(&mut out, f);
    out
}

/// Deterministic sum of `f(i)` over `0..len`.
pub fn sum_by<F>(len: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    let chunks = len.div_ceil(CHUNK);
    let partial = |c: usize| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(len);
        (lo..hi).fold(0.0, |acc, i| acc + f(i))
    };
    #[cfg(feature = "parallel")]
    let partials: Vec<f64> = (0..chunks).into_par_iter().map(partial).collect();
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<f64> = (0..chunks).map(partial).collect();
    partials.iter().fold(0.0, |acc, p| acc + p)
}

/// Maximum of a nonnegative `f(i)` over `0..len`; `0.0` when empty.
pub fn max_by<F>(len: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let m = (0..len).into_par_iter().map(f).reduce(|| 0.0, f64::max);
    #[cfg(not(feature = "parallel"))]
    let m = (0..len).map(f).fold(0.0, f64::max);
    m
}
