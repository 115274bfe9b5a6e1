//! Monte Carlo estimates of Haar integrals.
//!
//! Samples are grouped into fixed chunks of [`CHUNK_SIZE`] draws. Chunk `c`
//! owns a ChaCha8 generator seeded with [`chunk_seed`]`(seed, c)`, keeps its
//! own Welford accumulator, and the per-chunk accumulators are merged in chunk
//! order. The result therefore depends only on `(seed, samples)`, never on how
//! many worker threads processed the chunks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::haar::{sample_haar, sample_haar_columns, HaarSample};
use crate::diagram::{canonicalize, required_dimension};
use crate::monomial::Monomial;

pub const CHUNK_SIZE: u64 = 8192;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McError {
    #[error("dimension N = {n} is too small, this monomial needs N >= {required}")]
    DimensionTooSmall { required: usize, n: usize },
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(u64),
    #[error("the O(2) oracle only accepts indices 1 and 2 (found {0})")]
    IndexOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    #[serde(rename = "stdError")]
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `|mean - exact| / stdError`.
    pub fn sigma_distance(&self, exact: f64) -> f64 {
        let diff = (self.mean - exact).abs();
        if self.std_error > 0.0 {
            diff / self.std_error
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of chunk `index`: `mix64(seed ^ mix64(index))`.
pub fn chunk_seed(seed: u64, index: u64) -> u64 {
    mix64(seed ^ mix64(index))
}

#[derive(Debug, Clone, Copy, Default)]
struct Welford {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Welford {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(&mut self, other: &Welford) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / total as f64;
        self.m2 +=
            other.m2 + delta * delta * (self.count as f64 * other.count as f64) / total as f64;
        self.count = total;
    }

    fn finish(&self, seed: u64) -> McEstimate {
        let n = self.count as f64;
        let variance = if self.count > 1 {
            self.m2 / (n - 1.0)
        } else {
            0.0
        };
        McEstimate {
            mean: self.mean,
            std_error: (variance / n).sqrt(),
            samples: self.count,
            seed,
        }
    }
}

/// Sampling parameters shared by all estimators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        Self {
            samples,
            seed,
            workers: 0,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// Estimates `E[f_k(Q)]` for several observables at once on shared draws.
/// `cols` is the number of leading columns of `Q` that `f` reads; with
/// `cols == n` every draw is a complete [`sample_haar`] matrix.
pub fn estimate_observables<F>(
    n: usize,
    cols: usize,
    outputs: usize,
    config: McConfig,
    f: F,
) -> Result<Vec<McEstimate>, McError>
where
    F: Fn(&HaarSample, &mut [f64]) + Sync,
{
    if config.samples < 2 {
        return Err(McError::TooFewSamples(config.samples));
    }
    let chunks = config.samples.div_ceil(CHUNK_SIZE);
    let run_chunk = |c: u64| -> Vec<Welford> {
        let mut rng = ChaCha8Rng::seed_from_u64(chunk_seed(config.seed, c));
        let len = CHUNK_SIZE.min(config.samples - c * CHUNK_SIZE);
        let mut acc = vec![Welford::default(); outputs];
        let mut values = vec![0.0; outputs];
        for _ in 0..len {
            let q = if cols == n {
                sample_haar(n, &mut rng)
            } else {
                sample_haar_columns(n, cols, &mut rng)
            };
            f(&q, &mut values);
            for (a, &v) in acc.iter_mut().zip(&values) {
                a.push(v);
            }
        }
        acc
    };

    let per_chunk: Vec<Vec<Welford>> = match config.workers {
        1 => (0..chunks).map(run_chunk).collect(),
        0 => (0..chunks).into_par_iter().map(run_chunk).collect(),
        w => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(|| (0..chunks).into_par_iter().map(run_chunk).collect()),
    };

    let mut total = vec![Welford::default(); outputs];
    for chunk in &per_chunk {
        for (t, c) in total.iter_mut().zip(chunk) {
            t.merge(c);
        }
    }
    Ok(total.iter().map(|w| w.finish(config.seed)).collect())
}

/// Estimates a single scalar observable of the full matrix.
pub fn estimate_observable<F>(n: usize, config: McConfig, f: F) -> Result<McEstimate, McError>
where
    F: Fn(&HaarSample) -> f64 + Sync,
{
    Ok(estimate_observables(n, n, 1, config, |q, out| out[0] = f(q))?[0])
}

/// Rewrites `m` so its indices fit in `1..=n`, relabeling through the
/// canonical diagram if needed.
fn fit(m: &Monomial, n: usize) -> Result<Monomial, McError> {
    let d = canonicalize(m);
    let required = required_dimension(&d);
    if n < required {
        return Err(McError::DimensionTooSmall { required, n });
    }
    if m.max_row() <= n && m.max_col() <= n {
        Ok(m.clone())
    } else {
        Ok(d.to_monomial())
    }
}

/// Estimates several monomial integrals on one shared stream of draws.
pub fn mc_estimate_many(
    monomials: &[Monomial],
    n: usize,
    config: McConfig,
) -> Result<Vec<McEstimate>, McError> {
    let fitted = monomials
        .iter()
        .map(|m| fit(m, n))
        .collect::<Result<Vec<_>, _>>()?;
    let cols = fitted
        .iter()
        .map(Monomial::max_col)
        .max()
        .unwrap_or(0)
        .max(1);
    estimate_observables(n, cols, fitted.len(), config, |q, out| {
        for (o, m) in out.iter_mut().zip(&fitted) {
            *o = m.eval_f64(q.as_slice(), q.cols());
        }
    })
}

/// Monte Carlo estimate of `∫(dO) m` over `O(N)`.
pub fn mc_estimate(m: &Monomial, n: usize, samples: u64, seed: u64) -> Result<McEstimate, McError> {
    mc_estimate_with(m, n, McConfig::new(samples, seed))
}

pub fn mc_estimate_with(m: &Monomial, n: usize, config: McConfig) -> Result<McEstimate, McError> {
    Ok(mc_estimate_many(std::slice::from_ref(m), n, config)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_monomial;

    fn m(text: &str) -> Monomial {
        parse_monomial(text).unwrap()
    }

    #[test]
    fn welford_matches_two_pass() {
        let xs: Vec<f64> = (0..1000).map(|k| ((k * 37) % 101) as f64 / 7.0).collect();
        let mut a = Welford::default();
        let mut b = Welford::default();
        for (k, &x) in xs.iter().enumerate() {
            if k < 333 {
                a.push(x)
            } else {
                b.push(x)
            }
        }
        a.merge(&b);
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
        assert!((a.mean - mean).abs() < 1e-12);
        assert!((a.m2 / 999.0 - var).abs() < 1e-9);
    }

    #[test]
    fn first_moment_is_one_over_n() {
        let est = mc_estimate(&m("O(1,1)^2"), 3, 1_000_000, 17).unwrap();
        assert!(est.sigma_distance(1.0 / 3.0) <= 4.0, "{est:?}");
        assert_eq!(est.samples, 1_000_000);
    }

    #[test]
    fn square_exchange_at_n4() {
        let est = mc_estimate(&m("O(1,1) O(2,1) O(2,2) O(1,2)"), 4, 1_000_000, 23).unwrap();
        assert!(est.sigma_distance(-1.0 / 72.0) <= 4.0, "{est:?}");
    }

    #[test]
    fn odd_monomial_averages_to_zero() {
        let est = mc_estimate(&m("O(1,1)"), 3, 1_000_000, 5).unwrap();
        assert!(est.sigma_distance(0.0) <= 4.0, "{est:?}");
    }

    #[test]
    fn same_seed_same_bits() {
        let a = mc_estimate(&m("O(1,1)^2 O(2,2)^2"), 4, 20_000, 9).unwrap();
        let b = mc_estimate(&m("O(1,1)^2 O(2,2)^2"), 4, 20_000, 9).unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    }

    #[test]
    fn errors() {
        assert_eq!(
            mc_estimate(&m("O(1,1) O(2,2) O(3,3)"), 2, 100, 0),
            Err(McError::DimensionTooSmall { required: 3, n: 2 })
        );
        assert_eq!(
            mc_estimate(&m("O(1,1)"), 2, 1, 0),
            Err(McError::TooFewSamples(1))
        );
    }

    #[test]
    fn large_indices_are_relabeled() {
        let a = mc_estimate(&m("O(7,9)^2"), 2, 10_000, 1).unwrap();
        let b = mc_estimate(&m("O(1,1)^2"), 2, 10_000, 1).unwrap();
        assert_eq!(a.mean, b.mean);
    }

    #[test]
    fn chunk_seeds_differ() {
        assert_ne!(chunk_seed(1, 0), chunk_seed(1, 1));
        assert_ne!(chunk_seed(1, 0), chunk_seed(2, 0));
    }
}
