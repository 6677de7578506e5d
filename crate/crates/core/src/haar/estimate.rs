use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sample::{commutator_product_trace, sample};
use crate::error::{Error, Result};
use crate::repdims::GroupFamily;

const HIST_LOW: f64 = -4.05;
const HIST_HIGH: f64 = 4.05;
const HIST_WIDTH: f64 = 0.1;
const HIST_BINS: usize = 81;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EstimateConfig {
    pub group: GroupFamily,
    pub k: usize,
    pub r_max: usize,
    /// Ignored (treated as 0) for groups with a real trace.
    pub s_max: usize,
    pub sample_count: usize,
    pub seed: u64,
    /// Threads used for sampling; does not affect the result.
    pub workers: usize,
}

/// Empirical mean of `T^r conj(T)^s`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentEstimate {
    pub r: usize,
    pub s: usize,
    pub mean_re: f64,
    pub mean_im: f64,
    /// `sqrt(Var(Re) + Var(Im)) / sqrt(samples)`; zero for a single sample.
    pub stderr: f64,
}

impl MomentEstimate {
    pub fn mean(&self) -> Complex64 {
        Complex64::new(self.mean_re, self.mean_im)
    }
}

/// 81 bins of width 0.1 on `[−4.05, 4.05)`, plus one overflow count at each
/// end.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub low: f64,
    pub high: f64,
    pub width: f64,
    pub underflow: u64,
    pub counts: Vec<u64>,
    pub overflow: u64,
}

impl Default for Histogram {
    fn default() -> Self {
        Histogram {
            low: HIST_LOW,
            high: HIST_HIGH,
            width: HIST_WIDTH,
            underflow: 0,
            counts: vec![0; HIST_BINS],
            overflow: 0,
        }
    }
}

impl Histogram {
    pub fn from_values(values: impl IntoIterator<Item = f64>) -> Self {
        let mut h = Histogram::default();
        for v in values {
            h.add(v);
        }
        h
    }

    pub fn add(&mut self, x: f64) {
        if x < self.low {
            self.underflow += 1;
        } else if x >= self.high || x.is_nan() {
            self.overflow += 1;
        } else {
            let last = self.counts.len() - 1;
            let pos = ((x - self.low) / self.width).floor() as usize;
            self.counts[pos.min(last)] += 1;
        }
    }

    pub fn total(&self) -> u64 {
        self.underflow + self.overflow + self.counts.iter().sum::<u64>()
    }
}

/// Result of a Monte Carlo run. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalMoments {
    pub group: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
    pub moments: Vec<MomentEstimate>,
    pub histogram_re: Histogram,
    pub histogram_im: Histogram,
}

impl EmpiricalMoments {
    pub fn get(&self, r: usize, s: usize) -> Option<&MomentEstimate> {
        self.moments.iter().find(|m| m.r == r && m.s == s)
    }
}

/// Recursive halving; the split points depend only on the length.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 64;
    if xs.len() <= BLOCK {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn one_trace(group: GroupFamily, k: usize, seed: u64, index: usize) -> Result<Complex64> {
    let mut rng = sample_rng(seed, index);
    let mut xs = Vec::with_capacity(k);
    let mut ys = Vec::with_capacity(k);
    for _ in 0..k {
        xs.push(sample(group, &mut rng)?);
        ys.push(sample(group, &mut rng)?);
    }
    commutator_product_trace(&xs, &ys)
}

/// Traces of `count` independent commutator products, in sample-index
/// order. Sample `i` draws from its own ChaCha stream `(seed, i)`, so the
/// output does not depend on `workers`.
pub fn trace_samples(group: GroupFamily, k: usize, count: usize, seed: u64, workers: usize) -> Result<Vec<Complex64>> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Sampling(format!("thread pool: {e}")))?;
    pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| one_trace(group, k, seed, i))
            .collect()
    })
}

fn estimate_one(traces: &[Complex64], r: usize, s: usize) -> MomentEstimate {
    let values: Vec<Complex64> = traces
        .iter()
        .map(|t| t.powu(r as u32) * t.conj().powu(s as u32))
        .collect();
    let n = values.len() as f64;
    let re: Vec<f64> = values.iter().map(|v| v.re).collect();
    let im: Vec<f64> = values.iter().map(|v| v.im).collect();
    let mean_re = pairwise_sum(&re) / n;
    let mean_im = pairwise_sum(&im) / n;

    let (mut s1, mut s2) = (Compensated::default(), Compensated::default());
    let (mut t1, mut t2) = (Compensated::default(), Compensated::default());
    for v in &values {
        s1.add(v.re);
        s2.add(v.re * v.re);
        t1.add(v.im);
        t2.add(v.im * v.im);
    }
    let stderr = if values.len() > 1 {
        let var_re = (s2.value() - s1.value() * s1.value() / n) / (n - 1.0);
        let var_im = (t2.value() - t1.value() * t1.value() / n) / (n - 1.0);
        ((var_re + var_im).max(0.0) / n).sqrt()
    } else {
        0.0
    };
    MomentEstimate { r, s, mean_re, mean_im, stderr }
}

/// Empirical `E[T^r conj(T)^s]` for `r ≤ r_max`, `s ≤ s_max`, with
/// histograms of the real and imaginary parts of `T`.
pub fn estimate_moments(config: &EstimateConfig) -> Result<EmpiricalMoments> {
    if config.sample_count == 0 {
        return Err(Error::domain("sample count must be at least 1"));
    }
    let traces = trace_samples(config.group, config.k, config.sample_count, config.seed, config.workers)?;
    let s_max = if config.group.kind.has_real_trace() { 0 } else { config.s_max };
    let moments = (0..=config.r_max)
        .flat_map(|r| (0..=s_max).map(move |s| (r, s)))
        .map(|(r, s)| estimate_one(&traces, r, s))
        .collect();
    Ok(EmpiricalMoments {
        group: config.group.kind.short_name().to_string(),
        n: config.group.n,
        k: config.k,
        seed: config.seed,
        samples: config.sample_count,
        moments,
        histogram_re: Histogram::from_values(traces.iter().map(|t| t.re)),
        histogram_im: Histogram::from_values(traces.iter().map(|t| t.im)),
    })
}
