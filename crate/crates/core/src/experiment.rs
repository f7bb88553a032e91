// SPDX-License-Identifier: Apache-2.0

//! Monte Carlo runs on model samples: empirical scaling slopes against the
//! predicted exponents, and the shape of the normalized count distribution.

use std::io::Write;

use rand::{Rng, RngCore};
use rayon::prelude::*;
use serde::Serialize;

use crate::count::count;
use crate::error::{Error, Result};
use crate::hvmodel::{sample, stream_rng, ModelParams};
use crate::motif::{display_name, SmallGraph};
use crate::varprinciple::{piecewise, Mode, Tau};

const STREAM_SAMPLE_SEEDS: u64 = 4 << 40;
const STREAM_BOOTSTRAP: u64 = 5 << 40;

/// Bootstrap resamples behind every reported confidence interval.
pub const BOOTSTRAP_RESAMPLES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Mean,
    Median,
}

impl Statistic {
    pub fn of(self, xs: &[f64]) -> f64 {
        match self {
            Statistic::Mean => mean(xs),
            Statistic::Median => median(xs),
        }
    }

    /// Mean counts follow the free exponent, medians the typical one.
    pub fn mode(self, induced: bool) -> Mode {
        Mode::from_flags(self == Statistic::Median, induced)
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

pub fn median(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

/// Sample standard deviation over mean.
pub fn coefficient_of_variation(xs: &[f64]) -> f64 {
    let mu = mean(xs);
    if xs.len() < 2 || mu == 0.0 {
        return f64::NAN;
    }
    let var = xs.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / (xs.len() - 1) as f64;
    var.sqrt() / mu
}

/// Least-squares slope of `y` on `x`.
pub fn least_squares_slope(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let (mx, my) = (mean(x), mean(y));
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    Some(sxy / sxx)
}

/// Seed of sample `s` at grid position `i`.
pub fn sample_seed(seed: u64, i: usize, s: usize) -> u64 {
    stream_rng(seed, STREAM_SAMPLE_SEEDS | (i as u64) << 32 | s as u64).next_u64()
}

/// Counts of `h` in `samples` model graphs, in sample order.
fn sample_counts(h: &SmallGraph, induced: bool, tau: &Tau, h_min: f64, n: usize, samples: usize, seed: u64, i: usize) -> Result<Vec<u64>> {
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut p = ModelParams::new(n, tau.clone(), sample_seed(seed, i, s));
            p.h_min = h_min;
            Ok(count(&sample(&p)?, h, induced)?.copies)
        })
        .collect()
}

fn as_f64(counts: &[u64]) -> Vec<f64> {
    counts.iter().map(|&c| c as f64).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalingConfig {
    pub motif: SmallGraph,
    pub statistic: Statistic,
    pub induced: bool,
    pub tau: Tau,
    pub n_grid: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub h_min: f64,
}

impl ScalingConfig {
    pub fn new(motif: SmallGraph, statistic: Statistic, tau: Tau, n_grid: Vec<usize>, samples: usize, seed: u64) -> Self {
        ScalingConfig { motif, statistic, induced: false, tau, n_grid, samples, seed, h_min: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_grid.len() < 4 {
            return Err(Error::Config(format!("n grid needs at least 4 sizes, got {}", self.n_grid.len())));
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) || self.n_grid[0] < 2 {
            return Err(Error::Config("n grid must be strictly ascending and start at 2 or more".into()));
        }
        let least = if self.statistic == Statistic::Mean { 30 } else { 1 };
        if self.samples < least {
            return Err(Error::Config(format!("{:?} runs need at least {least} samples", self.statistic)));
        }
        if !(self.h_min.is_finite() && self.h_min > 0.0) {
            return Err(Error::Config(format!("h_min must be positive, got {}", self.h_min)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub counts: Vec<u64>,
    pub mean: f64,
    pub median: f64,
    pub cv: f64,
    /// 95% bootstrap interval of `mean - median`.
    pub mean_minus_median_ci: [f64; 2],
}

impl ScalingPoint {
    pub fn median_below_mean(&self) -> bool {
        self.mean_minus_median_ci[0] > 0.0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalingRun {
    pub motif: String,
    pub config: ScalingConfig,
    pub points: Vec<ScalingPoint>,
    /// `None` when fewer than two sizes have a positive statistic.
    pub fitted_slope: Option<f64>,
    pub theory_slope: f64,
    pub theory_exponent: String,
    pub log_power: u32,
    /// Sizes whose statistic was zero and left out of the regression.
    pub zero_sizes: Vec<usize>,
}

impl ScalingRun {
    /// Slope of another statistic over the same samples, with the log
    /// correction of that statistic's predicted exponent.
    pub fn slope_of(&self, stat: Statistic) -> Result<Option<f64>> {
        let lp = theory(&self.config.motif, stat, self.config.induced, &self.config.tau)?.1;
        let cols: Vec<Vec<f64>> = self.points.iter().map(|p| as_f64(&p.counts)).collect();
        Ok(fit(&self.config.n_grid, &cols, stat, lp).0)
    }

    /// 95% bootstrap interval of `slope(mean) - slope(median)`, resampling
    /// within each size.
    pub fn slope_gap_ci(&self) -> Result<[f64; 2]> {
        let c = &self.config;
        let lp_mean = theory(&c.motif, Statistic::Mean, c.induced, &c.tau)?.1;
        let lp_median = theory(&c.motif, Statistic::Median, c.induced, &c.tau)?.1;
        let cols: Vec<Vec<f64>> = self.points.iter().map(|p| as_f64(&p.counts)).collect();
        let mut rng = stream_rng(c.seed, STREAM_BOOTSTRAP | 1);
        let mut gaps = Vec::with_capacity(BOOTSTRAP_RESAMPLES);
        for _ in 0..BOOTSTRAP_RESAMPLES {
            let re: Vec<Vec<f64>> = cols.iter().map(|x| resample(x, &mut rng)).collect();
            if let (Some(a), Some(b)) =
                (fit(&c.n_grid, &re, Statistic::Mean, lp_mean).0, fit(&c.n_grid, &re, Statistic::Median, lp_median).0)
            {
                gaps.push(a - b);
            }
        }
        Ok(percentile_interval(gaps))
    }
}

fn theory(h: &SmallGraph, stat: Statistic, induced: bool, tau: &Tau) -> Result<(f64, u32, String)> {
    let pw = piecewise(h, stat.mode(induced))?;
    let e = &pw.at_q(tau.value()).exponent;
    Ok((e.eval_f64(tau.to_f64()), e.log_power, e.to_string()))
}

/// Regression of `log stat - log_power · log log n` on `log n`.
fn fit(grid: &[usize], cols: &[Vec<f64>], stat: Statistic, log_power: u32) -> (Option<f64>, Vec<usize>) {
    let (mut x, mut y, mut zero) = (Vec::new(), Vec::new(), Vec::new());
    for (&n, col) in grid.iter().zip(cols) {
        let s = stat.of(col);
        if s > 0.0 {
            let ln = (n as f64).ln();
            x.push(ln);
            y.push(s.ln() - log_power as f64 * ln.ln());
        } else {
            zero.push(n);
        }
    }
    (least_squares_slope(&x, &y), zero)
}

fn resample<R: Rng>(xs: &[f64], rng: &mut R) -> Vec<f64> {
    (0..xs.len()).map(|_| xs[rng.gen_range(0..xs.len())]).collect()
}

fn percentile_interval(mut v: Vec<f64>) -> [f64; 2] {
    if v.is_empty() {
        return [f64::NAN, f64::NAN];
    }
    v.sort_by(f64::total_cmp);
    let at = |q: f64| v[((q * (v.len() - 1) as f64).round() as usize).min(v.len() - 1)];
    [at(0.025), at(0.975)]
}

/// 95% bootstrap interval of `mean - median`.
pub fn mean_minus_median_ci(xs: &[f64], seed: u64) -> [f64; 2] {
    if xs.is_empty() {
        return [f64::NAN, f64::NAN];
    }
    let mut rng = stream_rng(seed, STREAM_BOOTSTRAP);
    let gaps = (0..BOOTSTRAP_RESAMPLES)
        .map(|_| {
            let r = resample(xs, &mut rng);
            mean(&r) - median(&r)
        })
        .collect();
    percentile_interval(gaps)
}

/// Samples the model along the grid, counts the motif and fits the slope.
pub fn scaling_experiment(config: &ScalingConfig) -> Result<ScalingRun> {
    config.validate()?;
    let (theory_slope, log_power, theory_exponent) =
        theory(&config.motif, config.statistic, config.induced, &config.tau)?;
    let mut points = Vec::with_capacity(config.n_grid.len());
    for (i, &n) in config.n_grid.iter().enumerate() {
        let counts =
            sample_counts(&config.motif, config.induced, &config.tau, config.h_min, n, config.samples, config.seed, i)?;
        let xs = as_f64(&counts);
        points.push(ScalingPoint {
            n,
            mean: mean(&xs),
            median: median(&xs),
            cv: coefficient_of_variation(&xs),
            mean_minus_median_ci: mean_minus_median_ci(&xs, config.seed ^ i as u64),
            counts,
        });
    }
    let cols: Vec<Vec<f64>> = points.iter().map(|p| as_f64(&p.counts)).collect();
    let (fitted_slope, zero_sizes) = fit(&config.n_grid, &cols, config.statistic, log_power);
    Ok(ScalingRun {
        motif: display_name(&config.motif),
        config: config.clone(),
        points,
        fitted_slope,
        theory_slope,
        theory_exponent,
        log_power,
        zero_sizes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionConfig {
    pub motif: SmallGraph,
    pub induced: bool,
    pub tau: Tau,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub h_min: f64,
    pub bins: usize,
}

impl DistributionConfig {
    pub fn new(motif: SmallGraph, tau: Tau, n: usize, samples: usize, seed: u64) -> Self {
        DistributionConfig { motif, induced: false, tau, n, samples, seed, h_min: 1.0, bins: 50 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 1000 {
            return Err(Error::Config(format!("distribution runs need at least 1000 samples, got {}", self.samples)));
        }
        if self.bins == 0 || self.n < 2 {
            return Err(Error::Config("need at least one bin and two vertices".into()));
        }
        if !(self.h_min.is_finite() && self.h_min > 0.0) {
            return Err(Error::Config(format!("h_min must be positive, got {}", self.h_min)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HistogramBin {
    pub bin_lo: f64,
    pub bin_hi: f64,
    pub density: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionRun {
    pub motif: String,
    pub config: DistributionConfig,
    pub counts: Vec<u64>,
    /// Counts divided by their sample mean; all zero when every count is.
    pub normalized: Vec<f64>,
    pub histogram: Vec<HistogramBin>,
    pub cv: f64,
    pub normalized_median: f64,
    /// 95% bootstrap interval of `1 - normalized median`.
    pub mean_minus_median_ci: [f64; 2],
}

impl DistributionRun {
    pub fn median_below_mean(&self) -> bool {
        self.mean_minus_median_ci[0] > 0.0
    }

    /// Midpoint of the densest bin.
    pub fn mode(&self) -> f64 {
        self.histogram
            .iter()
            .max_by(|a, b| a.density.total_cmp(&b.density))
            .map_or(f64::NAN, |b| (b.bin_lo + b.bin_hi) / 2.0)
    }
}

/// Equal-width bins over `[0, max]` with densities integrating to one.
pub fn histogram(xs: &[f64], bins: usize) -> Vec<HistogramBin> {
    let hi = xs.iter().cloned().fold(0.0, f64::max);
    if xs.is_empty() || bins == 0 || hi <= 0.0 {
        return Vec::new();
    }
    let w = hi / bins as f64;
    let mut c = vec![0usize; bins];
    for &x in xs {
        c[((x / w) as usize).min(bins - 1)] += 1;
    }
    c.iter()
        .enumerate()
        .map(|(i, &k)| HistogramBin {
            bin_lo: i as f64 * w,
            bin_hi: (i + 1) as f64 * w,
            density: k as f64 / (xs.len() as f64 * w),
        })
        .collect()
}

pub fn distribution_experiment(config: &DistributionConfig) -> Result<DistributionRun> {
    config.validate()?;
    let counts = sample_counts(&config.motif, config.induced, &config.tau, config.h_min, config.n, config.samples, config.seed, 0)?;
    let xs = as_f64(&counts);
    let mu = mean(&xs);
    let normalized: Vec<f64> = if mu > 0.0 { xs.iter().map(|x| x / mu).collect() } else { vec![0.0; xs.len()] };
    Ok(DistributionRun {
        motif: display_name(&config.motif),
        histogram: histogram(&normalized, config.bins),
        cv: coefficient_of_variation(&xs),
        normalized_median: median(&normalized),
        mean_minus_median_ci: mean_minus_median_ci(&normalized, config.seed),
        normalized,
        counts,
        config: config.clone(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CvComparison {
    pub runs: Vec<DistributionRun>,
    pub cv: Vec<f64>,
    /// `cv[1] / cv[0]`.
    pub ratio: f64,
    pub shrinks: bool,
}

/// The same configuration at two sizes, smaller first.
pub fn compare_cv(config: &DistributionConfig, n_small: usize, n_large: usize) -> Result<CvComparison> {
    if n_small >= n_large {
        return Err(Error::Config(format!("expected n_small < n_large, got {n_small} and {n_large}")));
    }
    let runs = [n_small, n_large]
        .iter()
        .map(|&n| distribution_experiment(&DistributionConfig { n, ..config.clone() }))
        .collect::<Result<Vec<_>>>()?;
    let cv: Vec<f64> = runs.iter().map(|r| r.cv).collect();
    Ok(CvComparison { ratio: cv[1] / cv[0], shrinks: cv[1] < cv[0], cv, runs })
}

/// Raw counts as `n,sample,count`.
pub fn write_samples_csv<W: Write>(points: &[ScalingPoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "sample", "count"]).map_err(csv_err)?;
    for p in points {
        for (s, c) in p.counts.iter().enumerate() {
            w.write_record([p.n.to_string(), s.to_string(), c.to_string()]).map_err(csv_err)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_histogram_csv<W: Write>(bins: &[HistogramBin], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for b in bins {
        w.serialize(b).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
