// SPDX-License-Identifier: Apache-2.0

//! Hidden-variable random graphs: Pareto weights with density `∝ h^{-τ}` on
//! `h ≥ h_min`, and independent edges with probability `min(h h'/(μ n), 1)`.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::host::HostGraph;
use crate::varprinciple::Tau;

/// Largest `n` sampled by the exact pair loop under [`PairScheme::Auto`].
pub const EXACT_PAIR_LIMIT: usize = 2000;

const STREAM_WEIGHTS: u64 = 0;
const STREAM_ROWS: u64 = 1 << 40;
const STREAM_BUCKETS: u64 = 2 << 40;

/// Generator for one independent stream of a seeded run.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelParams {
    pub n: usize,
    pub tau: Tau,
    pub h_min: f64,
    /// `None` means the analytic Pareto mean.
    pub mu: Option<f64>,
    pub seed: u64,
}

impl ModelParams {
    pub fn new(n: usize, tau: Tau, seed: u64) -> Self {
        ModelParams { n, tau, h_min: 1.0, mu: None, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h_min.is_finite() && self.h_min > 0.0) {
            return Err(Error::InvalidParam(format!("h_min must be positive, got {}", self.h_min)));
        }
        if let Some(mu) = self.mu {
            if !(mu.is_finite() && mu > 0.0) {
                return Err(Error::InvalidParam(format!("mu must be positive, got {mu}")));
            }
        }
        Ok(())
    }

    pub fn mu(&self) -> f64 {
        self.mu.unwrap_or_else(|| analytic_mean(&self.tau, self.h_min))
    }
}

/// Mean of the Pareto law: `h_min (τ-1)/(τ-2)`.
pub fn analytic_mean(tau: &Tau, h_min: f64) -> f64 {
    let t = tau.to_f64();
    h_min * (t - 1.0) / (t - 2.0)
}

/// I.i.d. weights `h_min · u^{-1/(τ-1)}` with `u` uniform on `(0, 1]`.
pub fn sample_weights(params: &ModelParams) -> Result<Vec<f64>> {
    params.validate()?;
    let mut rng = stream_rng(params.seed, STREAM_WEIGHTS);
    let e = -1.0 / (params.tau.to_f64() - 1.0);
    Ok((0..params.n).map(|_| params.h_min * (1.0 - rng.gen::<f64>()).powf(e)).collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairScheme {
    /// Exact loop up to [`EXACT_PAIR_LIMIT`] vertices, bucketed above.
    #[default]
    Auto,
    Exact,
    Bucketed,
}

#[inline]
fn pair_probability(a: f64, b: f64, scale: f64) -> f64 {
    (a * b / scale).min(1.0)
}

/// Samples the edges for `weights`; the weights are attached to the result.
pub fn sample_graph(weights: &[f64], mu: f64, seed: u64) -> Result<HostGraph> {
    sample_graph_with(weights, mu, seed, PairScheme::Auto)
}

pub fn sample_graph_with(weights: &[f64], mu: f64, seed: u64, scheme: PairScheme) -> Result<HostGraph> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::InvalidParam(format!("mu must be positive, got {mu}")));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
        return Err(Error::InvalidParam(format!("weights must be positive, got {w}")));
    }
    let n = weights.len();
    let exact = match scheme {
        PairScheme::Auto => n <= EXACT_PAIR_LIMIT,
        PairScheme::Exact => true,
        PairScheme::Bucketed => false,
    };
    let edges = if exact { exact_pairs(weights, mu, seed) } else { bucketed_pairs(weights, mu, seed) };
    HostGraph::from_edges(n, &edges)?.with_weights(weights.to_vec())
}

fn exact_pairs(weights: &[f64], mu: f64, seed: u64) -> Vec<(u32, u32)> {
    let n = weights.len();
    let scale = mu * n as f64;
    let rows: Vec<Vec<(u32, u32)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream_rng(seed, STREAM_ROWS | i as u64);
            let mut out = Vec::new();
            for j in i + 1..n {
                if rng.gen::<f64>() < pair_probability(weights[i], weights[j], scale) {
                    out.push((i as u32, j as u32));
                }
            }
            out
        })
        .collect();
    rows.concat()
}

/// Vertices grouped by `floor(log2(w / w_min))`.
fn weight_buckets(weights: &[f64]) -> Vec<Vec<u32>> {
    let lo = weights.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut buckets: Vec<Vec<u32>> = Vec::new();
    for (v, &w) in weights.iter().enumerate() {
        let b = (w / lo).log2().floor().max(0.0) as usize;
        if buckets.len() <= b {
            buckets.resize(b + 1, Vec::new());
        }
        buckets[b].push(v as u32);
    }
    buckets
}

/// Geometric skipping over each bucket pair with the pair's largest
/// probability, then rejection down to the exact probability.
fn bucketed_pairs(weights: &[f64], mu: f64, seed: u64) -> Vec<(u32, u32)> {
    let n = weights.len();
    let scale = mu * n as f64;
    let buckets = weight_buckets(weights);
    let top: Vec<f64> =
        buckets.iter().map(|b| b.iter().map(|&v| weights[v as usize]).fold(0.0, f64::max)).collect();
    let jobs: Vec<(usize, usize)> =
        (0..buckets.len()).flat_map(|a| (a..buckets.len()).map(move |b| (a, b))).collect();
    let parts: Vec<Vec<(u32, u32)>> = jobs
        .into_par_iter()
        .map(|(a, b)| {
            let (va, vb) = (&buckets[a], &buckets[b]);
            let mut out = Vec::new();
            let total: u64 =
                if a == b { (va.len() as u64) * (va.len() as u64).saturating_sub(1) / 2 } else { (va.len() * vb.len()) as u64 };
            let p_max = pair_probability(top[a], top[b], scale);
            if total == 0 || p_max <= 0.0 {
                return out;
            }
            let mut rng = stream_rng(seed, STREAM_BUCKETS | ((a as u64) << 20) | b as u64);
            let skip = Geometric::new(p_max).expect("probability in (0, 1]");
            // triangular cursor for a == b: row r holds pairs (r, r+1..s)
            let s = va.len() as u64;
            let (mut row, mut row_start) = (0u64, 0u64);
            let mut idx = 0u64;
            loop {
                idx = match idx.checked_add(skip.sample(&mut rng)) {
                    Some(i) if i < total => i,
                    _ => break,
                };
                let (u, v) = if a == b {
                    while idx >= row_start + (s - 1 - row) {
                        row_start += s - 1 - row;
                        row += 1;
                    }
                    (va[row as usize], va[(row + 1 + idx - row_start) as usize])
                } else {
                    let w = vb.len() as u64;
                    (va[(idx / w) as usize], vb[(idx % w) as usize])
                };
                let p = pair_probability(weights[u as usize], weights[v as usize], scale);
                if rng.gen::<f64>() * p_max < p {
                    out.push((u.min(v), u.max(v)));
                }
                idx += 1;
            }
            out
        })
        .collect();
    parts.concat()
}

/// Weights then graph, each from its own stream of `params.seed`.
pub fn sample(params: &ModelParams) -> Result<HostGraph> {
    let w = sample_weights(params)?;
    sample_graph(&w, params.mu(), params.seed)
}

/// Exact mean and variance of the edge count by a direct double sum.
pub fn edge_count_moments(weights: &[f64], mu: f64) -> (f64, f64) {
    let scale = mu * weights.len() as f64;
    let (mut mean, mut var) = (0.0, 0.0);
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            let p = pair_probability(weights[i], weights[j], scale);
            mean += p;
            var += p * (1.0 - p);
        }
    }
    (mean, var)
}

/// Exact expected degree of every vertex, `Σ_{j≠i} min(h_i h_j/(μn), 1)`,
/// in `O(n log n)`.
pub fn expected_degrees(weights: &[f64], mu: f64) -> Vec<f64> {
    let n = weights.len();
    let scale = mu * n as f64;
    let mut sorted = weights.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut prefix = vec![0.0; n + 1];
    for (i, w) in sorted.iter().enumerate() {
        prefix[i + 1] = prefix[i] + w;
    }
    weights
        .iter()
        .map(|&h| {
            let cut = sorted.partition_point(|&w| h * w < scale);
            (n - cut) as f64 + h * prefix[cut] / scale - pair_probability(h, h, scale)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeBin {
    /// Bin covers weights in `[10^decade, 10^(decade+1))`.
    pub decade: i32,
    pub vertices: usize,
    pub mean_weight: f64,
    pub mean_degree: f64,
    pub expected_mean_degree: f64,
    pub standard_error: f64,
    pub flagged: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub mu: f64,
    pub bins: Vec<DegreeBin>,
    pub flagged_bins: usize,
}

/// Mean degree against the exact expected degree per weight decade; bins off
/// by more than five Poisson standard errors are flagged.
pub fn expected_degree_check(g: &HostGraph, mu: f64) -> Result<DegreeCheck> {
    let w = g.weights().ok_or(Error::MissingWeights)?;
    let expected = expected_degrees(w, mu);
    let mut acc: std::collections::BTreeMap<i32, (usize, f64, f64, f64)> = Default::default();
    for v in 0..g.n() {
        let e = acc.entry(w[v].log10().floor() as i32).or_default();
        e.0 += 1;
        e.1 += w[v];
        e.2 += g.degree(v) as f64;
        e.3 += expected[v];
    }
    let bins: Vec<DegreeBin> = acc
        .into_iter()
        .map(|(decade, (c, sw, sd, se))| {
            let c_f = c as f64;
            let expected_mean_degree = se / c_f;
            let standard_error = (expected_mean_degree / c_f).sqrt();
            let mean_degree = sd / c_f;
            DegreeBin {
                decade,
                vertices: c,
                mean_weight: sw / c_f,
                mean_degree,
                expected_mean_degree,
                standard_error,
                flagged: (mean_degree - expected_mean_degree).abs() > 5.0 * standard_error.max(f64::MIN_POSITIVE),
            }
        })
        .collect();
    let flagged_bins = bins.iter().filter(|b| b.flagged).count();
    Ok(DegreeCheck { mu, bins, flagged_bins })
}

/// `u v` per line, 0-based; isolated vertices get a line of their own so
/// that re-parsing keeps `n`.
pub fn write_edge_list<W: Write>(g: &HostGraph, mut out: W) -> Result<()> {
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{v}")?;
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// `vertex<TAB>weight` per line.
pub fn write_weights<W: Write>(g: &HostGraph, mut out: W) -> Result<()> {
    let w = g.weights().ok_or(Error::MissingWeights)?;
    for (v, x) in w.iter().enumerate() {
        writeln!(out, "{v}\t{x}")?;
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleMetadata {
    pub params: ModelParams,
    pub mu: f64,
    pub mu_source: &'static str,
    pub seed: u64,
    pub n: usize,
    pub edge_count: usize,
    pub pair_scheme: &'static str,
}

impl SampleMetadata {
    pub fn new(params: &ModelParams, g: &HostGraph) -> Self {
        SampleMetadata {
            params: params.clone(),
            mu: params.mu(),
            mu_source: if params.mu.is_some() { "given" } else { "analytic" },
            seed: params.seed,
            n: g.n(),
            edge_count: g.m(),
            pair_scheme: if g.n() <= EXACT_PAIR_LIMIT { "exact" } else { "bucketed" },
        }
    }
}
