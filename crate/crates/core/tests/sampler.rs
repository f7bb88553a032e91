// SPDX-License-Identifier: Apache-2.0

use motifvar_core::hvmodel::{
    analytic_mean, edge_count_moments, expected_degree_check, sample, sample_graph_with, sample_weights, ModelParams,
    PairScheme,
};
use motifvar_core::varprinciple::Tau;

fn params(n: usize, tau: &str, seed: u64) -> ModelParams {
    ModelParams::new(n, Tau::parse(tau).unwrap(), seed)
}

#[test]
fn edge_counts_within_four_sd() {
    for scheme in [PairScheme::Exact, PairScheme::Bucketed] {
        for seed in 0..20 {
            let p = params(2000, "5/2", seed);
            let w = sample_weights(&p).unwrap();
            let (mean, var) = edge_count_moments(&w, p.mu());
            let g = sample_graph_with(&w, p.mu(), seed, scheme).unwrap();
            let z = (g.m() as f64 - mean) / var.sqrt();
            assert!(z.abs() < 4.0, "{scheme:?} seed {seed}: z = {z}");
        }
    }
}

#[test]
fn pareto_tail_fractions() {
    let p = params(200_000, "5/2", 5);
    let w = sample_weights(&p).unwrap();
    let n = w.len() as f64;
    for x in [2.0f64, 4.0, 8.0] {
        let expect = x.powf(-1.5);
        let got = w.iter().filter(|&&h| h > x).count() as f64 / n;
        let se = (expect * (1.0 - expect) / n).sqrt();
        assert!((got - expect).abs() < 3.0 * se, "x={x}: {got} vs {expect}");
    }
}

#[test]
fn weight_mean_near_analytic() {
    let p = params(1_000_000, "5/2", 1);
    let w = sample_weights(&p).unwrap();
    let mean = w.iter().sum::<f64>() / w.len() as f64;
    let mu = analytic_mean(&p.tau, 1.0);
    assert!((mean - mu).abs() < 0.05 * mu, "{mean} vs {mu}");
}

#[test]
fn degrees_follow_weights() {
    let p = params(100_000, "5/2", 2);
    let g = sample(&p).unwrap();
    let check = expected_degree_check(&g, p.mu()).unwrap();
    assert_eq!(check.flagged_bins, 0, "{check:#?}");
    let unit = check.bins.iter().find(|b| b.decade == 0).unwrap();
    assert!((unit.mean_degree - unit.expected_mean_degree).abs() < 0.05 * unit.expected_mean_degree);
    for seed in 0..3 {
        let u = sample_graph_with(&vec![2.0; 3000], 3.0, seed, PairScheme::Bucketed).unwrap();
        let mean = 2.0 * u.m() as f64 / 3000.0;
        assert!((mean - 4.0 / 3.0 * 2999.0 / 3000.0).abs() < 0.1, "{mean}");
    }
    let empty = sample(&params(0, "5/2", 0)).unwrap();
    assert!(expected_degree_check(&empty, 3.0).unwrap().bins.is_empty());
}

#[test]
fn identical_under_thread_counts() {
    let p = params(5000, "2.2", 9);
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| sample(&p).unwrap())
    };
    let a = run(1);
    assert_eq!(a, run(3));
    assert_eq!(a, sample(&p).unwrap());
    for v in 0..a.n() {
        for &u in a.neighbors(v) {
            assert!(u as usize != v && a.has_edge(u as usize, v));
        }
    }
}
