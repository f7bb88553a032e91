// SPDX-License-Identifier: Apache-2.0

//! Edge-list networks: parsing, a fixed-`x_min` degree exponent fit, and the
//! 4-vertex graphlet census report.

use std::collections::{BTreeSet, HashMap};
use std::io::BufRead;

use serde::Serialize;

use crate::count::orbit4::{self, GRAPHLETS, VERTEX_TYPES};
use crate::error::{Error, Result};
use crate::host::HostGraph;
use crate::motif::parse_motif;
use crate::rational::Q;
use crate::varprinciple::{piecewise, Mode, Tau, TauExponent};

/// Fewest tail values accepted by [`fit_power_law_exponent`].
pub const MIN_TAIL: usize = 10;

/// Default lower cutoff of the degree fit.
pub const DEFAULT_X_MIN: f64 = 5.0;

/// A parsed network with the original id of every compacted vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeList {
    pub graph: HostGraph,
    /// `ids[v]` is the input id of vertex `v`; ascending.
    pub ids: Vec<u64>,
}

/// Parses `u v` lines. Blank lines and lines starting with `#` or `%` are
/// skipped, a line with a single id declares a vertex, and columns past the
/// second are ignored. Self-loops and repeated pairs are dropped; ids are
/// compacted to `0..n` in ascending order.
pub fn parse_edge_list<R: BufRead>(input: R) -> Result<EdgeList> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
            continue;
        }
        let mut toks = t.split_whitespace();
        let id = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::EdgeList { line: i + 1, msg: format!("bad vertex id {tok:?}") })
        };
        let u = id(toks.next().expect("nonempty line"))?;
        seen.insert(u);
        if let Some(tok) = toks.next() {
            let v = id(tok)?;
            seen.insert(v);
            raw.push((u, v));
        }
    }
    let ids: Vec<u64> = seen.into_iter().collect();
    if ids.len() > u32::MAX as usize {
        return Err(Error::Unsupported(format!("{} vertices exceed the 32-bit id range", ids.len())));
    }
    let index: HashMap<u64, u32> = ids.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
    let edges: Vec<(u32, u32)> = raw.iter().map(|(u, v)| (index[u], index[v])).collect();
    Ok(EdgeList { graph: HostGraph::from_edges(ids.len(), &edges)?, ids })
}

/// `τ̂ = 1 + m' / Σ ln(d / (x_min - ½))` over the `m'` values `d ≥ x_min`.
pub fn fit_power_law_exponent(degrees: &[f64], x_min: f64) -> Result<f64> {
    if !(x_min.is_finite() && x_min > 0.5) {
        return Err(Error::InvalidParam(format!("x_min must exceed 1/2, got {x_min}")));
    }
    let tail: Vec<f64> = degrees.iter().copied().filter(|&d| d >= x_min).collect();
    if tail.len() < MIN_TAIL {
        return Err(Error::InsufficientTail { got: tail.len(), need: MIN_TAIL });
    }
    if tail.iter().all(|&d| d == x_min) {
        return Err(Error::DegenerateTail);
    }
    let shift = x_min - 0.5;
    let s: f64 = tail.iter().map(|d| (d / shift).ln()).sum();
    Ok(1.0 + tail.len() as f64 / s)
}

#[derive(Clone, Debug, Serialize)]
pub struct NetworkSummary {
    pub name: String,
    pub n: usize,
    pub m: usize,
    /// `None` when the fit was refused; see `fit_error`.
    pub tau_hat: Option<f64>,
    pub x_min: f64,
    pub fit_error: Option<String>,
}

pub fn summarize(g: &HostGraph, name: &str, x_min: f64) -> NetworkSummary {
    let deg: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    let (tau_hat, fit_error) = match fit_power_law_exponent(&deg, x_min) {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    NetworkSummary { name: name.to_string(), n: g.n(), m: g.m(), tau_hat, x_min, fit_error }
}

/// One value per 4-vertex graphlet, in report order.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PerGraphlet<T> {
    pub claw: T,
    pub path: T,
    pub paw: T,
    pub diamond: T,
    pub square: T,
    pub k4: T,
}

impl<T: Clone> PerGraphlet<T> {
    fn from_fn(mut f: impl FnMut(&str) -> T) -> Self {
        PerGraphlet { claw: f("claw"), path: f("path"), paw: f("paw"), diamond: f("diamond"), square: f("square"), k4: f("k4") }
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        Some(match name {
            "claw" => &self.claw,
            "path" => &self.path,
            "paw" => &self.paw,
            "diamond" => &self.diamond,
            "square" => &self.square,
            "k4" => &self.k4,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexTypeDegree {
    pub vertex_type: String,
    pub graphlet: &'static str,
    /// Degree of the type inside its graphlet.
    pub graphlet_degree: usize,
    pub occurrences: u64,
    /// Host degree averaged over occurrences.
    pub mean_degree: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphletOrdering {
    /// τ at which the typical graphlet exponents were compared.
    pub tau: String,
    pub exponents: PerGraphlet<String>,
    pub predicted: Vec<String>,
    pub observed: Vec<String>,
    /// Pairs `[a, b]` with `a` predicted above `b` but counted fewer times.
    pub mismatches: Vec<[String; 2]>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphletReport {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub tau_hat: Option<f64>,
    pub x_min: f64,
    pub fit_error: Option<String>,
    /// Induced counts.
    pub counts: PerGraphlet<u64>,
    /// `ln N / ln n`; `None` for absent graphlets.
    pub log_normalized: PerGraphlet<Option<f64>>,
    pub orbit_degrees: Vec<VertexTypeDegree>,
    pub ordering: GraphletOrdering,
}

/// τ used for the predicted ordering: the fit rounded to a multiple of
/// 1/100 and kept inside `[201/100, 299/100]`, or 5/2 without a fit.
pub fn prediction_tau(tau_hat: Option<f64>) -> Tau {
    let hundredths = tau_hat.filter(|t| t.is_finite()).map_or(250, |t| ((t * 100.0).round() as i128).clamp(201, 299));
    Tau::new(Q::new(hundredths, 100)).expect("inside (2,3)")
}

/// Graphlets by decreasing typical induced exponent (value, then log power),
/// ties broken towards fewer edges.
pub fn predicted_order(tau: &Tau) -> Result<(Vec<String>, PerGraphlet<String>)> {
    let mut rows: Vec<(&str, TauExponent, usize)> = Vec::new();
    for name in GRAPHLETS {
        let h = parse_motif(name)?;
        let e = piecewise(&h, Mode::from_flags(true, true))?.at_q(tau.value()).exponent.clone();
        rows.push((name, e, h.edge_count()));
    }
    let exps = PerGraphlet::from_fn(|name| rows.iter().find(|r| r.0 == name).expect("graphlet").1.to_string());
    rows.sort_by(|a, b| {
        b.1.cmp_at(&a.1, tau.value()).then(a.2.cmp(&b.2))
    });
    Ok((rows.into_iter().map(|r| r.0.to_string()).collect(), exps))
}

/// Census, degree fit, per-type degrees and the predicted-versus-observed
/// ordering of the six connected 4-vertex graphlets.
pub fn graphlet_report(g: &HostGraph, name: &str, x_min: f64) -> Result<GraphletReport> {
    let summary = summarize(g, name, x_min);
    let rows = orbit4::induced_orbits(g);
    let totals = orbit4::graphlet_totals(&rows);
    let total = |name: &str| totals[GRAPHLETS.iter().position(|&x| x == name).expect("graphlet")];
    let counts = PerGraphlet::from_fn(total);
    let ln_n = (g.n() as f64).ln();
    let log_normalized =
        PerGraphlet::from_fn(|name| (total(name) > 0 && g.n() > 1).then(|| (total(name) as f64).ln() / ln_n));
    let orbit_degrees = (0..VERTEX_TYPES.len())
        .map(|t| {
            let (mut c, mut s) = (0u128, 0f64);
            for (v, r) in rows.iter().enumerate() {
                c += r[t] as u128;
                s += r[t] as f64 * g.degree(v) as f64;
            }
            VertexTypeDegree {
                vertex_type: orbit4::type_name(t),
                graphlet: VERTEX_TYPES[t].0,
                graphlet_degree: VERTEX_TYPES[t].1,
                occurrences: c as u64,
                mean_degree: if c == 0 { 0.0 } else { s / c as f64 },
            }
        })
        .collect();
    let tau = prediction_tau(summary.tau_hat);
    let (predicted, exponents) = predicted_order(&tau)?;
    let mut observed = predicted.clone();
    observed.sort_by_key(|name| std::cmp::Reverse(total(name)));
    let mut mismatches = Vec::new();
    for (i, a) in predicted.iter().enumerate() {
        for b in &predicted[i + 1..] {
            if total(a) < total(b) {
                mismatches.push([a.clone(), b.clone()]);
            }
        }
    }
    Ok(GraphletReport {
        name: summary.name,
        n: summary.n,
        m: summary.m,
        tau_hat: summary.tau_hat,
        x_min,
        fit_error: summary.fit_error,
        counts,
        log_normalized,
        orbit_degrees,
        ordering: GraphletOrdering {
            tau: tau.to_string(),
            exponents,
            matches: mismatches.is_empty(),
            predicted,
            observed,
            mismatches,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rules() {
        let p = parse_edge_list("0 1\n1 0\n1 1\n# c\n1 2".as_bytes()).unwrap();
        assert_eq!((p.graph.n(), p.graph.m()), (3, 2));
        let e = parse_edge_list("".as_bytes()).unwrap();
        assert_eq!((e.graph.n(), e.graph.m()), (0, 0));
        let ids = parse_edge_list("10 7\n% x\n\n7 3 0.5\n42\n".as_bytes()).unwrap();
        assert_eq!(ids.ids, vec![3, 7, 10, 42]);
        assert_eq!(ids.graph.m(), 2);
        assert!(ids.graph.has_edge(0, 1) && ids.graph.has_edge(1, 2) && ids.graph.degree(3) == 0);
        match parse_edge_list("0 1\n2 x\n".as_bytes()) {
            Err(Error::EdgeList { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("0 -1\n".as_bytes()).is_err());
    }

    #[test]
    fn fit_guards() {
        assert!(matches!(fit_power_law_exponent(&[5.0; 20], 5.0), Err(Error::DegenerateTail)));
        assert!(matches!(
            fit_power_law_exponent(&[1.0, 9.0, 10.0], 5.0),
            Err(Error::InsufficientTail { got: 2, need: 10 })
        ));
        assert!(fit_power_law_exponent(&[3.0; 20], 0.5).is_err());
        let t = fit_power_law_exponent(&[5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 12.0, 15.0, 20.0, 40.0, 1.0], 5.0).unwrap();
        let s: f64 = [5.0f64, 6.0, 7.0, 8.0, 9.0, 10.0, 12.0, 15.0, 20.0, 40.0].iter().map(|d| (d / 4.5).ln()).sum();
        assert!((t - (1.0 + 10.0 / s)).abs() < 1e-12);
    }

    #[test]
    fn predicted_head_is_the_claw() {
        for t in ["201/100", "11/5", "5/2", "299/100"] {
            let (order, _) = predicted_order(&Tau::parse(t).unwrap()).unwrap();
            assert_eq!(order, ["claw", "path", "paw", "diamond", "square", "k4"], "{t}");
        }
        assert_eq!(prediction_tau(Some(3.7)).to_string(), "299/100");
        assert_eq!(prediction_tau(None).to_string(), "5/2");
    }
}
