// SPDX-License-Identifier: Apache-2.0

//! Variance of motif counts through merged motifs, self-averaging over τ and
//! the three fluctuation types.
//!
//! `Var N(H)` is a positive combination of the expected counts of every graph
//! obtained by gluing two copies of `H`, plus `E[N(H)]^2 · O(1/n)`. Only the
//! exponents matter here, so the variance exponent is the upper envelope of
//! the merged motifs' free exponents and `2·mean - 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::motif::{canonical_form, canonical_graph, display_name, enumerate_connected, merge_enumerate, SmallGraph};
use crate::rational::{qi, Surd, Q};
use crate::varprinciple::piecewise::{cells, pairwise_crossings};
use crate::varprinciple::{optimize, piecewise, Label, Mode, PiecewiseExponent, Tau, TauExponent};

fn free_mode(induced: bool) -> Mode {
    if induced {
        Mode::FreeGraphlet
    } else {
        Mode::FreeMotif
    }
}

type CacheKey = (Mode, usize, u64);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<PiecewiseExponent>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<PiecewiseExponent>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoised `piecewise` keyed by isomorphism class. The returned envelope is
/// labelled by the canonical representative.
pub fn piecewise_cached(h: &SmallGraph, mode: Mode) -> Result<Arc<PiecewiseExponent>> {
    let cf = canonical_form(h);
    let key = (mode, cf.k, cf.code);
    if let Some(p) = cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(piecewise(&canonical_graph(h), mode)?);
    cache().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct VarianceTerm {
    pub merged: SmallGraph,
    pub name: String,
    pub constant: u64,
    pub overlap_size: usize,
    pub exponent: TauExponent,
}

#[derive(Clone, Debug, Serialize)]
pub struct VarianceBreakdown {
    pub motif: SmallGraph,
    pub tau: Tau,
    pub induced_mode: bool,
    pub mean_exponent: TauExponent,
    pub terms: Vec<VarianceTerm>,
    pub correction_exponent: TauExponent,
    pub variance_exponent: TauExponent,
}

/// `2·mean - 1` with the log power doubled.
fn correction_of(mean: &TauExponent) -> TauExponent {
    let mut c = mean.scale(qi(2)).shift(qi(-1));
    c.log_power = 2 * mean.log_power;
    c
}

/// Largest exponent at `tau`; on polynomial ties the larger log power wins.
fn max_at<'a>(items: impl IntoIterator<Item = &'a TauExponent>, tau: &Q) -> TauExponent {
    let mut it = items.into_iter();
    let mut best = it.next().expect("nonempty").clone();
    for e in it {
        if e.cmp_at(&best, tau) == std::cmp::Ordering::Greater {
            best = e.clone();
        }
    }
    best
}

/// Exponents of every variance contribution at one `τ`.
pub fn variance_breakdown(h: &SmallGraph, tau: &Tau, induced_mode: bool) -> Result<VarianceBreakdown> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mode = free_mode(induced_mode);
    let mean = optimize(h, mode, tau)?.exponent;
    let family = merge_enumerate(h, induced_mode)?;
    let mut terms = Vec::with_capacity(family.entries.len());
    for e in &family.entries {
        terms.push(VarianceTerm {
            name: display_name(&e.merged),
            merged: e.merged.clone(),
            constant: e.constant,
            overlap_size: e.overlap_size,
            exponent: optimize(&e.merged, mode, tau)?.exponent,
        });
    }
    let correction = correction_of(&mean);
    let variance = max_at(terms.iter().map(|t| &t.exponent).chain(std::iter::once(&correction)), tau.value());
    Ok(VarianceBreakdown {
        motif: h.clone(),
        tau: tau.clone(),
        induced_mode,
        mean_exponent: mean,
        terms,
        correction_exponent: correction,
        variance_exponent: variance,
    })
}

/// One run of a piecewise function of τ: `[tau_lo, tau_hi)`, first piece open
/// at 2.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentPiece {
    pub tau_lo: Surd,
    pub tau_hi: Surd,
    pub exponent: TauExponent,
    pub exponent_text: String,
}

fn piece_list(p: &PiecewiseExponent) -> Vec<ExponentPiece> {
    p.pieces
        .iter()
        .map(|x| ExponentPiece {
            tau_lo: x.tau_lo.clone(),
            tau_hi: x.tau_hi.clone(),
            exponent: x.exponent.clone(),
            exponent_text: x.exponent.to_string(),
        })
        .collect()
}

fn lookup<'a>(pieces: &'a [ExponentPiece], tau: &Q) -> &'a ExponentPiece {
    let t = Surd::rational(*tau);
    pieces.iter().find(|p| p.tau_lo < t && t < p.tau_hi).expect("sample points avoid breakpoints")
}

/// Upper envelope of several piecewise sources, with log powers taken from
/// every source attaining the polynomial maximum.
fn envelope_of_sources(sources: &[Vec<ExponentPiece>]) -> Vec<ExponentPiece> {
    let mut lines: Vec<TauExponent> = Vec::new();
    let mut breaks: Vec<Surd> = Vec::new();
    for s in sources {
        for p in s {
            if !lines.iter().any(|l| l.same_poly(&p.exponent)) {
                lines.push(p.exponent.clone());
            }
            breaks.push(p.tau_lo.clone());
        }
    }
    breaks.extend(pairwise_crossings(&lines));
    let mut out: Vec<ExponentPiece> = Vec::new();
    for (lo, hi, mid) in cells(breaks) {
        let here: Vec<&TauExponent> = sources.iter().map(|s| &lookup(s, &mid).exponent).collect();
        let e = max_at(here, &mid);
        match out.last_mut() {
            Some(last) if last.exponent == e => last.tau_hi = hi,
            _ => out.push(ExponentPiece { tau_lo: lo, tau_hi: hi, exponent_text: e.to_string(), exponent: e }),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FluctuationType {
    /// Self-averaging.
    TypeI,
    /// Concentrated on the all-√n structure but not self-averaging.
    TypeII,
    /// Dominated by hubs (`B > 0`).
    TypeIII,
}

/// Interval of τ with explicit endpoint closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauInterval {
    pub lo: Surd,
    pub hi: Surd,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl TauInterval {
    pub fn open(lo: Surd, hi: Surd) -> Self {
        TauInterval { lo, hi, lo_closed: false, hi_closed: false }
    }

    pub fn contains(&self, t: &Surd) -> bool {
        let lo_ok = if self.lo_closed { *t >= self.lo } else { *t > self.lo };
        let hi_ok = if self.hi_closed { *t <= self.hi } else { *t < self.hi };
        lo_ok && hi_ok
    }
}

impl std::fmt::Display for TauInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TypedInterval {
    pub interval: TauInterval,
    #[serde(rename = "type")]
    pub kind: FluctuationType,
}

#[derive(Clone, Debug, Serialize)]
pub struct FluctuationClass {
    pub motif: SmallGraph,
    pub name: String,
    pub induced_mode: bool,
    pub mean_pieces: Vec<ExponentPiece>,
    pub variance_pieces: Vec<ExponentPiece>,
    pub self_averaging_intervals: Vec<TauInterval>,
    pub type_by_interval: Vec<TypedInterval>,
}

impl FluctuationClass {
    pub fn is_self_averaging(&self, tau: &Q) -> bool {
        let t = Surd::rational(*tau);
        self.self_averaging_intervals.iter().any(|i| i.contains(&t))
    }

    pub fn type_at(&self, tau: &Q) -> FluctuationType {
        let t = Surd::rational(*tau);
        self.type_by_interval.iter().find(|i| i.interval.contains(&t)).expect("types cover (2,3)").kind
    }

    /// Self-averaging intervals as `[[lo, hi], ...]` strings.
    pub fn self_averaging_strings(&self) -> Vec<[String; 2]> {
        self.self_averaging_intervals.iter().map(|i| [i.lo.to_string(), i.hi.to_string()]).collect()
    }
}

/// `B` from a free exponent value at τ: `(2·e - (3-τ)k)/(τ-1)`.
fn b_at(value: &Q, k: usize, tau: &Q) -> Q {
    (qi(2) * value - (qi(3) - tau) * qi(k as i128)) / (tau - qi(1))
}

/// Verdict at one point given exact mean and variance polynomial values.
fn verdict(mean: &Q, var: &Q, k: usize, tau: &Q) -> (bool, FluctuationType) {
    let sa = *var < qi(2) * mean;
    let kind = if b_at(mean, k, tau) > Q::from_integer(0) {
        FluctuationType::TypeIII
    } else if sa {
        FluctuationType::TypeI
    } else {
        FluctuationType::TypeII
    };
    (sa, kind)
}

struct Sources {
    mean: Vec<ExponentPiece>,
    variance: Vec<ExponentPiece>,
}

fn sources(h: &SmallGraph, induced_mode: bool) -> Result<Sources> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mode = free_mode(induced_mode);
    let mean = piece_list(&piecewise(h, mode)?);
    let family = merge_enumerate(h, induced_mode)?;
    let mut srcs: Vec<Vec<ExponentPiece>> = Vec::with_capacity(family.entries.len() + 1);
    for e in &family.entries {
        srcs.push(piece_list(&*piecewise_cached(&e.merged, mode)?));
    }
    srcs.push(
        mean.iter()
            .map(|p| {
                let e = correction_of(&p.exponent);
                ExponentPiece { tau_lo: p.tau_lo.clone(), tau_hi: p.tau_hi.clone(), exponent_text: e.to_string(), exponent: e }
            })
            .collect(),
    );
    Ok(Sources { mean, variance: envelope_of_sources(&srcs) })
}

/// Self-averaging set and type decomposition of `(2, 3)`.
pub fn self_averaging_intervals(h: &SmallGraph, induced_mode: bool) -> Result<FluctuationClass> {
    let Sources { mean, variance } = sources(h, induced_mode)?;
    let k = h.k();
    let mut breaks: Vec<Surd> = Vec::new();
    breaks.extend(mean.iter().map(|p| p.tau_lo.clone()));
    breaks.extend(variance.iter().map(|p| p.tau_lo.clone()));
    for v in &variance {
        for m in &mean {
            breaks.extend(v.exponent.crossings(&m.exponent.scale(qi(2))));
        }
    }
    for m in &mean {
        // B(τ) = (2b + k) + (2a + 2b - 2k)/(τ - 1) vanishes at τ = 1 - (2a+2b-2k)/(2b+k)
        let e = &m.exponent;
        let slope = qi(2) * e.b + qi(k as i128);
        if slope != qi(0) {
            breaks.push(Surd::rational(qi(1) - (qi(2) * e.a + qi(2) * e.b - qi(2 * k as i128)) / slope));
        }
    }
    let cell_list = cells(breaks);
    // atoms: cell, point, cell, point, ..., cell
    let mut atoms: Vec<(TauInterval, bool, FluctuationType)> = Vec::new();
    let mode = free_mode(induced_mode);
    for (i, (lo, hi, mid)) in cell_list.iter().enumerate() {
        if i > 0 {
            let x = lo.as_rational().copied().ok_or_else(|| {
                Error::Unsupported(format!("irrational breakpoint {lo} in a free-mode envelope"))
            })?;
            let tau = Tau::new(x)?;
            let b = variance_breakdown(h, &tau, induced_mode)?;
            let (sa, kind) = verdict(&b.mean_exponent.eval(&tau), &b.variance_exponent.eval(&tau), k, &x);
            debug_assert_eq!(optimize(h, mode, &tau)?.exponent.eval(&tau), b.mean_exponent.eval(&tau));
            atoms.push((TauInterval { lo: lo.clone(), hi: lo.clone(), lo_closed: true, hi_closed: true }, sa, kind));
        }
        let m = lookup(&mean, mid).exponent.eval_q(mid);
        let v = lookup(&variance, mid).exponent.eval_q(mid);
        let (sa, kind) = verdict(&m, &v, k, mid);
        atoms.push((TauInterval::open(lo.clone(), hi.clone()), sa, kind));
    }
    let join = |acc: &mut Vec<TauInterval>, iv: &TauInterval| match acc.last_mut() {
        Some(last) if last.hi == iv.lo && (last.hi_closed || iv.lo_closed) => {
            last.hi = iv.hi.clone();
            last.hi_closed = iv.hi_closed;
        }
        _ => acc.push(iv.clone()),
    };
    let mut sa_runs: Vec<TauInterval> = Vec::new();
    let mut typed: Vec<TypedInterval> = Vec::new();
    let mut prev_sa = false;
    for (idx, (iv, sa, kind)) in atoms.iter().enumerate() {
        if *sa {
            if idx > 0 && prev_sa {
                join(&mut sa_runs, iv);
            } else {
                sa_runs.push(iv.clone());
            }
        }
        prev_sa = *sa;
        match typed.last_mut() {
            Some(last) if last.kind == *kind => {
                last.interval.hi = iv.hi.clone();
                last.interval.hi_closed = iv.hi_closed;
            }
            _ => typed.push(TypedInterval { interval: iv.clone(), kind: *kind }),
        }
    }
    Ok(FluctuationClass {
        motif: h.clone(),
        name: display_name(h),
        induced_mode,
        mean_pieces: mean,
        variance_pieces: variance,
        self_averaging_intervals: sa_runs,
        type_by_interval: typed,
    })
}

/// Type at a single rational τ, decided from exact values at that point.
pub fn classify_type(h: &SmallGraph, tau: &Tau) -> Result<FluctuationType> {
    let b = variance_breakdown(h, tau, false)?;
    Ok(verdict(&b.mean_exponent.eval(tau), &b.variance_exponent.eval(tau), h.k(), tau.value()).1)
}

/// Whether `Var/E^2 → 0` at a single rational τ.
pub fn is_self_averaging_at(h: &SmallGraph, tau: &Tau, induced_mode: bool) -> Result<bool> {
    let b = variance_breakdown(h, tau, induced_mode)?;
    Ok(verdict(&b.mean_exponent.eval(tau), &b.variance_exponent.eval(tau), h.k(), tau.value()).0)
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub motif: String,
    pub interval: String,
    pub all_sqrt_unique: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub k_max: usize,
    pub checked: Vec<AuditEntry>,
    pub violations: Vec<String>,
}

/// For every connected motif on `3..=k_max` vertices and every self-averaging
/// interval, checks that the free optimiser is unique and puts every vertex at
/// `√n`. Points inside the interval are checked both on piece interiors and at
/// interior breakpoints.
pub fn sqrt_optimizer_audit(k_max: usize) -> Result<AuditReport> {
    if !(3..=5).contains(&k_max) {
        return Err(Error::VertexCount { got: k_max, min: 3, max: 5 });
    }
    let mut checked = Vec::new();
    let mut violations = Vec::new();
    for k in 3..=k_max {
        for h in enumerate_connected(k)? {
            let class = self_averaging_intervals(&h, false)?;
            let mean = piecewise(&h, Mode::FreeMotif)?;
            for iv in &class.self_averaging_intervals {
                let mut ok = true;
                for p in &mean.pieces {
                    let overlaps = p.tau_lo < iv.hi && iv.lo < p.tau_hi;
                    if overlaps && !(p.unique() && p.representative.labels.iter().all(|&l| l == Label::Half)) {
                        ok = false;
                        violations.push(format!("{} on {}: piece {} has structure {}", display_name(&h), iv, p.exponent, p.representative));
                    }
                }
                checked.push(AuditEntry { motif: display_name(&h), interval: iv.to_string(), all_sqrt_unique: ok });
            }
        }
    }
    Ok(AuditReport { k_max, checked, violations })
}
