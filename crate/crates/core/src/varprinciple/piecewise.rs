// SPDX-License-Identifier: Apache-2.0

//! Exact upper envelopes of exponent families over `τ ∈ (2, 3)`.
//!
//! Two distinct members of the span `{1, τ, 1/(τ-1)}` agree at no more than
//! two points, so the envelope changes winner only at pairwise crossings.
//! Crossings are exact surds; each cell between consecutive crossings is
//! decided at a rational interior point.

use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::assign::{Assignment, Mode};
use super::exponent::TauExponent;
use super::optimize::{partition_view, ExponentTable, VertexClass};
use crate::error::Result;
use crate::motif::SmallGraph;
use crate::rational::{q_string, qi, Surd, Q};

/// Open cells `(lo, hi)` between the sorted distinct `breaks` inside
/// `(2, 3)`, each with a rational sample point.
pub fn cells(mut breaks: Vec<Surd>) -> Vec<(Surd, Surd, Q)> {
    let two = Surd::rational(qi(2));
    let three = Surd::rational(qi(3));
    breaks.retain(|b| *b > two && *b < three);
    breaks.sort();
    breaks.dedup();
    let mut points = Vec::with_capacity(breaks.len() + 2);
    points.push(two);
    points.extend(breaks);
    points.push(three);
    points
        .windows(2)
        .map(|w| {
            let mid = Surd::rational_between(&w[0], &w[1]);
            (w[0].clone(), w[1].clone(), mid)
        })
        .collect()
}

/// Index of the maximal line at rational `τ` (polynomial value, then log
/// power, then lowest index).
pub fn argmax_at(lines: &[TauExponent], tau: &Q) -> usize {
    let mut best = 0;
    for i in 1..lines.len() {
        if lines[i].cmp_at(&lines[best], tau) == std::cmp::Ordering::Greater {
            best = i;
        }
    }
    best
}

/// All crossings inside `(2, 3)` between members of `lines`.
pub fn pairwise_crossings(lines: &[TauExponent]) -> Vec<Surd> {
    let mut out = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            out.extend(lines[i].crossings(&lines[j]));
        }
    }
    out
}

/// Upper envelope as maximal runs `(lo, hi, winner index)`; `extra` adds
/// further cut points (merged away when the winner does not change).
pub fn upper_envelope(lines: &[TauExponent], extra: Vec<Surd>) -> Vec<(Surd, Surd, usize)> {
    assert!(!lines.is_empty(), "envelope of an empty family");
    // lines sharing (b, c) are parallel; only the top one can win
    let mut top: HashMap<(Q, Q), usize> = HashMap::new();
    for (i, l) in lines.iter().enumerate() {
        top.entry((l.b, l.c))
            .and_modify(|j| {
                let cur = &lines[*j];
                if (l.a, l.log_power) > (cur.a, cur.log_power) {
                    *j = i;
                }
            })
            .or_insert(i);
    }
    let mut keep: Vec<usize> = top.into_values().collect();
    keep.sort_unstable();
    let reduced: Vec<TauExponent> = keep.iter().map(|&i| lines[i].clone()).collect();
    let mut breaks = pairwise_crossings(&reduced);
    breaks.extend(extra);
    let mut runs: Vec<(Surd, Surd, usize)> = Vec::new();
    for (lo, hi, mid) in cells(breaks) {
        let w = keep[argmax_at(&reduced, &mid)];
        match runs.last_mut() {
            Some(last) if last.2 == w => last.1 = hi,
            _ => runs.push((lo, hi, w)),
        }
    }
    runs
}

#[derive(Clone, Debug)]
pub struct Piece {
    /// Pieces are `[tau_lo, tau_hi)`, except that the first is open at 2.
    pub tau_lo: Surd,
    pub tau_hi: Surd,
    pub exponent: TauExponent,
    pub representative: Assignment,
    pub optimal_assignments: Vec<Assignment>,
    pub partition: Vec<VertexClass>,
}

impl Piece {
    pub fn unique(&self) -> bool {
        self.optimal_assignments.len() == 1
    }

    pub fn contains(&self, tau: &Surd) -> bool {
        let two = Surd::rational(qi(2));
        let lo_ok = if self.tau_lo == two { *tau > two } else { *tau >= self.tau_lo };
        lo_ok && *tau < self.tau_hi
    }
}

impl Serialize for Piece {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Qs<'a>(&'a Q);
        impl Serialize for Qs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                q_string::serialize(self.0, s)
            }
        }
        let mut st = s.serialize_struct("Piece", 9)?;
        st.serialize_field("tau_lo", &self.tau_lo)?;
        st.serialize_field("tau_hi", &self.tau_hi)?;
        st.serialize_field("a", &Qs(&self.exponent.a))?;
        st.serialize_field("b", &Qs(&self.exponent.b))?;
        st.serialize_field("c", &Qs(&self.exponent.c))?;
        st.serialize_field("log_power", &self.exponent.log_power)?;
        st.serialize_field("exponent", &self.exponent.to_string())?;
        st.serialize_field("partition", &self.partition)?;
        st.serialize_field("representative", &self.representative)?;
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PiecewiseExponent {
    pub motif: SmallGraph,
    pub mode: Mode,
    pub pieces: Vec<Piece>,
}

impl PiecewiseExponent {
    /// The piece containing `τ` under the half-open convention.
    pub fn at(&self, tau: &Surd) -> &Piece {
        self.pieces
            .iter()
            .find(|p| p.contains(tau))
            .unwrap_or_else(|| panic!("tau {tau} outside (2,3)"))
    }

    pub fn at_q(&self, tau: &Q) -> &Piece {
        self.at(&Surd::rational(*tau))
    }

    /// Interior breakpoints, ascending.
    pub fn breakpoints(&self) -> Vec<Surd> {
        self.pieces.iter().skip(1).map(|p| p.tau_lo.clone()).collect()
    }

    /// Human-readable breakpoint list, e.g. `["7/3"]`.
    pub fn breakpoint_strings(&self) -> Vec<String> {
        self.breakpoints().iter().map(|b| b.to_string()).collect()
    }
}

/// Envelope of the exponents of every feasible assignment of `h`.
pub fn piecewise(h: &SmallGraph, mode: Mode) -> Result<PiecewiseExponent> {
    let table = ExponentTable::build(h, mode)?;
    let lines: Vec<TauExponent> = table
        .groups
        .iter()
        .map(|(lin, members)| lin.to_exponent().with_log(u32::from(members.len() > 1)))
        .collect();
    let pieces = upper_envelope(&lines, Vec::new())
        .into_iter()
        .map(|(lo, hi, w)| {
            let optimal = table.assignments(&table.groups[w].1, mode);
            Piece {
                tau_lo: lo,
                tau_hi: hi,
                exponent: lines[w].clone(),
                representative: optimal[0].clone(),
                partition: partition_view(&optimal),
                optimal_assignments: optimal,
            }
        })
        .collect();
    Ok(PiecewiseExponent { motif: h.clone(), mode, pieces })
}

/// `"(lo,hi)"` with exact endpoints.
pub fn fmt_interval(lo: &Surd, hi: &Surd) -> String {
    format!("({lo},{hi})")
}
