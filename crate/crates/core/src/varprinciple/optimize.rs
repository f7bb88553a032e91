// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use serde::Serialize;

use super::assign::{feasible_labelings, non_edges_ok, objective_with_edges, Assignment, Label, Lin, Mode, PairTable};
use super::exponent::{Tau, TauExponent};
use super::piecewise::upper_envelope;
use crate::error::{Error, Result};
use crate::motif::SmallGraph;
use crate::rational::{qi, Surd, Q};

/// Scale class of a motif vertex in an optimal structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexClass {
    /// Hidden variable of constant order.
    Constant,
    /// Degree-one vertex in a typical mode (constant order by construction).
    DegreeOne,
    /// `√n`
    SqrtN,
    /// `n` in free modes, `n^{1/(τ-1)}` in typical modes.
    Hub,
    /// `n^{(τ-2)/(τ-1)}`
    TypicalMid,
    /// The optimal structures disagree on this vertex.
    Varies,
}

impl VertexClass {
    pub fn of(label: Label, mode: Mode) -> VertexClass {
        match label {
            Label::Zero if mode.is_typical() => VertexClass::DegreeOne,
            Label::Zero => VertexClass::Constant,
            Label::Half => VertexClass::SqrtN,
            Label::One | Label::Hub => VertexClass::Hub,
            Label::TypicalMid => VertexClass::TypicalMid,
        }
    }
}

/// Per-vertex classes over a set of optimal assignments.
pub fn partition_view(optimal: &[Assignment]) -> Vec<VertexClass> {
    let Some(first) = optimal.first() else {
        return Vec::new();
    };
    (0..first.labels.len())
        .map(|v| {
            let c = VertexClass::of(first.labels[v], first.mode);
            if optimal.iter().all(|a| VertexClass::of(a.labels[v], a.mode) == c) {
                c
            } else {
                VertexClass::Varies
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct VariationalResult {
    pub motif: SmallGraph,
    pub mode: Mode,
    pub tau: Tau,
    pub exponent: TauExponent,
    pub optimal_assignments: Vec<Assignment>,
    pub unique: bool,
    pub partition_view: Vec<VertexClass>,
}

/// All feasible assignments of `h` in `mode` with their exponents, grouped by
/// exponent. Groups keep assignment order (lexicographic).
pub(crate) struct ExponentTable {
    pub labelings: Vec<Vec<Label>>,
    pub groups: Vec<(Lin, Vec<usize>)>,
}

impl ExponentTable {
    pub fn build(h: &SmallGraph, mode: Mode) -> Result<Self> {
        if !h.is_connected() {
            return Err(Error::Disconnected);
        }
        let table = PairTable::new();
        let labelings = feasible_labelings(h, mode, &table)?;
        let mut index: HashMap<Lin, usize> = HashMap::new();
        let mut groups: Vec<(Lin, Vec<usize>)> = Vec::new();
        let edges = h.edges();
        for (i, l) in labelings.iter().enumerate() {
            debug_assert!(!mode.is_graphlet() || non_edges_ok(h, l, &table)?);
            let lin = objective_with_edges(h.k(), &edges, l, &table)?;
            let g = *index.entry(lin).or_insert_with(|| {
                groups.push((lin, Vec::new()));
                groups.len() - 1
            });
            groups[g].1.push(i);
        }
        Ok(ExponentTable { labelings, groups })
    }

    pub fn assignments(&self, members: &[usize], mode: Mode) -> Vec<Assignment> {
        members.iter().map(|&i| Assignment::new(self.labelings[i].clone(), mode)).collect()
    }
}

/// Maximises the exponent over every feasible assignment at `tau`.
pub fn optimize(h: &SmallGraph, mode: Mode, tau: &Tau) -> Result<VariationalResult> {
    let table = ExponentTable::build(h, mode)?;
    let values: Vec<Q> = table.groups.iter().map(|(lin, _)| lin.to_exponent().eval(tau)).collect();
    let best = values.iter().max().cloned().expect("at least one feasible assignment");
    let mut members: Vec<usize> = Vec::new();
    for ((_, m), v) in table.groups.iter().zip(&values) {
        if *v == best {
            members.extend_from_slice(m);
        }
    }
    members.sort_unstable();
    // at a breakpoint several lines tie; report the one continuing to the
    // right, as the half-open envelope pieces do
    let lines: Vec<TauExponent> = table.groups.iter().map(|(lin, _)| lin.to_exponent()).collect();
    let t = Surd::rational(*tau.value());
    let w = upper_envelope(&lines, Vec::new())
        .into_iter()
        .find(|(lo, hi, _)| *lo <= t && t < *hi)
        .expect("envelope covers (2,3)")
        .2;
    debug_assert_eq!(values[w], best);
    let lin = table.groups[w].0;
    let optimal = table.assignments(&members, mode);
    let unique = optimal.len() == 1;
    Ok(VariationalResult {
        motif: h.clone(),
        mode,
        tau: tau.clone(),
        exponent: lin.to_exponent().with_log(u32::from(!unique)),
        partition_view: partition_view(&optimal),
        optimal_assignments: optimal,
        unique,
    })
}

/// Partition objective of one assignment:
/// free modes `|S1| - |S2| - (2E(S1) + E(S1,S3))/(τ-1)`, typical modes
/// `|S1| - |S2| - (2E(S1) + E(S1,S3) + E(S1,D) - E(S2,D))/(τ-1)` where `D`
/// holds the degree-one vertices.
pub fn partition_objective(h: &SmallGraph, a: &Assignment) -> TauExponent {
    let typical = a.mode.is_typical();
    let in_s1 = |l: Label| if typical { l == Label::TypicalMid } else { l == Label::Zero };
    let in_s2 = |l: Label| matches!(l, Label::One | Label::Hub);
    let in_s3 = |l: Label| l == Label::Half;
    let s1 = a.labels.iter().filter(|&&l| in_s1(l)).count() as i128;
    let s2 = a.labels.iter().filter(|&&l| in_s2(l)).count() as i128;
    let mut penalty = 0i128;
    for (i, j) in h.edges() {
        let (li, lj) = (a.labels[i], a.labels[j]);
        let deg1 = |v: usize| typical && h.degree(v) == 1;
        if in_s1(li) && in_s1(lj) {
            penalty += 2;
        }
        if (in_s1(li) && in_s3(lj)) || (in_s3(li) && in_s1(lj)) {
            penalty += 1;
        }
        if (in_s1(li) && deg1(j)) || (deg1(i) && in_s1(lj)) {
            penalty += 1;
        }
        if (in_s2(li) && deg1(j)) || (deg1(i) && in_s2(lj)) {
            penalty -= 1;
        }
    }
    TauExponent::poly(qi(s1 - s2), qi(0), qi(-penalty))
}

/// The partition objective of the first optimal structure.
pub fn b_value(result: &VariationalResult) -> TauExponent {
    partition_objective(&result.motif, &result.optimal_assignments[0])
}

/// Free-mode `B` recovered from a free exponent `a + bτ` through
/// `exponent = (3-τ)k/2 + (τ-1)B/2`.
pub fn b_from_free_exponent(e: &TauExponent, k: usize) -> TauExponent {
    let k = qi(k as i128);
    let two = qi(2);
    TauExponent::poly(two * e.b + k, qi(0), two * e.a + two * e.b - two * k)
}

/// Free exponent from `B`: `(3-τ)k/2 + (τ-1)B/2` (valid when `B` has no `τ` term).
pub fn free_exponent_from_b(b: &TauExponent, k: usize) -> TauExponent {
    let k = qi(k as i128);
    let half = Q::new(1, 2);
    // (τ-1)(a_B + c_B/(τ-1))/2 = a_B τ/2 - a_B/2 + c_B/2
    TauExponent::poly(qi(3) * k * half - b.a * half + b.c * half, -k * half + b.a * half, qi(0))
}

/// Typical exponent from `B_t` at a rational `τ`:
/// `(3-τ)(k + B_t)/2 + (τ-2)k₁/2`.
pub fn typical_exponent_from_b(b: &TauExponent, k: usize, k1: usize, tau: &Q) -> Q {
    let half = Q::new(1, 2);
    (qi(3) - tau) * (qi(k as i128) + b.eval_q(tau)) * half + (tau - qi(2)) * qi(k1 as i128) * half
}
