// SPDX-License-Identifier: Apache-2.0

//! Degree-exponent assignments and the exponent objective.
//!
//! A vertex with hidden variable `n^α` contributes `(1-τ)α` through the weight
//! density, and an edge whose endpoints satisfy `α_i + α_j < 1` contributes
//! `α_i + α_j - 1` through its connection probability. Every candidate label
//! has the form `α = x/2 + y/(τ-1)`, so exponents stay in the span of
//! `{1, τ, 1/(τ-1)}` and are tracked as small integers.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::exponent::TauExponent;
use crate::error::{Error, Result};
use crate::motif::SmallGraph;
use crate::rational::{q, qi};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Zero,
    /// `(τ-2)/(τ-1)`
    TypicalMid,
    Half,
    /// `1/(τ-1)`
    Hub,
    One,
}

impl Label {
    /// `(x, y)` with `α = x/2 + y/(τ-1)`.
    #[inline]
    pub(crate) fn parts(self) -> (i64, i64) {
        match self {
            Label::Zero => (0, 0),
            Label::TypicalMid => (2, -1),
            Label::Half => (1, 0),
            Label::Hub => (0, 1),
            Label::One => (2, 0),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Zero => "0",
            Label::TypicalMid => "(tau-2)/(tau-1)",
            Label::Half => "1/2",
            Label::Hub => "1/(tau-1)",
            Label::One => "1",
        }
    }

    /// Numeric value at `τ`.
    pub fn value_f64(self, tau: f64) -> f64 {
        let (x, y) = self.parts();
        x as f64 / 2.0 + y as f64 / (tau - 1.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().replace(' ', "").as_str() {
            "0" => Label::Zero,
            "1/2" | "0.5" | "half" => Label::Half,
            "1" => Label::One,
            "(tau-2)/(tau-1)" | "typ" => Label::TypicalMid,
            "1/(tau-1)" | "hub" => Label::Hub,
            _ => return Err(Error::Parse(format!("unknown label {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    FreeMotif,
    TypicalMotif,
    FreeGraphlet,
    TypicalGraphlet,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::FreeMotif, Mode::TypicalMotif, Mode::FreeGraphlet, Mode::TypicalGraphlet];

    pub fn from_flags(typical: bool, induced: bool) -> Mode {
        match (typical, induced) {
            (false, false) => Mode::FreeMotif,
            (true, false) => Mode::TypicalMotif,
            (false, true) => Mode::FreeGraphlet,
            (true, true) => Mode::TypicalGraphlet,
        }
    }

    pub fn is_typical(self) -> bool {
        matches!(self, Mode::TypicalMotif | Mode::TypicalGraphlet)
    }

    pub fn is_graphlet(self) -> bool {
        matches!(self, Mode::FreeGraphlet | Mode::TypicalGraphlet)
    }

    /// Candidate labels for a vertex of degree `deg`.
    pub fn candidates(self, deg: usize) -> &'static [Label] {
        if self.is_typical() {
            if deg == 1 {
                &[Label::Zero]
            } else {
                &[Label::TypicalMid, Label::Half, Label::Hub]
            }
        } else {
            &[Label::Zero, Label::Half, Label::One]
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::FreeMotif => "free-motif",
            Mode::TypicalMotif => "typical-motif",
            Mode::FreeGraphlet => "free-graphlet",
            Mode::TypicalGraphlet => "typical-graphlet",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mode {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Assignment {
    pub labels: Vec<Label>,
    pub mode: Mode,
}

impl Assignment {
    pub fn new(labels: Vec<Label>, mode: Mode) -> Self {
        Assignment { labels, mode }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.labels.iter().map(|l| l.as_str()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Sign pattern of `α_i + α_j - 1` over `τ ∈ (2, 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PairSum {
    Below,
    Exactly,
    Above,
}

/// Classifies `α_i + α_j` against 1. With `u = 1/(τ-1) ∈ (1/2, 1)` the
/// quantity `2(α_i + α_j - 1) = X - 2 + 2Y·u` is linear in `u`, so its signs
/// at the two ends decide the whole open interval.
pub(crate) fn pair_sum(a: Label, b: Label) -> Result<PairSum> {
    let (xa, ya) = a.parts();
    let (xb, yb) = b.parts();
    let (x, y) = (xa + xb, ya + yb);
    let lo = x - 2 + y;
    let hi = x - 2 + 2 * y;
    match (lo.signum(), hi.signum()) {
        (0, 0) => Ok(PairSum::Exactly),
        (l, h) if l <= 0 && h <= 0 => Ok(PairSum::Below),
        (l, h) if l >= 0 && h >= 0 => Ok(PairSum::Above),
        _ => Err(Error::Unsupported(format!("sum of {a} and {b} crosses 1 inside (2,3)"))),
    }
}

/// Exponent in half units: `(a2/2) + (b2/2)·τ + c/(τ-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Lin {
    pub a2: i64,
    pub b2: i64,
    pub c: i64,
}

impl Lin {
    pub fn to_exponent(self) -> TauExponent {
        TauExponent::poly(q(self.a2 as i128, 2), q(self.b2 as i128, 2), qi(self.c as i128))
    }
}

/// Precomputed pair classification for the five labels.
pub(crate) struct PairTable([[Option<PairSum>; 5]; 5]);

fn label_index(l: Label) -> usize {
    l as usize
}

impl PairTable {
    pub fn new() -> Self {
        const LABELS: [Label; 5] = [Label::Zero, Label::TypicalMid, Label::Half, Label::Hub, Label::One];
        let mut t = [[None; 5]; 5];
        for a in LABELS {
            for b in LABELS {
                t[label_index(a)][label_index(b)] = pair_sum(a, b).ok();
            }
        }
        PairTable(t)
    }

    #[inline]
    pub fn get(&self, a: Label, b: Label) -> Result<PairSum> {
        self.0[label_index(a)][label_index(b)]
            .ok_or_else(|| Error::Unsupported(format!("sum of {a} and {b} crosses 1 inside (2,3)")))
    }
}

pub(crate) fn objective(h: &SmallGraph, labels: &[Label], table: &PairTable) -> Result<Lin> {
    objective_with_edges(h.k(), &h.edges(), labels, table)
}

pub(crate) fn objective_with_edges(
    k: usize,
    edges: &[(usize, usize)],
    labels: &[Label],
    table: &PairTable,
) -> Result<Lin> {
    let k = k as i64;
    let mut lin = Lin { a2: 2 * k, b2: 0, c: 0 };
    for &l in labels {
        let (x, y) = l.parts();
        // (1 - τ)(x/2 + y/(τ-1)) = x/2 - (x/2)τ - y
        lin.a2 += x - 2 * y;
        lin.b2 -= x;
    }
    for &(i, j) in edges {
        if table.get(labels[i], labels[j])? == PairSum::Below {
            let (xi, yi) = labels[i].parts();
            let (xj, yj) = labels[j].parts();
            lin.a2 += xi + xj - 2;
            lin.c += yi + yj;
        }
    }
    Ok(lin)
}

fn check_labels(h: &SmallGraph, a: &Assignment) -> Result<()> {
    if a.labels.len() != h.k() {
        return Err(Error::InvalidParam(format!(
            "assignment has {} labels for a motif on {} vertices",
            a.labels.len(),
            h.k()
        )));
    }
    for (v, &l) in a.labels.iter().enumerate() {
        if !a.mode.candidates(h.degree(v)).contains(&l) {
            return Err(Error::BadLabel { label: l.to_string(), mode: a.mode.to_string() });
        }
    }
    Ok(())
}

/// Whether every non-edge satisfies `α_i + α_j ≤ 1` (graphlet modes only).
pub(crate) fn non_edges_ok(h: &SmallGraph, labels: &[Label], table: &PairTable) -> Result<bool> {
    for (i, j) in h.non_edges() {
        if table.get(labels[i], labels[j])? == PairSum::Above {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Count exponent `k + (1-τ)Σα_i + Σ_{edges with α_i+α_j<1} (α_i+α_j-1)` of
/// the assignment, with log power 0.
pub fn symbolic_exponent(h: &SmallGraph, a: &Assignment) -> Result<TauExponent> {
    check_labels(h, a)?;
    let table = PairTable::new();
    if a.mode.is_graphlet() && !non_edges_ok(h, &a.labels, &table)? {
        return Err(Error::InvalidParam(format!("assignment {a} violates a non-edge constraint")));
    }
    Ok(objective(h, &a.labels, &table)?.to_exponent())
}

/// Every feasible label vector for `mode`, in lexicographic label order.
pub(crate) fn feasible_labelings(h: &SmallGraph, mode: Mode, table: &PairTable) -> Result<Vec<Vec<Label>>> {
    let k = h.k();
    let non_adj: Vec<u16> = (0..k).map(|v| !h.neighbor_mask(v) & !(1u16 << v) & ((1u16 << k) - 1)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        h: &SmallGraph,
        mode: Mode,
        table: &PairTable,
        non_adj: &[u16],
        cur: &mut Vec<Label>,
        out: &mut Vec<Vec<Label>>,
    ) -> Result<()> {
        let v = cur.len();
        if v == h.k() {
            out.push(cur.clone());
            return Ok(());
        }
        for &l in mode.candidates(h.degree(v)) {
            if mode.is_graphlet() {
                let mut ok = true;
                for u in 0..v {
                    if non_adj[v] >> u & 1 == 1 && table.get(cur[u], l)? == PairSum::Above {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
            }
            cur.push(l);
            rec(h, mode, table, non_adj, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    rec(h, mode, table, &non_adj, &mut cur, &mut out)?;
    Ok(out)
}
