// SPDX-License-Identifier: Apache-2.0

//! Gluing two copies of a motif.
//!
//! An identification map picks `r ≥ 1` vertices of the first copy and sends
//! them injectively onto vertices of the second copy; the merged graph is the
//! union of both edge sets. Maps are counted at the labelled level and then
//! bucketed by isomorphism class, so the constant of a class is the number of
//! maps producing it. There are `Σ_r C(k,r)^2 r!` maps in total.

use std::collections::HashMap;

use serde::Serialize;

use super::canon::{canonical_form, canonical_graph, CanonicalForm};
use super::graph::{SmallGraph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct MergeEntry {
    pub merged: SmallGraph,
    pub constant: u64,
    pub overlap_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MergeFamily {
    pub base: SmallGraph,
    pub entries: Vec<MergeEntry>,
    pub induced_mode: bool,
}

impl MergeFamily {
    pub fn total_constant(&self) -> u64 {
        self.entries.iter().map(|e| e.constant).sum()
    }
}

/// One identification map: `overlap[i] = (vertex of copy 1, vertex of copy 2)`.
pub type Identification = Vec<(usize, usize)>;

/// Calls `f` for every identification map with its merged graph, or `None`
/// when the merge would exceed [`MAX_VERTICES`].
pub fn for_each_identification<F>(h: &SmallGraph, mut f: F)
where
    F: FnMut(&Identification, Option<&SmallGraph>),
{
    let k = h.k();
    for r in 1..=k {
        for_each_subset(k, r, &mut |first: &[usize]| {
            for_each_injection(k, r, &mut |second: &[usize]| {
                let ident: Identification = first.iter().copied().zip(second.iter().copied()).collect();
                let merged = glue(h, &ident);
                f(&ident, merged.as_ref());
            });
        });
    }
}

/// Builds the merged graph: copy 1 keeps labels `0..k`; unidentified vertices
/// of copy 2 get fresh labels `k..`.
pub fn glue(h: &SmallGraph, ident: &Identification) -> Option<SmallGraph> {
    let k = h.k();
    let total = 2 * k - ident.len();
    if total > MAX_VERTICES {
        return None;
    }
    let mut map = vec![usize::MAX; k];
    for &(a, b) in ident {
        map[b] = a;
    }
    let mut next = k;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut g = SmallGraph::empty(total).ok()?;
    for (u, v) in h.edges() {
        g.add_edge(u, v);
        g.add_edge(map[u], map[v]);
    }
    Some(g)
}

/// True when both copies remain induced subgraphs of the merge, i.e. the
/// overlap pairs have the same adjacency in both copies.
pub fn copies_stay_induced(h: &SmallGraph, ident: &Identification) -> bool {
    ident.iter().enumerate().all(|(i, &(a1, b1))| {
        ident[i + 1..].iter().all(|&(a2, b2)| h.has_edge(a1, a2) == h.has_edge(b1, b2))
    })
}

fn for_each_subset(k: usize, r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, k: usize, r: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for v in start..k {
            if k - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, k, r, cur, f);
            cur.pop();
        }
    }
    rec(0, k, r, &mut Vec::with_capacity(r), f);
}

fn for_each_injection(k: usize, r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, r: usize, used: u32, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for v in 0..k {
            if used >> v & 1 == 0 {
                cur.push(v);
                rec(k, r, used | 1 << v, cur, f);
                cur.pop();
            }
        }
    }
    rec(k, r, 0, &mut Vec::with_capacity(r), f);
}

/// Enumerates and buckets all gluings of two copies of `h`.
pub fn merge_enumerate(h: &SmallGraph, induced_mode: bool) -> Result<MergeFamily> {
    if h.k() < 2 {
        return Err(Error::VertexCount { got: h.k(), min: 2, max: MAX_VERTICES });
    }
    if 2 * h.k() - 1 > MAX_VERTICES {
        return Err(Error::VertexCount { got: h.k(), min: 2, max: MAX_VERTICES.div_ceil(2) });
    }
    let mut buckets: HashMap<CanonicalForm, (SmallGraph, u64, usize)> = HashMap::new();
    for_each_identification(h, |ident, merged| {
        if induced_mode && !copies_stay_induced(h, ident) {
            return;
        }
        let merged = merged.expect("size checked above");
        let cf = canonical_form(merged);
        buckets.entry(cf).or_insert_with(|| (canonical_graph(merged), 0, ident.len())).1 += 1;
    });
    let mut keyed: Vec<(CanonicalForm, MergeEntry)> = buckets
        .into_iter()
        .map(|(cf, (merged, constant, overlap_size))| (cf, MergeEntry { merged, constant, overlap_size }))
        .collect();
    keyed.sort_by(|(ca, a), (cb, b)| {
        (a.overlap_size, a.merged.edge_count(), ca).cmp(&(b.overlap_size, b.merged.edge_count(), cb))
    });
    let entries = keyed.into_iter().map(|(_, e)| e).collect();
    Ok(MergeFamily { base: h.clone(), entries, induced_mode })
}

/// `Σ_{s=0}^{k-1} C(k,s)^2 (k-s)!`, the total number of identification maps
/// with at least one shared vertex (`s` counts unshared vertices per copy).
pub fn identification_count(k: usize) -> u64 {
    fn binom(n: u64, r: u64) -> u64 {
        (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }
    let fact = |n: u64| (1..=n).product::<u64>();
    (0..k as u64).map(|s| binom(k as u64, s).pow(2) * fact(k as u64 - s)).sum()
}
