// SPDX-License-Identifier: Apache-2.0

//! Canonical labelling and automorphism groups of small graphs.
//!
//! Colour refinement produces an isomorphism-invariant ordered partition;
//! the canonical form is the maximum adjacency code over every leaf of the
//! individualisation-refinement tree, so the search is exhaustive over all
//! labellings compatible with the refined partition.

use std::hash::{Hash, Hasher};

use serde::Serialize;

use super::graph::SmallGraph;

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalForm {
    pub k: usize,
    /// Upper-triangle adjacency bits of the canonically relabelled graph.
    pub code: u64,
    /// `relabeling[v]` is the canonical position of vertex `v`.
    pub relabeling: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.code == other.code
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.k.hash(state);
        self.code.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.k, self.code).cmp(&(other.k, other.code))
    }
}

/// Ranks `keys` densely in sorted order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|key| sorted.binary_search(key).unwrap() as u32).collect()
}

/// Refines `colors` to the coarsest equitable partition below it.
pub(crate) fn refine(g: &SmallGraph, mut colors: Vec<u32>) -> Vec<u32> {
    let k = g.k();
    let mut classes = {
        let mut c = colors.clone();
        c.sort();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..k)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let n_classes = *next.iter().max().unwrap_or(&0) as usize + 1;
        colors = next;
        if n_classes == classes {
            return colors;
        }
        classes = n_classes;
    }
}

fn initial_colors(g: &SmallGraph) -> Vec<u32> {
    rank(&g.degree_sequence())
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<(u32, u8)> = colors.iter().enumerate().map(|(w, &c)| (c, (w != v) as u8)).collect();
    rank(&keys)
}

fn search(g: &SmallGraph, colors: Vec<u32>, best: &mut Option<(u64, Vec<usize>)>) {
    let k = g.k();
    // first smallest non-singleton cell
    let mut counts = vec![0usize; k];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let target = (0..k).filter(|&c| counts[c] > 1).min_by_key(|&c| (counts[c], c));
    match target {
        None => {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let code = g.relabel(&perm).upper_code();
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, perm));
            }
        }
        Some(cell) => {
            for v in 0..k {
                if colors[v] as usize == cell {
                    let next = refine(g, individualize(&colors, v));
                    search(g, next, best);
                }
            }
        }
    }
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let colors = refine(g, initial_colors(g));
    let mut best = None;
    search(g, colors, &mut best);
    let (code, relabeling) = best.expect("search always reaches a leaf");
    CanonicalForm { k: g.k(), code, relabeling }
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    g.relabel(&canonical_form(g).relabeling)
}

pub fn is_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    a.k() == b.k() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// All automorphisms of `g` as permutations `perm[v] = image of v`.
pub fn automorphisms(g: &SmallGraph) -> Vec<Vec<usize>> {
    let k = g.k();
    let colors = refine(g, initial_colors(g));
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; k];
    let mut used = 0u16;
    fn extend(
        g: &SmallGraph,
        colors: &[u32],
        v: usize,
        image: &mut Vec<usize>,
        used: &mut u16,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = g.k();
        if v == k {
            out.push(image.clone());
            return;
        }
        for w in 0..k {
            if *used >> w & 1 == 1 || colors[w] != colors[v] {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            *used |= 1 << w;
            extend(g, colors, v + 1, image, used, out);
            *used &= !(1 << w);
        }
        image[v] = usize::MAX;
    }
    extend(g, &colors, 0, &mut image, &mut used, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryInfo {
    pub automorphism_count: u64,
    /// Orbits of the automorphism group, each sorted, ordered by least member.
    pub orbits: Vec<Vec<usize>>,
    pub degree_sequence: Vec<usize>,
    pub degree1_count: usize,
}

impl SymmetryInfo {
    /// Index of the orbit containing `v`.
    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbits.iter().position(|o| o.contains(&v)).expect("orbits cover all vertices")
    }
}

pub fn symmetry_info(g: &SmallGraph) -> SymmetryInfo {
    let k = g.k();
    let autos = automorphisms(g);
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nxt = p[y];
            p[y] = r;
            y = nxt;
        }
        r
    }
    for perm in &autos {
        for v in 0..k {
            let a = find(&mut parent, v);
            let b = find(&mut parent, perm[v]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..k {
        let root = find(&mut parent, v);
        match orbits.iter_mut().find(|o| o[0] == root) {
            Some(o) => o.push(v),
            None => orbits.push(vec![v]),
        }
    }
    let degree_sequence = g.degree_sequence();
    let degree1_count = degree_sequence.iter().filter(|&&d| d == 1).count();
    SymmetryInfo { automorphism_count: autos.len() as u64, orbits, degree_sequence, degree1_count }
}
