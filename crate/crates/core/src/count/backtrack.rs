// SPDX-License-Identifier: Apache-2.0

//! Embedding enumeration by backtracking over host neighbour lists.

use rayon::prelude::*;

use crate::host::HostGraph;
use crate::motif::SmallGraph;

/// Motif vertices in a connected search order with, for each position, the
/// earlier positions it must (or, induced, must not) be adjacent to.
pub(crate) struct Plan {
    pub order: Vec<usize>,
    pub degree: Vec<usize>,
    pub back_adj: Vec<Vec<usize>>,
    pub back_non: Vec<Vec<usize>>,
}

impl Plan {
    pub fn new(h: &SmallGraph, induced: bool) -> Plan {
        let k = h.k();
        let mut order = Vec::with_capacity(k);
        let first = (0..k).max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v))).expect("nonempty motif");
        order.push(first);
        while order.len() < k {
            let next = (0..k)
                .filter(|v| !order.contains(v))
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                    (links, h.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex");
            order.push(next);
        }
        let mut back_adj = vec![Vec::new(); k];
        let mut back_non = vec![Vec::new(); k];
        for p in 0..k {
            for q in 0..p {
                if h.has_edge(order[p], order[q]) {
                    back_adj[p].push(q);
                } else if induced {
                    back_non[p].push(q);
                }
            }
        }
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Plan { order, degree, back_adj, back_non }
    }
}

fn extend<F: FnMut(&[u32])>(g: &HostGraph, plan: &Plan, img: &mut Vec<u32>, f: &mut F) {
    let p = img.len();
    if p == plan.order.len() {
        f(img);
        return;
    }
    let anchor = *plan.back_adj[p]
        .iter()
        .min_by_key(|&&q| g.degree(img[q] as usize))
        .expect("connected order has a back neighbour");
    for &c in g.neighbors(img[anchor] as usize) {
        let cu = c as usize;
        if g.degree(cu) < plan.degree[p] || img.contains(&c) {
            continue;
        }
        if plan.back_adj[p].iter().any(|&q| q != anchor && !g.has_edge(img[q] as usize, cu)) {
            continue;
        }
        if plan.back_non[p].iter().any(|&q| g.has_edge(img[q] as usize, cu)) {
            continue;
        }
        img.push(c);
        extend(g, plan, img, f);
        img.pop();
    }
}

/// Calls `f` with the image of `plan.order` for every embedding rooted at
/// host vertex `root`.
pub(crate) fn embeddings_from<F: FnMut(&[u32])>(g: &HostGraph, plan: &Plan, root: u32, f: &mut F) {
    if g.degree(root as usize) < plan.degree[0] {
        return;
    }
    let mut img = Vec::with_capacity(plan.order.len());
    img.push(root);
    extend(g, plan, &mut img, f);
}

/// Number of labelled embeddings (injective maps preserving edges, and
/// non-edges when `induced`).
pub fn count_embeddings(g: &HostGraph, h: &SmallGraph, induced: bool) -> u64 {
    if h.k() == 1 {
        return g.n() as u64;
    }
    let plan = Plan::new(h, induced);
    (0..g.n() as u32)
        .into_par_iter()
        .map(|r| {
            let mut c = 0u64;
            embeddings_from(g, &plan, r, &mut |_| c += 1);
            c
        })
        .sum()
}

/// Visits every embedding as a map from motif vertex to host vertex.
pub fn for_each_embedding<F: FnMut(&[u32])>(g: &HostGraph, h: &SmallGraph, induced: bool, mut f: F) {
    let plan = Plan::new(h, induced);
    let k = h.k();
    let mut map = vec![0u32; k];
    for r in 0..g.n() as u32 {
        embeddings_from(g, &plan, r, &mut |img| {
            for (p, &x) in img.iter().enumerate() {
                map[plan.order[p]] = x;
            }
            f(&map);
        });
    }
}
