// SPDX-License-Identifier: Apache-2.0

//! Independent oracles shared by the regression and acceptance targets.

use motifvar_core::host::HostGraph;
use motifvar_core::motif::SmallGraph;
use motifvar_core::rational::Q;
use motifvar_core::varprinciple::{piecewise, symbolic_exponent, Assignment, Label, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::reference::{Correction, Reference};
use super::{exponent, labels, q, surd};

/// Erdős–Rényi graph on 5..=14 vertices with a random density.
pub fn random_graph(rng: &mut ChaCha8Rng) -> HostGraph {
    let n = rng.gen_range(5..=14u32);
    let p: f64 = rng.gen_range(0.15..0.65);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                e.push((u, v));
            }
        }
    }
    HostGraph::from_edges(n as usize, &e).unwrap()
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacency of `k` vertices as a bitmask over pairs `i < j`.
pub fn pair_bit(i: usize, j: usize, k: usize) -> u32 {
    let (a, b) = (i.min(j), i.max(j));
    let idx = a * k - a * (a + 1) / 2 + (b - a - 1);
    1 << idx
}

pub fn motif_mask(h: &SmallGraph) -> u32 {
    h.edges().iter().map(|&(i, j)| pair_bit(i, j, h.k())).fold(0, |a, b| a | b)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Exhaustive counts over every vertex subset: (non-induced, induced) per
/// motif, by checking every bijection onto the subset.
pub fn brute(g: &HostGraph, motifs: &[SmallGraph]) -> Vec<(u64, u64)> {
    let k = motifs[0].k();
    let perms = permutations(k);
    let masks: Vec<u32> = motifs.iter().map(motif_mask).collect();
    let auts: Vec<u64> =
        masks.iter().map(|&m| perms.iter().filter(|p| permuted(m, p, k) == m).count() as u64).collect();
    let mut maps = vec![(0u64, 0u64); motifs.len()];
    for s in subsets(g.n(), k) {
        let mut host = 0u32;
        for i in 0..k {
            for j in i + 1..k {
                if g.has_edge(s[i], s[j]) {
                    host |= pair_bit(i, j, k);
                }
            }
        }
        for p in &perms {
            let img = permuted(host, p, k);
            for (m, &mask) in masks.iter().enumerate() {
                if img & mask == mask {
                    maps[m].0 += 1;
                    if img == mask {
                        maps[m].1 += 1;
                    }
                }
            }
        }
    }
    maps.iter().zip(&auts).map(|(&(a, b), &aut)| (a / aut, b / aut)).collect()
}

pub fn permuted(mask: u32, p: &[usize], k: usize) -> u32 {
    let mut out = 0;
    for i in 0..k {
        for j in i + 1..k {
            if mask & pair_bit(i, j, k) != 0 {
                out |= pair_bit(p[i], p[j], k);
            }
        }
    }
    out
}

/// Seeded stream of [`random_graph`]s.
pub fn random_graphs(seed: u64, count: usize) -> Vec<HostGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng)).collect()
}

/// Compares the computed envelope with the expected pieces.
pub fn check(r: &Reference) -> Result<(), String> {
    let h = SmallGraph::parse_literal(r.edges).unwrap();
    let mode: Mode = r.mode.parse().unwrap();
    let p = piecewise(&h, mode).unwrap();
    let mut lo = surd("2");
    if p.pieces.len() != r.expected.len() {
        return Err(format!("{} pieces, expected {}", p.pieces.len(), r.expected.len()));
    }
    for (piece, (hi, e)) in p.pieces.iter().zip(r.expected) {
        let want = exponent(e);
        if piece.tau_lo != lo || piece.tau_hi != surd(hi) || piece.exponent != want {
            return Err(format!(
                "piece [{}, {}) {} expected [{}, {}) {}",
                piece.tau_lo, piece.tau_hi, piece.exponent, lo, hi, want
            ));
        }
        lo = surd(hi);
    }
    Ok(())
}

/// Whether a `Witnessed` correction really beats the listed value.
pub fn witness_beats_listed(r: &Reference) -> bool {
    let Correction::Witnessed(w) = r.correction else { return true };
    let h = SmallGraph::parse_literal(r.edges).unwrap();
    let mode: Mode = r.mode.parse().unwrap();
    let listed = exponent(r.listed.unwrap());
    let got = symbolic_exponent(&h, &Assignment::new(labels(w), mode)).unwrap();
    // strictly above the listed polynomial somewhere in (2,3)
    ["21/10", "5/2", "29/10"].iter().any(|t| got.eval_q(&q(t)) > listed.eval_q(&q(t)))
}

/// Brute-force maximum of the free exponent over every labeling, compared as
/// exact rationals at `tau`.
pub fn brute_max(h: &SmallGraph, mode: Mode, tau: &Q) -> Q {
    let free = [Label::Zero, Label::Half, Label::One];
    let k = h.k();
    let mut best: Option<Q> = None;
    for code in 0..3usize.pow(k as u32) {
        let mut c = code;
        let labels: Vec<Label> = (0..k)
            .map(|_| {
                let l = free[c % 3];
                c /= 3;
                l
            })
            .collect();
        let Ok(e) = symbolic_exponent(h, &Assignment::new(labels, mode)) else { continue };
        let v = e.eval_q(tau);
        if best.is_none_or(|b| v > b) {
            best = Some(v);
        }
    }
    best.unwrap()
}
