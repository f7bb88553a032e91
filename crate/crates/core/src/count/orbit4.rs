// SPDX-License-Identifier: Apache-2.0

//! Per-vertex counts for the eleven vertex types of the connected 4-vertex
//! graphs, non-induced by closed forms over degrees, edge triangle counts and
//! common-neighbour counts, then made induced by inverting the containment
//! relation between types.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::host::HostGraph;
use crate::motif::{canonical_form, parse_motif, SmallGraph};

/// Vertex types `t1..t11`: graphlet alias and the type's degree inside it
/// (the pair identifies the orbit).
pub const VERTEX_TYPES: [(&str, usize); 11] = [
    ("k4", 3),
    ("diamond", 2),
    ("diamond", 3),
    ("square", 2),
    ("paw", 1),
    ("paw", 2),
    ("paw", 3),
    ("claw", 1),
    ("claw", 3),
    ("path", 1),
    ("path", 2),
];

/// The six graphlets, densest first.
pub const GRAPHLETS: [&str; 6] = ["k4", "diamond", "square", "paw", "claw", "path"];

pub fn type_name(t: usize) -> String {
    format!("t{}", t + 1)
}

/// Vertex type of vertex `v` in the connected 4-vertex graph `g`.
pub fn vertex_type(g: &SmallGraph, v: usize) -> usize {
    let code = canonical_form(g).code;
    VERTEX_TYPES
        .iter()
        .position(|&(name, d)| d == g.degree(v) && canonical_form(&parse_motif(name).unwrap()).code == code)
        .expect("connected 4-vertex graph")
}

/// `m[a][b]`: for a vertex of type `b`, the number of spanning edge subsets of
/// its graphlet in which it has type `a`.
pub fn containment() -> &'static [[u64; 11]; 11] {
    static M: OnceLock<[[u64; 11]; 11]> = OnceLock::new();
    M.get_or_init(|| {
        let mut m = [[0u64; 11]; 11];
        for (b, &(name, d)) in VERTEX_TYPES.iter().enumerate() {
            let g = parse_motif(name).unwrap();
            let v = (0..4).find(|&v| g.degree(v) == d).unwrap();
            let edges = g.edges();
            for mask in 1u32..(1 << edges.len()) {
                let sub: Vec<(usize, usize)> =
                    edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let s = SmallGraph::from_edges(4, &sub).unwrap();
                if s.is_connected() {
                    m[vertex_type(&s, v)][b] += 1;
                }
            }
        }
        m
    })
}

/// Triangle counts per adjacency slot, aligned with `g.neighbors(v)`.
fn edge_triangles(g: &HostGraph) -> Vec<Vec<u32>> {
    (0..g.n())
        .into_par_iter()
        .map(|v| g.neighbors(v).iter().map(|&u| g.common_neighbors(v, u as usize) as u32).collect())
        .collect()
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn choose3(x: u64) -> u64 {
    x * x.saturating_sub(1) * x.saturating_sub(2) / 6
}

/// Non-induced per-vertex counts, one row of 11 per host vertex.
pub fn noninduced_orbits(g: &HostGraph) -> Vec<[u64; 11]> {
    let n = g.n();
    let tri = edge_triangles(g);
    let deg: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let s: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().map(|&u| deg[u as usize]).sum()).collect();
    let t: Vec<u64> = tri.iter().map(|r| r.iter().map(|&x| x as u64).sum::<u64>() / 2).collect();
    let tri_of = |v: usize, u: u32| -> u64 {
        let i = g.neighbors(v).binary_search(&u).expect("adjacent");
        tri[v][i] as u64
    };
    (0..n)
        .into_par_iter()
        .map_init(
            || (vec![0u32; n], Vec::<u32>::new(), vec![false; n]),
            |(cnt, touched, mark), v| {
                let d = deg[v];
                let mut r = [0u64; 11];
                let nb = g.neighbors(v);
                // claw
                r[8] = choose3(d);
                r[7] = nb.iter().map(|&u| choose2(deg[u as usize] - 1)).sum();
                // path: end v-b-c-x, middle a-v-c-x
                let sb: u64 = nb.iter().map(|&b| s[b as usize]).sum();
                r[9] = sb + d - s[v] - d * d - 2 * t[v];
                r[10] = nb.iter().map(|&c| (d - 1) * (deg[c as usize] - 1)).sum::<u64>() - 2 * t[v];
                // paw
                r[6] = t[v] * d.saturating_sub(2);
                r[5] = nb.iter().zip(&tri[v]).map(|(&u, &tu)| tu as u64 * deg[u as usize].saturating_sub(2)).sum();
                r[4] = nb.iter().zip(&tri[v]).map(|(&x, &tx)| t[x as usize] - tx as u64).sum();
                // square: v opposite w
                for &u in nb {
                    for &w in g.neighbors(u as usize) {
                        if w as usize != v {
                            if cnt[w as usize] == 0 {
                                touched.push(w);
                            }
                            cnt[w as usize] += 1;
                        }
                    }
                }
                r[3] = touched.iter().map(|&w| choose2(cnt[w as usize] as u64)).sum();
                for &w in touched.iter() {
                    cnt[w as usize] = 0;
                }
                touched.clear();
                // diamond: v on the chord, or v off the chord
                r[2] = tri[v].iter().map(|&x| choose2(x as u64)).sum();
                let mut off = 0u64;
                let mut k4 = 0u64;
                for &x in nb {
                    mark[x as usize] = true;
                }
                for &x in nb {
                    for &y in g.neighbors(x as usize) {
                        if y > x && mark[y as usize] {
                            off += tri_of(x as usize, y) - 1;
                            k4 += common_marked(g, x as usize, y as usize, mark);
                        }
                    }
                }
                for &x in nb {
                    mark[x as usize] = false;
                }
                r[1] = off;
                // each K4 at v is seen from all three of its triangles at v
                r[0] = k4 / 3;
                r
            },
        )
        .collect()
}

fn common_marked(g: &HostGraph, x: usize, y: usize, mark: &[bool]) -> u64 {
    let (a, b) = (g.neighbors(x), g.neighbors(y));
    let (mut i, mut j, mut c) = (0, 0, 0u64);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if mark[a[i] as usize] {
                    c += 1;
                }
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Induced per-vertex counts from non-induced ones.
pub fn induce(rows: &[[u64; 11]]) -> Vec<[u64; 11]> {
    let m = containment();
    rows.iter()
        .map(|non| {
            let mut ind = [0u64; 11];
            // denser graphlets come first, so every container of type a is already solved
            for a in 0..11 {
                let mut x = non[a] as i128;
                for b in 0..a {
                    x -= m[a][b] as i128 * ind[b] as i128;
                }
                assert!(x >= 0, "negative induced count for {}", type_name(a));
                ind[a] = x as u64;
            }
            ind
        })
        .collect()
}

/// Induced per-vertex type counts.
pub fn induced_orbits(g: &HostGraph) -> Vec<[u64; 11]> {
    induce(&noninduced_orbits(g))
}

/// Totals per graphlet in [`GRAPHLETS`] order from per-vertex type counts.
pub fn graphlet_totals(rows: &[[u64; 11]]) -> [u64; 6] {
    let mut per_type = [0u128; 11];
    for r in rows {
        for (t, &x) in r.iter().enumerate() {
            per_type[t] += x as u128;
        }
    }
    let mut out = [0u64; 6];
    for (i, name) in GRAPHLETS.iter().enumerate() {
        let sum: u128 = (0..11).filter(|&t| VERTEX_TYPES[t].0 == *name).map(|t| per_type[t]).sum();
        out[i] = (sum / 4) as u64;
    }
    out
}
