// SPDX-License-Identifier: Apache-2.0

//! Exact motif (non-induced) and graphlet (induced) counts in host graphs.

mod backtrack;
pub mod orbit4;

use std::io::Write;
use std::sync::OnceLock;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use backtrack::{count_embeddings, for_each_embedding};

use crate::error::{Error, Result};
use crate::host::HostGraph;
use crate::hvmodel::stream_rng;
use crate::motif::{canonical_form, display_name, enumerate_connected, is_isomorphic, symmetry_info, SmallGraph};

/// Largest motif handled by [`count`].
pub const MAX_COUNT_VERTICES: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct CountResult {
    pub motif: SmallGraph,
    pub name: String,
    /// Vertex subsets carrying a copy (embeddings divided by automorphisms).
    pub copies: u64,
    pub induced: bool,
}

impl CountResult {
    fn new(h: &SmallGraph, copies: u64, induced: bool) -> Self {
        CountResult { motif: h.clone(), name: display_name(h), copies, induced }
    }
}

fn check_motif(h: &SmallGraph) -> Result<()> {
    if h.k() > MAX_COUNT_VERTICES {
        return Err(Error::Unsupported(format!("counting motifs on {} > {MAX_COUNT_VERTICES} vertices", h.k())));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Out-neighbours towards higher (degree, id) rank, each list sorted by id.
fn oriented(g: &HostGraph) -> Vec<Vec<u32>> {
    let rank = |v: usize| (g.degree(v), v);
    (0..g.n())
        .map(|u| g.neighbors(u).iter().copied().filter(|&v| rank(v as usize) > rank(u)).collect())
        .collect()
}

fn sorted_intersection(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut c) = (0, 0, 0u64);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Number of triangles, by intersecting degree-oriented neighbour lists.
pub fn triangle_count(g: &HostGraph) -> u64 {
    let out = oriented(g);
    (0..g.n())
        .into_par_iter()
        .map(|u| out[u].iter().map(|&v| sorted_intersection(&out[u], &out[v as usize])).sum::<u64>())
        .sum()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

fn is_star(h: &SmallGraph) -> bool {
    h.k() >= 3 && h.edge_count() == h.k() - 1 && (0..h.k()).any(|v| h.degree(v) == h.k() - 1)
}

/// Copies of `h` in `g`; `induced` also requires the non-edges of `h`.
pub fn count(g: &HostGraph, h: &SmallGraph, induced: bool) -> Result<CountResult> {
    check_motif(h)?;
    let k = h.k();
    let copies = match k {
        1 => g.n() as u64,
        2 => g.m() as u64,
        3 if h.edge_count() == 3 => triangle_count(g),
        3 => {
            let wedges: u64 = (0..g.n()).map(|v| binomial(g.degree(v) as u64, 2)).sum();
            if induced {
                wedges - 3 * triangle_count(g)
            } else {
                wedges
            }
        }
        _ if !induced && is_star(h) => (0..g.n()).map(|v| binomial(g.degree(v) as u64, k as u64 - 1)).sum(),
        4 => {
            let rows = if induced { orbit4::induced_orbits(g) } else { orbit4::noninduced_orbits(g) };
            let totals = orbit4::graphlet_totals(&rows);
            let i = orbit4::GRAPHLETS
                .iter()
                .position(|name| is_isomorphic(&crate::motif::parse_motif(name).unwrap(), h))
                .expect("connected 4-vertex graph");
            totals[i]
        }
        _ => count_embeddings(g, h, induced) / symmetry_info(h).automorphism_count,
    };
    Ok(CountResult::new(h, copies, induced))
}

/// Labelled-embedding count divided by automorphisms, without fast paths.
pub fn count_by_backtracking(g: &HostGraph, h: &SmallGraph, induced: bool) -> Result<CountResult> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(CountResult::new(h, count_embeddings(g, h, induced) / symmetry_info(h).automorphism_count, induced))
}

/// `m[i][j]`: copies of class `i` spanning the vertex set of class `j`, over
/// `enumerate_connected(k)` order.
pub fn containment_multiplicities(k: usize) -> Result<Vec<Vec<u64>>> {
    static CACHE: [OnceLock<Vec<Vec<u64>>>; MAX_COUNT_VERTICES + 1] = [const { OnceLock::new() }; MAX_COUNT_VERTICES + 1];
    if let Some(m) = CACHE.get(k).and_then(|c| c.get()) {
        return Ok(m.clone());
    }
    let m = spanning_multiplicities(k)?;
    if let Some(c) = CACHE.get(k) {
        let _ = c.set(m.clone());
    }
    Ok(m)
}

fn spanning_multiplicities(k: usize) -> Result<Vec<Vec<u64>>> {
    let classes = enumerate_connected(k)?;
    let codes: Vec<u64> = classes.iter().map(|c| canonical_form(c).code).collect();
    let mut m = vec![vec![0u64; classes.len()]; classes.len()];
    for (j, g) in classes.iter().enumerate() {
        let edges = g.edges();
        for mask in 1u64..(1 << edges.len()) {
            let sub: Vec<(usize, usize)> =
                edges.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let s = SmallGraph::from_edges(k, &sub)?;
            if s.is_connected() {
                let i = codes.iter().position(|&c| c == canonical_form(&s).code).expect("connected class");
                m[i][j] += 1;
            }
        }
    }
    Ok(m)
}

/// One result per connected class on `k` vertices, in `enumerate_connected`
/// order.
pub fn count_all(g: &HostGraph, k: usize, induced: bool) -> Result<Vec<CountResult>> {
    if !(3..=MAX_COUNT_VERTICES).contains(&k) {
        return Err(Error::VertexCount { got: k, min: 3, max: MAX_COUNT_VERTICES });
    }
    let classes = enumerate_connected(k)?;
    if k == 4 {
        let rows = if induced { orbit4::induced_orbits(g) } else { orbit4::noninduced_orbits(g) };
        let totals = orbit4::graphlet_totals(&rows);
        return Ok(classes
            .iter()
            .map(|h| {
                let i = orbit4::GRAPHLETS
                    .iter()
                    .position(|name| is_isomorphic(&crate::motif::parse_motif(name).unwrap(), h))
                    .expect("connected 4-vertex graph");
                CountResult::new(h, totals[i], induced)
            })
            .collect());
    }
    let ind: Vec<u64> = classes
        .iter()
        .map(|h| count(g, h, true).map(|r| r.copies))
        .collect::<Result<_>>()?;
    if induced {
        return Ok(classes.iter().zip(ind).map(|(h, c)| CountResult::new(h, c, true)).collect());
    }
    // each copy sits on exactly one induced class spanning its vertex set
    let m = containment_multiplicities(k)?;
    Ok(classes
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let c: u64 = (0..classes.len()).map(|j| m[i][j] * ind[j]).sum();
            CountResult::new(h, c, false)
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitStat {
    pub orbit: usize,
    pub vertices: Vec<usize>,
    /// 4-vertex graphlet vertex type (`t1`..`t11`) when applicable.
    pub vertex_type: Option<String>,
    pub occurrences: u64,
    pub mean_degree: f64,
    /// Mean of `ln(deg)/ln(n)`.
    pub log_mean: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitDegreeStats {
    pub motif: SmallGraph,
    pub name: String,
    pub induced: bool,
    pub copies: u64,
    /// Means come from a uniform subsample of embeddings.
    pub estimated: bool,
    pub orbits: Vec<OrbitStat>,
}

/// Mean host degree of the vertices playing each orbit of `h`. Exact for
/// 4-vertex motifs; other sizes enumerate embeddings and fall back to a
/// reservoir of `sample_cap` embeddings when there are more.
pub fn orbit_degree_stats(
    g: &HostGraph,
    h: &SmallGraph,
    induced: bool,
    sample_cap: usize,
    seed: u64,
) -> Result<OrbitDegreeStats> {
    check_motif(h)?;
    let sym = symmetry_info(h);
    let ln_n = (g.n().max(2) as f64).ln();
    let copies = count(g, h, induced)?.copies;
    let mut orbits = Vec::new();
    let mut estimated = false;
    if h.k() == 4 {
        let rows = if induced { orbit4::induced_orbits(g) } else { orbit4::noninduced_orbits(g) };
        for (o, verts) in sym.orbits.iter().enumerate() {
            let t = orbit4::vertex_type(h, verts[0]);
            let (mut c, mut sd, mut sl) = (0u128, 0f64, 0f64);
            for (v, r) in rows.iter().enumerate() {
                if r[t] > 0 {
                    let d = g.degree(v) as f64;
                    c += r[t] as u128;
                    sd += r[t] as f64 * d;
                    sl += r[t] as f64 * d.ln();
                }
            }
            orbits.push(orbit_stat(o, verts, Some(orbit4::type_name(t)), c as u64, sd, sl, ln_n));
        }
    } else {
        let mut rng = stream_rng(seed, 3 << 40);
        let mut seen = 0usize;
        let mut reservoir: Vec<Vec<u32>> = Vec::new();
        for_each_embedding(g, h, induced, |map| {
            seen += 1;
            if reservoir.len() < sample_cap {
                reservoir.push(map.to_vec());
            } else {
                let j = rng.gen_range(0..seen);
                if j < sample_cap {
                    reservoir[j] = map.to_vec();
                }
            }
        });
        estimated = seen > sample_cap;
        for (o, verts) in sym.orbits.iter().enumerate() {
            let (mut c, mut sd, mut sl) = (0u64, 0f64, 0f64);
            for map in &reservoir {
                for &i in verts {
                    let d = g.degree(map[i] as usize) as f64;
                    c += 1;
                    sd += d;
                    sl += d.ln();
                }
            }
            let mut s = orbit_stat(o, verts, None, c, sd, sl, ln_n);
            s.occurrences = copies * verts.len() as u64;
            orbits.push(s);
        }
    }
    Ok(OrbitDegreeStats { motif: h.clone(), name: display_name(h), induced, copies, estimated, orbits })
}

fn orbit_stat(o: usize, verts: &[usize], t: Option<String>, c: u64, sd: f64, sl: f64, ln_n: f64) -> OrbitStat {
    let (mean_degree, log_mean) = if c == 0 { (0.0, 0.0) } else { (sd / c as f64, sl / c as f64 / ln_n) };
    OrbitStat {
        orbit: o,
        vertices: verts.to_vec(),
        vertex_type: t,
        occurrences: c,
        mean_degree,
        log_mean,
    }
}

/// CSV with header `motif,induced,copies`.
pub fn write_counts_csv<W: Write>(results: &[CountResult], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["motif", "induced", "copies"]).map_err(csv_err)?;
    for r in results {
        w.write_record([r.name.clone(), r.induced.to_string(), r.copies.to_string()]).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// CSV with header `motif,orbit,occurrences,mean_degree,log_mean`.
pub fn write_orbit_csv<W: Write>(stats: &[OrbitDegreeStats], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["motif", "orbit", "occurrences", "mean_degree", "log_mean"]).map_err(csv_err)?;
    for s in stats {
        for o in &s.orbits {
            let orbit = o.vertex_type.clone().unwrap_or_else(|| o.orbit.to_string());
            w.write_record([
                s.name.clone(),
                orbit,
                o.occurrences.to_string(),
                o.mean_degree.to_string(),
                o.log_mean.to_string(),
            ])
            .map_err(csv_err)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
