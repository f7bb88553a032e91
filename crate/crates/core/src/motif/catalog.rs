// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::canon::{canonical_form, canonical_graph, CanonicalForm};
use super::graph::SmallGraph;
use crate::error::{Error, Result};

/// Largest `k` accepted by [`enumerate_connected`]; `2^(k choose 2)` labelled
/// graphs are scanned.
pub const MAX_ENUMERATE: usize = 7;

/// One representative (in canonical labelling) per isomorphism class of
/// connected graphs on `k` vertices, ordered by edge count and then by
/// canonical code.
pub fn enumerate_connected(k: usize) -> Result<Vec<SmallGraph>> {
    static CACHE: [OnceLock<Vec<SmallGraph>>; MAX_ENUMERATE + 1] = [const { OnceLock::new() }; MAX_ENUMERATE + 1];
    if !(1..=MAX_ENUMERATE).contains(&k) {
        return Err(Error::VertexCount { got: k, min: 1, max: MAX_ENUMERATE });
    }
    if let Some(c) = CACHE[k].get() {
        return Ok(c.clone());
    }
    let classes = scan_connected(k)?;
    Ok(CACHE[k].get_or_init(|| classes).clone())
}

fn scan_connected(k: usize) -> Result<Vec<SmallGraph>> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    let mut classes: BTreeMap<(usize, u64), SmallGraph> = BTreeMap::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if edges.len() + 1 < k {
            continue;
        }
        let g = SmallGraph::from_edges(k, &edges)?;
        if !g.is_connected() {
            continue;
        }
        let cf = canonical_form(&g);
        classes.entry((g.edge_count(), cf.code)).or_insert_with(|| canonical_graph(&g));
    }
    Ok(classes.into_values().collect())
}

/// Named motifs accepted wherever a motif is expected.
pub const ALIASES: &[(&str, &str)] = &[
    ("edge", "0-1"),
    ("wedge", "0-1,1-2"),
    ("triangle", "0-1,1-2,0-2"),
    ("claw", "0-1,0-2,0-3"),
    ("path", "0-1,1-2,2-3"),
    ("paw", "0-1,0-2,1-2,0-3"),
    ("square", "0-1,1-2,2-3,0-3"),
    ("diamond", "0-1,0-2,1-2,1-3,2-3"),
    ("k4", "0-1,0-2,0-3,1-2,1-3,2-3"),
    ("star5", "0-1,0-2,0-3,0-4"),
    ("path5", "0-1,1-2,2-3,3-4"),
    ("fork", "0-1,0-2,0-3,3-4"),
    ("cycle5", "0-1,1-2,2-3,3-4,0-4"),
    ("bull", "0-1,0-2,1-2,0-3,1-4"),
    ("cricket", "0-1,0-2,1-2,0-3,0-4"),
    ("banner", "0-1,1-2,2-3,0-3,0-4"),
    ("bowtie", "0-1,0-2,1-2,0-3,0-4,3-4"),
    ("house", "0-1,1-2,2-3,0-3,0-4,1-4"),
    ("kite", "0-1,0-2,1-2,1-3,2-3,3-4"),
    ("k23", "0-2,0-3,0-4,1-2,1-3,1-4"),
    ("gem", "0-1,0-2,0-3,0-4,1-2,2-3,3-4"),
    ("wheel4", "0-1,0-2,0-3,0-4,1-2,2-3,3-4,1-4"),
    ("k5e", "0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4"),
    ("k5", "0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4"),
];

/// Resolves an alias or an edge-list literal.
pub fn parse_motif(name: &str) -> Result<SmallGraph> {
    let key = name.trim().to_ascii_lowercase();
    if let Some((_, lit)) = ALIASES.iter().find(|(alias, _)| *alias == key) {
        return SmallGraph::parse_literal(lit);
    }
    if key.contains('-') {
        return SmallGraph::parse_literal(&key);
    }
    Err(Error::UnknownMotif(name.to_string()))
}

/// Alias of the isomorphism class of `g`, if it has one.
pub fn alias_of(g: &SmallGraph) -> Option<&'static str> {
    let cf: CanonicalForm = canonical_form(g);
    ALIASES.iter().find_map(|(name, lit)| {
        let h = SmallGraph::parse_literal(lit).ok()?;
        (canonical_form(&h) == cf).then_some(*name)
    })
}

/// Alias when known, otherwise the canonical edge literal.
pub fn display_name(g: &SmallGraph) -> String {
    alias_of(g).map(str::to_string).unwrap_or_else(|| canonical_graph(g).to_literal())
}
