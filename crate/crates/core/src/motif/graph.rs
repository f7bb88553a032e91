// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported motif. Gluing two five-vertex motifs yields nine
/// vertices, so the bound sits above that.
pub const MAX_VERTICES: usize = 10;

/// Simple undirected graph on `k ≤ MAX_VERTICES` labelled vertices, stored as
/// one neighbour bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    k: usize,
    rows: [u16; MAX_VERTICES],
}

impl SmallGraph {
    pub fn empty(k: usize) -> Result<Self> {
        if k == 0 || k > MAX_VERTICES {
            return Err(Error::VertexCount { got: k, min: 1, max: MAX_VERTICES });
        }
        Ok(SmallGraph { k, rows: [0; MAX_VERTICES] })
    }

    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(k)?;
        for &(u, v) in edges {
            if u >= k || v >= k {
                return Err(Error::Parse(format!("edge {u}-{v} out of range for {k} vertices")));
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Parses an edge-list literal such as `"0-1,1-2,0-2"`. The vertex count
    /// is one more than the largest label.
    pub fn parse_literal(s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge token {tok:?}")))?;
            let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in {tok:?}")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in {tok:?}")))?;
            edges.push((a, b));
        }
        if edges.is_empty() {
            return Err(Error::Parse("empty edge list".into()));
        }
        let k = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap() + 1;
        Self::from_edges(k, &edges)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.k).filter(move |&u| self.has_edge(v, u))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.k).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.k).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.k {
            for v in u + 1..self.k {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.k {
            for v in u + 1..self.k {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let full: u16 = if self.k == 16 { u16::MAX } else { (1u16 << self.k) - 1 };
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.rows[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == full
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SmallGraph {
        debug_assert_eq!(perm.len(), self.k);
        let mut g = SmallGraph { k: self.k, rows: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on `verts` (in the given order).
    pub fn induced(&self, verts: &[usize]) -> Result<SmallGraph> {
        let mut g = SmallGraph::empty(verts.len())?;
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Upper-triangle adjacency bits, row-major: bit `index(u,v)` set iff
    /// `u ~ v`. The first pair occupies the most significant used bit so that
    /// numeric order equals lexicographic order on the bit string.
    pub fn upper_code(&self) -> u64 {
        let mut code = 0u64;
        for u in 0..self.k {
            for v in u + 1..self.k {
                code = code << 1 | self.has_edge(u, v) as u64;
            }
        }
        code
    }

    /// The `"0-1,1-2"` literal form.
    pub fn to_literal(&self) -> String {
        self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}; {})", self.k, self.to_literal())
    }
}

impl fmt::Display for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl Serialize for SmallGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        let g = SmallGraph::parse_literal("0-1, 1-2,0-2").unwrap();
        assert_eq!(g.k(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.to_literal(), "0-1,0-2,1-2");
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(SmallGraph::parse_literal("").is_err());
        assert!(SmallGraph::parse_literal("0-0").is_err());
        assert!(SmallGraph::parse_literal("0-x").is_err());
        assert!(SmallGraph::parse_literal("0-10").is_err());
        assert!(SmallGraph::empty(0).is_err());
    }

    #[test]
    fn connectivity() {
        let g = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let single = SmallGraph::empty(1).unwrap();
        assert!(single.is_connected());
    }
}
