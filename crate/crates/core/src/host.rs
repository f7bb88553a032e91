// SPDX-License-Identifier: Apache-2.0

//! Large sparse simple graphs in compressed adjacency form.

use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph with sorted neighbour lists and optional vertex
/// weights.
#[derive(Clone, Debug, PartialEq)]
pub struct HostGraph {
    offsets: Vec<usize>,
    adj: Vec<u32>,
    weights: Option<Vec<f64>>,
}

impl HostGraph {
    pub fn empty(n: usize) -> Self {
        HostGraph { offsets: vec![0; n + 1], adj: Vec::new(), weights: None }
    }

    /// Builds from an arbitrary edge list: self-loops are dropped and
    /// duplicate or reversed pairs collapsed.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParam(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u != v {
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let mut deg = vec![0usize; n];
        for &(u, v) in &pairs {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut fill = offsets[..n].to_vec();
        let mut adj = vec![0u32; offsets[n]];
        for &(u, v) in &pairs {
            adj[fill[u as usize]] = v;
            fill[u as usize] += 1;
            adj[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for v in 0..n {
            adj[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok(HostGraph { offsets, adj, weights: None })
    }

    pub fn with_weights(mut self, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != self.n() {
            return Err(Error::InvalidParam(format!("{} weights for {} vertices", weights.len(), self.n())));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).iter().filter(move |&&v| v as usize > u).map(move |&v| (u as u32, v))
        })
    }

    /// Graph with vertex `v` renamed to `perm[v]`; weights follow.
    pub fn relabel(&self, perm: &[usize]) -> Result<HostGraph> {
        let edges: Vec<(u32, u32)> = self.edges().map(|(u, v)| (perm[u as usize] as u32, perm[v as usize] as u32)).collect();
        let g = HostGraph::from_edges(self.n(), &edges)?;
        match &self.weights {
            Some(w) => {
                let mut nw = vec![0.0; w.len()];
                for (v, &x) in w.iter().enumerate() {
                    nw[perm[v]] = x;
                }
                g.with_weights(nw)
            }
            None => Ok(g),
        }
    }

    /// Common neighbours of `u` and `v` by merge scan.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j, mut c) = (0, 0, 0);
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

    pub fn summary(&self) -> HostSummary {
        HostSummary { n: self.n(), m: self.m(), max_degree: (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HostSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_and_symmetric() {
        let g = HostGraph::from_edges(4, &[(0, 1), (1, 0), (2, 2), (1, 2), (3, 1)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[0, 2, 3]);
        assert!(g.has_edge(3, 1) && !g.has_edge(0, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (1, 3)]);
        assert_eq!(g.common_neighbors(0, 2), 1);
    }

    #[test]
    fn out_of_range() {
        assert!(HostGraph::from_edges(2, &[(0, 2)]).is_err());
    }
}
