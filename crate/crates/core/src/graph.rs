//! Exact small-graph representation with bitset adjacency rows.
//!
//! Vertices are `0..n`. Adjacency is symmetric and irreflexive; every
//! mutator maintains both invariants.

use crate::error::{GraphError, Result};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, adj: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.add_edge(u, (u + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for u in 0..5 {
            g.add_edge(u, (u + 1) % 5); // outer C5
            g.add_edge(u, u + 5); // spokes
            g.add_edge(u + 5, (u + 2) % 5 + 5); // inner pentagram
        }
        g
    }

    /// The Grötzsch graph: triangle-free with chromatic number 4.
    /// Vertex 10 is the hub, 0..5 the outer C5, 5..10 the middle layer.
    pub fn grotzsch() -> Self {
        let mut g = Graph::empty(11);
        for u in 0..5 {
            g.add_edge(u, (u + 1) % 5);
            g.add_edge(5 + u, (u + 1) % 5);
            g.add_edge(5 + u, (u + 4) % 5);
            g.add_edge(5 + u, 10);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut g = Graph::empty(n);
        let mut start = vec![0usize];
        for &p in parts {
            start.push(start.last().unwrap() + p);
        }
        for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                for u in start[i]..start[i + 1] {
                    for v in start[j]..start[j + 1] {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    }

    /// Turán graph T_r(n): complete r-partite with parts as equal as possible.
    /// The first `n mod r` parts get the extra vertex.
    pub fn turan(r: usize, n: usize) -> Self {
        assert!(r >= 1, "turan graph needs r >= 1");
        let q = n / r;
        let rem = n % r;
        let parts: Vec<usize> = (0..r).map(|i| q + usize::from(i < rem)).collect();
        Graph::complete_multipartite(&parts)
    }

    /// Part sizes of T_r(n) in the order used by [`Graph::turan`].
    pub fn turan_part_sizes(r: usize, n: usize) -> Vec<usize> {
        let q = n / r;
        let rem = n % r;
        (0..r).map(|i| q + usize::from(i < rem)).collect()
    }

    /// Closed-form edge count of T_r(n): (n^2 - sum s_i^2) / 2.
    pub fn turan_edge_count(r: usize, n: usize) -> usize {
        let sq: usize = Graph::turan_part_sizes(r, n).iter().map(|s| s * s).sum();
        (n * n - sq) / 2
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let deg_sum: usize = (0..self.n).map(|v| self.degree(v)).sum();
        deg_sum / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / 64] >> (u % 64) & 1 == 1)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Replace the adjacency row of `u` with the row of `v`, updating columns.
    /// Afterwards `u` is a twin of `v`. Requires `u` and `v` non-adjacent.
    pub(crate) fn copy_neighborhood(&mut self, u: usize, v: usize) {
        debug_assert!(!self.has_edge(u, v));
        let old: Vec<usize> = self.neighbors(u).collect();
        for w in old {
            self.remove_edge(u, w);
        }
        let new: Vec<usize> = self.neighbors(v).collect();
        for w in new {
            self.add_edge(u, w);
        }
    }

    /// Induced subgraph on `s`, relabeled 0..|s| preserving the order of `s`.
    pub fn induced(&self, s: &[usize]) -> Result<Graph> {
        for &v in s {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
        }
        let mut g = Graph::empty(s.len());
        for (i, &u) in s.iter().enumerate() {
            for (j, &v) in s.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by all vertices except `v`.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep).unwrap()
    }

    /// Subgraph induced by all vertices not in `s`.
    pub fn delete_vertices(&self, s: &[usize]) -> Graph {
        let mut drop = vec![false; self.n];
        for &v in s {
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| !drop[u]).collect();
        self.induced(&keep).unwrap()
    }

    /// Join: disjoint union plus all edges between the two vertex sets.
    /// Vertices of `self` keep their labels; vertices of `other` are shifted by `self.n`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// Labeled partition of (a subset of) the vertex set into named roles.
#[derive(Clone, Debug, Default)]
pub struct RolePartition {
    roles: BTreeMap<String, Vec<usize>>,
}

impl RolePartition {
    pub fn new() -> Self {
        RolePartition { roles: BTreeMap::new() }
    }

    /// Adds a role. Fails if the role overlaps an existing one or references
    /// a vertex >= n.
    pub fn add_role(&mut self, name: &str, mut vertices: Vec<usize>, n: usize) -> Result<()> {
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            for existing in self.roles.values() {
                if existing.binary_search(&v).is_ok() {
                    return Err(GraphError::OverlappingSets(v));
                }
            }
        }
        self.roles.insert(name.to_string(), vertices);
        Ok(())
    }

    pub fn role(&self, name: &str) -> Option<&[usize]> {
        self.roles.get(name).map(|v| v.as_slice())
    }

    pub fn roles(&self) -> impl Iterator<Item = (&str, &[usize])> {
        self.roles.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }
}

/// Every labeled simple graph on `n` vertices, in edge-mask order.
/// Edge bit order: (0,1), (0,2), (1,2), (0,3), ... (column-major upper triangle).
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

pub const ENUMERATION_CAP: usize = 7;

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > ENUMERATION_CAP {
        return Err(GraphError::TooLarge { n, cap: ENUMERATION_CAP });
    }
    Ok(labeled_graphs_range(n, 0, 1u64 << (n * n.saturating_sub(1) / 2)))
}

/// The sub-range [from, to) of the full labeled enumeration, for sharding.
pub fn labeled_graphs_range(n: usize, from: u64, to: u64) -> LabeledGraphs {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    LabeledGraphs { n, pairs, next: from, total: to }
}

pub fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let g = graph_from_edge_mask(self.n, &self.pairs, self.next);
        self.next += 1;
        Some(g)
    }
}

/// Brute-force isomorphism test for small graphs (n <= ~10).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let n = g.n();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if ok {
                map[v] = w;
                used[w] = true;
                if extend(g, h, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    extend(g, h, 0, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_k3() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn from_edges_c5() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn from_edges_dedup() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange(3, 3)));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn turan_examples() {
        let g = Graph::turan(2, 4);
        assert_eq!(g.edge_count(), 4); // K_{2,2}
        let g = Graph::turan(3, 6);
        assert_eq!(g.edge_count(), 12); // K_{2,2,2}, (36-12)/2
        let g = Graph::turan(1, 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn turan_closed_form() {
        for n in 0..=30usize {
            for r in 1..=n.max(1) {
                let g = Graph::turan(r, n);
                assert_eq!(g.edge_count(), Graph::turan_edge_count(r, n), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn join_edge_identity() {
        let e2 = Graph::empty(2);
        assert_eq!(e2.join(&e2).edge_count(), 4); // K_{2,2}
        let k2 = Graph::complete(2);
        assert_eq!(k2.join(&k2).edge_count(), 6); // K_4
        let j = Graph::turan(1, 3).join(&Graph::turan(2, 4));
        assert_eq!(j.edge_count(), 0 + 4 + 12);
    }

    #[test]
    fn induced_examples() {
        let c5 = Graph::cycle(5);
        let p3 = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(c5.induced(&all).unwrap(), c5);
        let k5 = Graph::complete(5);
        assert_eq!(k5.induced(&[1, 3, 4]).unwrap(), Graph::complete(3));
        assert!(c5.induced(&[0, 9]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn role_partition_disjoint() {
        let mut p = RolePartition::new();
        p.add_role("X", vec![0, 1], 5).unwrap();
        assert_eq!(p.add_role("Y", vec![1, 2], 5), Err(GraphError::OverlappingSets(1)));
        assert_eq!(p.add_role("Z", vec![7], 5), Err(GraphError::VertexOutOfRange(7, 5)));
    }

    #[test]
    fn isomorphism_small() {
        let c5 = Graph::cycle(5);
        let relabeled = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&c5, &relabeled));
        let p5 = Graph::path(5);
        assert!(!are_isomorphic(&c5, &p5));
    }
}
