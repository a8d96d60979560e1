//! Simple undirected graphs on at most 64 labeled vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so a vertex subset is a
//! single machine word and subset scans need no allocation.

mod families;
mod io;

use std::fmt;

use thiserror::Error;

use crate::rational::{rat, Rational};

pub use families::{
    all_graphs, all_trees, connected_graphs, graph_count, named_graph, random_connected_graph, random_sample,
    tree_count, Family, GraphIter, TreeIter, MAX_ENUMERATED_GRAPH_ORDER, MAX_TREE_ORDER,
};
pub use io::{parse_edge_list, parse_graph6, to_graph6};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs between 1 and {MAX_VERTICES} vertices, got {0}")]
    BadOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph6 encoding supports at most 62 vertices, got {0}")]
    Graph6Size(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("{family} needs size at least {min}, got {size}")]
    BelowMinimum { family: &'static str, size: usize, min: usize },
    #[error("edge probability must lie in (0, 1] with 64-bit numerator and denominator")]
    BadProbability,
    #[error("no connected sample after {0} attempts")]
    RandomGiveUp(u32),
    #[error("enumeration supports orders {min}..={max}, got {n}")]
    EnumerationRange { n: usize, min: usize, max: usize },
}

/// Mask with the low `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A subset of the vertices `0..universe`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn new(bits: u64, universe: usize) -> Result<Self, GraphError> {
        if universe == 0 || universe > MAX_VERTICES {
            return Err(GraphError::BadOrder(universe));
        }
        if bits & !low_mask(universe) != 0 {
            let vertex = 63 - (bits & !low_mask(universe)).leading_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, n: universe });
        }
        Ok(Self { bits, universe })
    }

    pub fn from_vertices(vertices: &[usize], universe: usize) -> Result<Self, GraphError> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= universe.min(MAX_VERTICES) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: universe });
            }
            bits |= 1 << v;
        }
        Self::new(bits, universe)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.bits >> v & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self { bits: !self.bits & low_mask(self.universe), universe: self.universe }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Minimum, maximum and exact average degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub avg: Rational,
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(Self { n, m: 0, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency masks, validating symmetry.
    pub fn from_adjacency(adj: &[u64]) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut g = Self::empty(n)?;
        for (u, &row) in adj.iter().enumerate() {
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            if row & !low_mask(n) != 0 {
                let vertex = 63 - (row & !low_mask(n)).leading_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(GraphError::Parse {
                        line: 0,
                        msg: format!("adjacency not symmetric at ({u}, {v})"),
                    });
                }
            }
        }
        g.adj[..n].copy_from_slice(adj);
        g.m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if self.adj[u] >> v & 1 == 0 {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.m += 1;
        }
    }

    #[inline]
    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        if self.adj[u] >> v & 1 == 1 {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.m -= 1;
        }
    }

    /// Resets to the edgeless graph on `n` vertices without reallocating.
    #[inline]
    pub(crate) fn clear(&mut self, n: usize) {
        self.n = n;
        self.m = 0;
        self.adj[..n].fill(0);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats {
            min: self.min_degree(),
            max: self.max_degree(),
            avg: rat(2 * self.m as i64, self.n as i64),
        }
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    pub fn pendant_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    /// Whether the subgraph induced by `within` is connected.
    pub fn is_connected_within(&self, within: VertexSet) -> Result<bool, GraphError> {
        if within.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if within.universe() != self.n {
            return Err(GraphError::VertexOutOfRange { vertex: within.universe(), n: self.n });
        }
        Ok(self.induces_connected(within.bits()))
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertex_mask())
    }

    /// Masked BFS. `within` must be nonempty.
    #[inline]
    pub(crate) fn induces_connected(&self, within: u64) -> bool {
        debug_assert!(within != 0);
        let start = within & within.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == within
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n && self.is_connected()
    }

    /// BFS eccentricity of `v`; `None` if the graph is disconnected.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let all = self.vertex_mask();
        let mut seen = 1u64 << v;
        let mut layer = seen;
        let mut depth = 0;
        loop {
            let mut next = 0u64;
            for u in bits(layer) {
                next |= self.adj[u];
            }
            next &= !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            layer = next;
            depth += 1;
        }
        (seen == all).then_some(depth)
    }

    /// Longest shortest-path distance; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.n).map(|v| self.eccentricity(v)).try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    /// `u ~ v` in the result iff `u != v` and `u !~ v` here.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g.m = self.n * (self.n - 1) / 2 - self.m;
        g
    }

    /// Vertices of `other` are shifted by `self.n()`; no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        g.m = self.m + other.m;
        Ok(g)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g.m += self.n * other.n;
        Ok(g)
    }

    /// Adds `k` new vertices `n..n+k`, each adjacent only to `host`.
    pub fn attach_pendants(&self, host: usize, k: usize) -> Result<Graph, GraphError> {
        if host >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: host, n: self.n });
        }
        let n = self.n + k;
        if n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut g = self.clone();
        g.n = n;
        for v in self.n..n {
            g.add_edge_unchecked(host, v);
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(GraphError::BadOrder(perm.len()));
        }
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(GraphError::VertexOutOfRange { vertex: p, n: self.n });
            }
            seen |= 1 << p;
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn invariants_hold_after_construction() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4), (1, 0)]).unwrap();
        assert_eq!(g.m(), 4);
        for u in 0..5 {
            assert_eq!(g.neighbors(u) >> u & 1, 0);
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        let popcounts: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(popcounts, 2 * g.m());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::empty(0), Err(GraphError::BadOrder(0)));
        assert_eq!(Graph::empty(65), Err(GraphError::BadOrder(65)));
        assert!(Graph::from_adjacency(&[0b10, 0]).is_err());
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::from_edges(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        let c5 = Graph::from_edges(5, (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        assert_eq!(c5.complement().complement(), c5);
        let cc = c5.complement();
        assert_eq!(cc.m(), 5);
        assert_eq!(cc.regular_degree(), Some(2));
        // connected and 2-regular on 5 vertices means a 5-cycle
        assert!(cc.is_connected());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1).unwrap();
        let star = k1.join(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(star.m(), 5);
        assert_eq!(star.degree(0), 5);
        assert_eq!(star.pendant_count(), 5);

        let k2 = path(2);
        let k4 = k2.join(&k2).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.n(), 4);

        // {v} joined with P_2 + K_1: the star-plus-edge on four vertices
        let h = path(2).disjoint_union(&k1).unwrap();
        assert!(!h.is_connected());
        let g = k1.join(&h).unwrap();
        assert_eq!(g.m(), 1 + 3);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degrees(), vec![3, 2, 2, 1]);
        assert!(Graph::empty(40).unwrap().join(&Graph::empty(25).unwrap()).is_err());
    }

    #[test]
    fn attach_pendant_examples() {
        let s5 = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let s6 = Graph::from_edges(6, (1..6).map(|v| (0, v))).unwrap();
        assert_eq!(s5.attach_pendants(0, 1).unwrap(), s6);
        let s4 = Graph::empty(1).unwrap().attach_pendants(0, 3).unwrap();
        assert_eq!(s4, Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        assert_eq!(path(2).attach_pendants(1, 1).unwrap(), path(3));
        assert!(path(2).attach_pendants(2, 1).is_err());
    }

    #[test]
    fn degree_stats_examples() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(k5.degree_stats(), DegreeStats { min: 4, max: 4, avg: rat(4, 1) });
        let s5 = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(s5.degree_stats(), DegreeStats { min: 1, max: 4, avg: rat(8, 5) });
        assert_eq!(path(4).degree_stats(), DegreeStats { min: 1, max: 2, avg: rat(3, 2) });
    }

    #[test]
    fn connectivity_within() {
        let p4 = path(4);
        let set = |vs: &[usize]| VertexSet::from_vertices(vs, 4).unwrap();
        assert!(p4.is_connected_within(set(&[0, 1])).unwrap());
        assert!(!p4.is_connected_within(set(&[0, 3])).unwrap());
        assert_eq!(p4.is_connected_within(set(&[])), Err(GraphError::EmptyVertexSet));
        let k5 = Graph::empty(5).unwrap().complement();
        for mask in 1..32u64 {
            assert!(k5.is_connected_within(VertexSet::new(mask, 5).unwrap()).unwrap());
        }
    }

    #[test]
    fn diameter_and_trees() {
        assert_eq!(path(6).diameter(), Some(5));
        assert!(path(6).is_tree());
        assert_eq!(Graph::empty(2).unwrap().diameter(), None);
        assert_eq!(Graph::empty(1).unwrap().diameter(), Some(0));
    }

    #[test]
    fn vertex_set_bounds() {
        assert!(VertexSet::new(0b1000, 3).is_err());
        let s = VertexSet::new(0b101, 3).unwrap();
        assert_eq!(s.complement().bits(), 0b010);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(VertexSet::new(u64::MAX, 64).unwrap().len(), 64);
    }
}
