//! Simple undirected graphs, weighted graphs and vertex partitions.

mod generators;
mod io;
mod partition;
mod weighted;

pub use generators::{
    blowup, complete, complete_multipartite, cycle, edgeless, matching, path, petersen, random_graph, star,
};
pub(crate) use io::serde_graph;
pub use io::{parse_graph, parse_weighted_graph, write_graph, write_weighted_graph, ParseError, ParseErrorKind};
pub use partition::{Partition, PartitionError};
pub use weighted::{WeightedGraph, WeightedGraphError};

use std::fmt;

/// An unordered vertex pair stored as `(min, max)`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { words, bits: vec![0; words * n] }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.bits[u * self.words + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted as `(u, v)` with `u < v`, alongside sorted adjacency
/// lists and a bit matrix for constant-time adjacency queries. Values are
/// immutable once built; the `with_*`/`without_*` helpers return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    matrix: BitMatrix,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates (in either orientation) are
    /// merged; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unchecked(n, list))
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut matrix = BitMatrix::new(n);
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            matrix.set(u, v, true);
            matrix.set(v, u, true);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, matrix }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix.get(u, v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Position of `(u, v)` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    /// Subgraph keeping the edges whose mask entry is true (same vertex set).
    pub fn edge_subgraph(&self, keep: &[bool]) -> Graph {
        assert_eq!(keep.len(), self.edges.len());
        let edges = self.edges.iter().zip(keep).filter_map(|(&e, &k)| k.then_some(e)).collect();
        Self::from_sorted_unchecked(self.n, edges)
    }

    /// Subgraph keeping the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        Self::from_sorted_unchecked(self.n, edges)
    }

    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut gone: Vec<Edge> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        gone.sort_unstable();
        self.filter_edges(|u, v| gone.binary_search(&(u, v)).is_err())
    }

    /// Is every edge of `self` an edge of `other` (same vertex count)?
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// Number of edges in exactly one of the two graphs.
    pub fn symmetric_difference_size(&self, other: &Graph) -> usize {
        let only_self = self.edges.iter().filter(|&&(u, v)| !other.has_edge(u, v)).count();
        let only_other = other.edges.iter().filter(|&&(u, v)| !self.has_edge(u, v)).count();
        only_self + only_other
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced relabelling is valid")
    }

    /// Drops isolated vertices; returns the compacted graph and, for each new
    /// vertex, its index in `self`.
    pub fn strip_isolated(&self) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        (self.induced(&kept), kept)
    }

    /// Number of edges between two vertex sets (pairs counted once per ordered
    /// choice `a in A`, `b in B`).
    pub fn edges_between(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter().map(|&u| b.iter().filter(|&&v| self.matrix.get(u, v)).count()).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_and_orients_edges() {
        let g = Graph::from_edges(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn adjacency_beyond_one_word() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert!(!g.has_edge(0, 65));
    }

    #[test]
    fn subgraph_helpers() {
        let k4 = complete(4);
        let keep: Vec<bool> = (0..6).map(|i| i % 2 == 0).collect();
        let h = k4.edge_subgraph(&keep);
        assert_eq!(h.edge_count(), 3);
        assert!(h.is_subgraph_of(&k4));
        assert_eq!(h.symmetric_difference_size(&k4), 3);
        let (stripped, map) = Graph::from_edges(5, [(1, 3)]).unwrap().strip_isolated();
        assert_eq!(stripped.n(), 2);
        assert_eq!(map, vec![1, 3]);
    }
}
