//! Polynomial exact cases: maximum matching, `ex(G, kK2, K_{1,2})` and
//! `ex(G, K2, K_{1,t+1})` through a matching gadget.

mod blossom;

use crate::graph::{Edge, Graph};
use crate::oracle::OracleResult;

/// Pairwise disjoint edges of a host graph, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn from_mates(mates: &[Option<usize>]) -> Self {
        let edges = mates.iter().enumerate().filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v))).collect();
        Matching { edges }
    }

    /// Whether the edges are in `g` and share no endpoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.edges.iter().all(|&(u, v)| {
            let fresh = g.has_edge(u, v) && !seen[u] && !seen[v];
            seen[u] = true;
            seen[v] = true;
            fresh
        })
    }
}

/// A maximum-cardinality matching.
pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_mates(&blossom::maximum_mates(g))
}

/// `C(ν(G), k)`: copies of `kK2` in a maximum matching, which is
/// `ex(G, kK2, K_{1,2})` since `K_{1,2}`-free graphs are matchings.
pub fn ex_matchings(g: &Graph, k: usize) -> u64 {
    num_integer::binomial(max_matching(g).len() as u64, k as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("vertex {0} is isolated; strip isolated vertices before building the gadget")]
    IsolatedVertex(usize),
    #[error("degree bound must be at least 1")]
    ZeroDegreeBound,
}

/// Matching gadget for `ex(G, K2, K_{1,t+1})`.
///
/// Each vertex `v` becomes an independent set `V(v)` with one slot per incident
/// edge; an edge `uv` joins `u`'s slot for `v` to `v`'s slot for `u`. When
/// `d(v) > t`, a set `U(v)` of `d(v) - t` vertices is fully joined to `V(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteGadget {
    pub host: Graph,
    pub v_map: Vec<Vec<usize>>,
    pub u_map: Vec<Vec<usize>>,
    /// Each original edge with its gadget edge.
    pub edge_map: Vec<(Edge, Edge)>,
}

pub fn build_tutte_gadget(g: &Graph, t: usize) -> Result<TutteGadget, GadgetError> {
    if t == 0 {
        return Err(GadgetError::ZeroDegreeBound);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(GadgetError::IsolatedVertex(v));
    }
    let mut next = 0;
    let mut v_map = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        v_map.push((next..next + g.degree(v)).collect::<Vec<_>>());
        next += g.degree(v);
    }
    let mut u_map = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let extra = g.degree(v).saturating_sub(t);
        u_map.push((next..next + extra).collect::<Vec<_>>());
        next += extra;
    }
    let slot = |v: usize, w: usize| {
        let i = g.neighbors(v).binary_search(&w).expect("adjacent");
        v_map[v][i]
    };
    let mut edges = Vec::new();
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        let e = (slot(u, v), slot(v, u));
        edges.push(e);
        edge_map.push(((u, v), (e.0.min(e.1), e.0.max(e.1))));
    }
    for v in 0..g.n() {
        for &a in &u_map[v] {
            for &b in &v_map[v] {
                edges.push((a, b));
            }
        }
    }
    let host = Graph::from_edges(next, edges).expect("gadget edges are valid");
    Ok(TutteGadget { host, v_map, u_map, edge_map })
}

impl TutteGadget {
    /// Rewires a maximum matching so that every `U(v)` vertex is matched,
    /// without changing its size. Unmatched `w` in `U(v)` takes the
    /// smallest slot of `V(v)` not already matched into `U(v)`, evicting that
    /// slot's previous partner.
    pub fn saturate(&self, mates: &mut [Option<usize>]) {
        for (v, us) in self.u_map.iter().enumerate() {
            for &w in us {
                if mates[w].is_some() {
                    continue;
                }
                let slot = self.v_map[v]
                    .iter()
                    .copied()
                    .find(|&x| mates[x].is_none_or(|y| !us.contains(&y)))
                    .expect("|U(v)| < |V(v)| leaves a slot outside U(v)");
                if let Some(old) = mates[slot] {
                    mates[old] = None;
                }
                mates[slot] = Some(w);
                mates[w] = Some(slot);
            }
        }
    }

    pub fn is_saturated(&self, mates: &[Option<usize>]) -> bool {
        self.u_map.iter().flatten().all(|&w| mates[w].is_some())
    }
}

/// `ex(G, K2, K_{1,t+1})`: the most edges in a subgraph of maximum degree at
/// most `t`, with such a subgraph as witness.
pub fn max_edges_bounded_degree(g: &Graph, t: usize) -> Result<OracleResult<u64, Graph>, GadgetError> {
    if t == 0 {
        return Err(GadgetError::ZeroDegreeBound);
    }
    let (core, labels) = g.strip_isolated();
    let gadget = build_tutte_gadget(&core, t)?;
    let mut mates = blossom::maximum_mates(&gadget.host);
    let size = mates.iter().flatten().count() / 2;
    gadget.saturate(&mut mates);
    debug_assert!(gadget.is_saturated(&mates));
    debug_assert_eq!(mates.iter().flatten().count() / 2, size);
    let kept: Vec<Edge> = gadget
        .edge_map
        .iter()
        .filter(|(_, (a, b))| mates[*a] == Some(*b))
        .map(|&((u, v), _)| (labels[u], labels[v]))
        .collect();
    let witness = Graph::from_edges(g.n(), kept).expect("edges of g");
    let absorbed: usize = gadget.u_map.iter().map(Vec::len).sum();
    debug_assert_eq!(witness.edge_count(), size - absorbed);
    Ok(OracleResult { value: witness.edge_count() as u64, witness, nodes_explored: 0 })
}
