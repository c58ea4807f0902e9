use super::{check_regular_witness, raw_density, RegularityError};
use crate::graph::{Graph, Partition, WeightedGraph};
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// The `(ε, d)`-partition graph: one vertex per class, weight `d(V_i, V_j)`
/// on pairs that are regular with density at least `d`, zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionGraph {
    pub w: WeightedGraph,
    pub eps: Rational,
    pub d: Rational,
    pub source: Partition,
    /// Class pairs rejected because the witness checker found them irregular.
    pub irregular_pairs: usize,
}

pub fn build_partition_graph(
    g: &Graph,
    p: &Partition,
    eps: &Rational,
    d: &Rational,
) -> Result<PartitionGraph, RegularityError> {
    let k = p.k();
    let mut weights = BTreeMap::new();
    let mut irregular_pairs = 0;
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (p.class(i), p.class(j));
            let verdict = check_regular_witness(g, a, b, eps)?;
            if !verdict.regular {
                irregular_pairs += 1;
                continue;
            }
            let density = raw_density(g, a, b);
            if density >= *d && !density.is_zero() {
                weights.insert((i, j), density);
            }
        }
    }
    let w = WeightedGraph::new(k, weights).expect("densities lie in [0, 1]");
    Ok(PartitionGraph { w, eps: eps.clone(), d: d.clone(), source: p.clone(), irregular_pairs })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtractError {
    #[error("weighted graph is not a conventional subgraph of the partition graph")]
    NotConventional,
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    SizeMismatch { partition: usize, graph: usize },
}

/// `G_{W'}`: the edges of `g` between classes `V_i`, `V_j` with `w'(v_i, v_j) > 0`.
/// Edges inside a class or touching `V_0` are dropped.
pub fn extract_subgraph(g: &Graph, pg: &PartitionGraph, w_prime: &WeightedGraph) -> Result<Graph, ExtractError> {
    if !w_prime.is_conventional_subgraph_of(&pg.w) {
        return Err(ExtractError::NotConventional);
    }
    extract_subgraph_unchecked(g, &pg.source, w_prime)
}

/// [`extract_subgraph`] without the conventionality check; `w_prime` must
/// live on the classes of `p`.
pub fn extract_subgraph_unchecked(g: &Graph, p: &Partition, w_prime: &WeightedGraph) -> Result<Graph, ExtractError> {
    if p.n() != g.n() {
        return Err(ExtractError::SizeMismatch { partition: p.n(), graph: g.n() });
    }
    if w_prime.n() != p.k() {
        return Err(ExtractError::NotConventional);
    }
    Ok(g.filter_edges(|u, v| match (p.class_of(u), p.class_of(v)) {
        (Some(i), Some(j)) if i != j => w_prime.weight_ref(i, j).is_some(),
        _ => false,
    }))
}
