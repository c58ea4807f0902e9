use super::{Edge, Graph};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightedGraphError {
    #[error("weight on {0:?} is outside [0, 1]")]
    WeightOutOfRange(Edge),
    #[error("pair {0:?} is a loop or out of range")]
    BadPair(Edge),
}

/// Weight function on the pairs of `0..n`. Pairs of weight zero are simply
/// absent, so the stored map is exactly the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    weights: BTreeMap<Edge, Rational>,
}

impl WeightedGraph {
    pub fn new(n: usize, weights: BTreeMap<Edge, Rational>) -> Result<Self, WeightedGraphError> {
        let mut clean = BTreeMap::new();
        for ((u, v), w) in weights {
            if u == v || u >= n || v >= n {
                return Err(WeightedGraphError::BadPair((u, v)));
            }
            if w < Rational::zero() || w > Rational::one() {
                return Err(WeightedGraphError::WeightOutOfRange((u, v)));
            }
            if !w.is_zero() {
                clean.insert((u.min(v), u.max(v)), w);
            }
        }
        Ok(WeightedGraph { n, weights: clean })
    }

    pub fn empty(n: usize) -> Self {
        WeightedGraph { n, weights: BTreeMap::new() }
    }

    /// Every edge of `g` at weight 1.
    pub fn from_graph(g: &Graph) -> Self {
        let weights = g.edges().iter().map(|&e| (e, Rational::one())).collect();
        WeightedGraph { n: g.n(), weights }
    }

    /// Every edge of `g` at the same weight `w`.
    pub fn uniform(g: &Graph, w: Rational) -> Result<Self, WeightedGraphError> {
        Self::new(g.n(), g.edges().iter().map(|&e| (e, w.clone())).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, u: usize, v: usize) -> Rational {
        self.weights.get(&(u.min(v), u.max(v))).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn weight_ref(&self, u: usize, v: usize) -> Option<&Rational> {
        self.weights.get(&(u.min(v), u.max(v)))
    }

    /// Positive-weight pairs in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (&Edge, &Rational)> {
        self.weights.iter()
    }

    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    /// Graph of the positive-weight pairs.
    pub fn support(&self) -> Graph {
        Graph::from_sorted_unchecked(self.n, self.weights.keys().copied().collect())
    }

    /// Keeps the pairs accepted by `keep` at their weight, zeroing the rest.
    pub fn restrict(&self, mut keep: impl FnMut(&Edge) -> bool) -> WeightedGraph {
        let weights = self.weights.iter().filter(|(e, _)| keep(e)).map(|(e, w)| (*e, w.clone())).collect();
        WeightedGraph { n: self.n, weights }
    }

    /// Every pair either keeps its weight in `other` or is zero.
    pub fn is_conventional_subgraph_of(&self, other: &WeightedGraph) -> bool {
        self.n == other.n && self.weights.iter().all(|(&(u, v), w)| other.weight_ref(u, v) == Some(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use crate::rational::ratio;

    #[test]
    fn zero_weights_vanish() {
        let mut m = BTreeMap::new();
        m.insert((1, 0), ratio(1, 2));
        m.insert((1, 2), ratio(0, 1));
        let w = WeightedGraph::new(3, m).unwrap();
        assert_eq!(w.support_size(), 1);
        assert_eq!(w.weight(0, 1), ratio(1, 2));
        assert_eq!(w.weight(2, 1), ratio(0, 1));
    }

    #[test]
    fn range_checked() {
        let mut m = BTreeMap::new();
        m.insert((0, 1), ratio(3, 2));
        assert!(WeightedGraph::new(2, m).is_err());
        let mut m = BTreeMap::new();
        m.insert((0, 2), ratio(1, 2));
        assert!(WeightedGraph::new(2, m).is_err());
    }

    #[test]
    fn conventional_subgraphs() {
        let w = WeightedGraph::uniform(&complete(3), ratio(1, 2)).unwrap();
        let sub = w.restrict(|&(u, _)| u == 0);
        assert!(sub.is_conventional_subgraph_of(&w));
        let other = WeightedGraph::uniform(&complete(3), ratio(1, 3)).unwrap();
        assert!(!other.is_conventional_subgraph_of(&w));
        assert!(WeightedGraph::empty(3).is_conventional_subgraph_of(&w));
    }
}
