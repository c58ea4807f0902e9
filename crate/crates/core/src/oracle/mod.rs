//! Exact `ex(G, T, F)` and `ex_hom(W, T, F)` by branch and bound over edge
//! deletions. Ground truth for the rest of the crate at small sizes.

mod search;

use crate::graph::{Edge, Graph, WeightedGraph};
use crate::pattern::{
    enumerate_copies, find_embedding, find_homomorphism, image_edges, ForbiddenFamily, Matcher, PatternSpec,
};
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use search::{Outcome, Problem};
use std::ops::ControlFlow;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Search nodes allowed before giving up with [`OracleError::Incomplete`].
    pub node_budget: u64,
    pub threads: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { node_budget: DEFAULT_NODE_BUDGET, threads: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    /// The search ran out of nodes. `lower` is achieved by a known feasible
    /// subgraph; `upper` bounds the optimum.
    #[error(
        "search budget exhausted; optimum lies in [{}, {}]",
        rational::format_rational(lower),
        rational::format_rational(upper)
    )]
    Incomplete { lower: Box<Rational>, upper: Box<Rational> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<V, W> {
    pub value: V,
    pub witness: W,
    pub nodes_explored: u64,
}

struct SubgraphProblem<'a> {
    host: &'a Graph,
    t: &'a PatternSpec,
    fam: &'a ForbiddenFamily,
}

impl Problem for SubgraphProblem<'_> {
    type V = u64;

    fn host(&self) -> &Graph {
        self.host
    }

    fn evaluate(&self, sub: &Graph) -> (u64, Vec<u64>) {
        let pattern = self.t.graph();
        let mut total = 0u64;
        let mut through = vec![0u64; self.host.edge_count()];
        let _ = Matcher::new(pattern).for_each(sub, |phi| {
            total += 1;
            for &(x, y) in pattern.edges() {
                through[self.host.edge_index(phi[x], phi[y]).expect("sub is a host subgraph")] += 1;
            }
            ControlFlow::Continue(())
        });
        let aut = self.t.automorphisms();
        through.iter_mut().for_each(|c| *c /= aut);
        (total / aut, through)
    }

    fn obstruction(&self, sub: &Graph) -> Option<Vec<Edge>> {
        self.fam.members().iter().find_map(|f| find_embedding(f, sub).map(|phi| image_edges(f, &phi)))
    }

    fn obstructions(&self, sub: &Graph) -> Vec<Vec<Edge>> {
        self.fam.members().iter().flat_map(|f| enumerate_copies(f, sub)).map(|c| c.edges).collect()
    }

    fn copy_edges(&self) -> usize {
        self.t.edge_count()
    }
}

struct HomProblem<'a> {
    support: Graph,
    weights: Vec<Rational>,
    t: &'a PatternSpec,
    fam: &'a ForbiddenFamily,
}

impl Problem for HomProblem<'_> {
    type V = Rational;

    fn host(&self) -> &Graph {
        &self.support
    }

    fn evaluate(&self, sub: &Graph) -> (Rational, Vec<Rational>) {
        let pattern = self.t.graph();
        let mut total = Rational::zero();
        let mut through = vec![Rational::zero(); self.support.edge_count()];
        let mut slots = Vec::with_capacity(pattern.edge_count());
        let _ = Matcher::new(pattern).for_each(sub, |phi| {
            slots.clear();
            let mut product = Rational::one();
            for &(x, y) in pattern.edges() {
                let i = self.support.edge_index(phi[x], phi[y]).expect("sub is a support subgraph");
                product *= &self.weights[i];
                slots.push(i);
            }
            for &i in &slots {
                through[i] += &product;
            }
            total += product;
            ControlFlow::Continue(())
        });
        let aut = rational::from_u64(self.t.automorphisms());
        through.iter_mut().for_each(|c| *c /= &aut);
        (total / aut, through)
    }

    fn obstruction(&self, sub: &Graph) -> Option<Vec<Edge>> {
        self.fam.members().iter().find_map(|f| {
            find_homomorphism(f, sub).map(|phi| {
                let mut edges = image_edges(f, &phi);
                edges.dedup();
                edges
            })
        })
    }

    fn copy_edges(&self) -> usize {
        self.t.edge_count()
    }
}

/// `ex(G, T, F)` with the default budget, single-threaded.
pub fn exact_ex(g: &Graph, t: &PatternSpec, fam: &ForbiddenFamily) -> Result<OracleResult<u64, Graph>, OracleError> {
    exact_ex_with(g, t, fam, &OracleConfig::default())
}

/// Maximum number of copies of `t` over `fam`-free subgraphs of `g`, with the
/// witness subgraph attaining it.
pub fn exact_ex_with(
    g: &Graph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    config: &OracleConfig,
) -> Result<OracleResult<u64, Graph>, OracleError> {
    let problem = SubgraphProblem { host: g, t, fam };
    match search::solve(&problem, config.node_budget, config.threads) {
        Outcome::Complete { best, nodes } => {
            Ok(OracleResult { value: best.value, witness: g.edge_subgraph(&best.alive), nodes_explored: nodes })
        }
        Outcome::Exhausted { lower, upper } => Err(OracleError::Incomplete {
            lower: Box::new(rational::from_u64(lower)),
            upper: Box::new(rational::from_u64(upper)),
        }),
    }
}

/// `ex_hom(W, T, F)` with the default budget, single-threaded.
pub fn exact_ex_hom(
    w: &WeightedGraph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
) -> Result<OracleResult<Rational, WeightedGraph>, OracleError> {
    exact_ex_hom_with(w, t, fam, &OracleConfig::default())
}

/// Maximum of `N(W', T)` over conventional subgraphs `W'` of `w` into whose
/// support no member of `fam` maps homomorphically.
pub fn exact_ex_hom_with(
    w: &WeightedGraph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    config: &OracleConfig,
) -> Result<OracleResult<Rational, WeightedGraph>, OracleError> {
    let support = w.support();
    let weights = w.iter().map(|(_, x)| x.clone()).collect();
    let problem = HomProblem { support, weights, t, fam };
    match search::solve(&problem, config.node_budget, config.threads) {
        Outcome::Complete { best, nodes } => {
            let kept = problem.support.edge_subgraph(&best.alive);
            Ok(OracleResult {
                value: best.value,
                witness: w.restrict(|&(u, v)| kept.has_edge(u, v)),
                nodes_explored: nodes,
            })
        }
        Outcome::Exhausted { lower, upper } => {
            Err(OracleError::Incomplete { lower: Box::new(lower), upper: Box::new(upper) })
        }
    }
}

/// Copies of `t` that every `fam`-free subgraph must lose:
/// `N(G, T) - ex(G, T, F)`.
pub fn ex_bar(g: &Graph, t: &PatternSpec, fam: &ForbiddenFamily) -> Result<u64, OracleError> {
    ex_bar_with(g, t, fam, &OracleConfig::default())
}

pub fn ex_bar_with(
    g: &Graph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    config: &OracleConfig,
) -> Result<u64, OracleError> {
    let best = exact_ex_with(g, t, fam, config)?;
    Ok(crate::pattern::count_copies(g, t) - best.value)
}
