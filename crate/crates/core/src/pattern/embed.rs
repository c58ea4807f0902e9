//! Injective, edge-preserving maps of a small pattern into a host graph.

use crate::graph::{Edge, Graph, Partition, WeightedGraph};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::ops::ControlFlow;

/// Search plan for one pattern: a static vertex order in which every vertex
/// (where possible) has an already-placed neighbour, so candidates come from
/// a neighbourhood rather than the whole host.
pub(crate) struct Matcher<'p> {
    pattern: &'p Graph,
    order: Vec<usize>,
    /// For `order[i]`: its pattern neighbours placed before it.
    back: Vec<Vec<usize>>,
}

impl<'p> Matcher<'p> {
    pub(crate) fn new(pattern: &'p Graph) -> Self {
        let t = pattern.n();
        let mut placed = vec![false; t];
        let mut order = Vec::with_capacity(t);
        for _ in 0..t {
            let next = (0..t)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let linked = pattern.neighbors(x).iter().filter(|&&y| placed[y]).count();
                    // prefer vertices tied to the placed prefix, then high degree, then low index
                    (linked, pattern.degree(x), std::cmp::Reverse(x))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut seen = vec![false; t];
        let mut back = Vec::with_capacity(t);
        for &x in &order {
            back.push(pattern.neighbors(x).iter().copied().filter(|&y| seen[y]).collect());
            seen[x] = true;
        }
        Matcher { pattern, order, back }
    }

    /// Calls `visit(phi)` for every embedding, where `phi[x]` is the host vertex
    /// assigned to pattern vertex `x`. Embeddings arrive in lexicographic order
    /// of `(phi[order[0]], phi[order[1]], …)`.
    pub(crate) fn for_each<F>(&self, host: &Graph, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let t = self.pattern.n();
        if t > host.n() {
            return ControlFlow::Continue(());
        }
        let mut phi = vec![usize::MAX; t];
        let mut used = vec![false; host.n()];
        self.extend(host, 0, &mut phi, &mut used, &mut visit)
    }

    fn extend<F>(
        &self,
        host: &Graph,
        depth: usize,
        phi: &mut [usize],
        used: &mut [bool],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(phi);
        }
        let x = self.order[depth];
        let need = self.pattern.degree(x);
        let back = &self.back[depth];
        let fits = |v: usize, used: &[bool], phi: &[usize]| {
            !used[v] && host.degree(v) >= need && back.iter().all(|&y| host.has_edge(phi[y], v))
        };
        match back.iter().min_by_key(|&&y| host.degree(phi[y])) {
            Some(&anchor) => {
                for &v in host.neighbors(phi[anchor]) {
                    if fits(v, used, phi) {
                        phi[x] = v;
                        used[v] = true;
                        let flow = self.extend(host, depth + 1, phi, used, visit);
                        used[v] = false;
                        flow?;
                    }
                }
            }
            None => {
                for v in 0..host.n() {
                    if fits(v, used, phi) {
                        phi[x] = v;
                        used[v] = true;
                        let flow = self.extend(host, depth + 1, phi, used, visit);
                        used[v] = false;
                        flow?;
                    }
                }
            }
        }
        phi[x] = usize::MAX;
        ControlFlow::Continue(())
    }
}

/// Number of injective edge-preserving maps `pattern -> host`.
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> u64 {
    let mut count = 0u64;
    let _ = Matcher::new(pattern).for_each(host, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// First embedding in search order, if any.
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = Matcher::new(pattern).for_each(host, |phi| {
        found = Some(phi.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Image of the pattern's edges under `phi`, sorted.
pub fn image_edges(pattern: &Graph, phi: &[usize]) -> Vec<Edge> {
    let mut edges: Vec<Edge> = pattern.edges().iter().map(|&(x, y)| (phi[x].min(phi[y]), phi[x].max(phi[y]))).collect();
    edges.sort_unstable();
    edges
}

/// One occurrence of a pattern: its host vertex set and the edges realising it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Copy {
    pub edges: Vec<Edge>,
    pub vertices: Vec<usize>,
}

/// All distinct copies of `pattern` in `host`, in increasing order of their
/// edge lists.
pub fn enumerate_copies(pattern: &Graph, host: &Graph) -> Vec<Copy> {
    let mut seen = BTreeSet::new();
    let _ = Matcher::new(pattern).for_each(host, |phi| {
        let mut vertices = phi.to_vec();
        vertices.sort_unstable();
        seen.insert(Copy { edges: image_edges(pattern, phi), vertices });
        ControlFlow::Continue(())
    });
    seen.into_iter().collect()
}

/// `N(W, T)`: sum over copies of `pattern` on positive-weight pairs of the
/// product of the weights on the copy's edges.
pub fn count_weighted_embeddings(pattern: &Graph, w: &WeightedGraph, aut: u64) -> Rational {
    weighted_mass(pattern, w, aut, |_| true)
}

pub(crate) fn weighted_mass(
    pattern: &Graph,
    w: &WeightedGraph,
    aut: u64,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Rational {
    let support = w.support();
    let mut total = Rational::zero();
    let _ = Matcher::new(pattern).for_each(&support, |phi| {
        if accept(phi) {
            let mut product = Rational::one();
            for &(x, y) in pattern.edges() {
                product *= w.weight_ref(phi[x], phi[y]).expect("edge of support");
            }
            total += product;
        }
        ControlFlow::Continue(())
    });
    total / crate::rational::from_u64(aut)
}

/// Mass of copies that put at least two pattern vertices into one class.
pub(crate) fn same_class_mass(pattern: &Graph, w: &WeightedGraph, p: &Partition, aut: u64) -> Rational {
    let mut classes = Vec::with_capacity(pattern.n());
    weighted_mass(pattern, w, aut, |phi| {
        classes.clear();
        classes.extend(phi.iter().filter_map(|&v| p.class_of(v)));
        classes.sort_unstable();
        classes.windows(2).any(|pair| pair[0] == pair[1])
    })
}
