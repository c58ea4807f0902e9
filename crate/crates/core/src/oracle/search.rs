//! Edge-deletion branch and bound shared by the graph and weighted oracles.
//!
//! A node is a pair of masks over the host's edges: `alive` (not yet deleted)
//! and `fixed` (kept for the rest of the subtree). Obstructions are edge sets
//! of which every feasible solution must miss at least one edge.

use crate::graph::{Edge, Graph};
use std::sync::atomic::{AtomicU64, Ordering};

/// Objective values: integer copy counts or exact rational masses.
pub(crate) trait Value: Clone + Ord + Send + Sync {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    /// `self - ceil(loss / parts)` (clamped at zero for counts).
    fn relax(&self, loss: &Self, parts: usize) -> Self;
}

impl Value for u64 {
    fn zero() -> Self {
        0
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn relax(&self, loss: &Self, parts: usize) -> Self {
        if parts == 0 {
            return *self;
        }
        self.saturating_sub(loss.div_ceil(parts as u64))
    }
}

impl Value for crate::rational::Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn relax(&self, loss: &Self, parts: usize) -> Self {
        if parts == 0 {
            return self.clone();
        }
        self - loss / crate::rational::from_usize(parts)
    }
}

pub(crate) trait Problem: Sync {
    type V: Value;

    fn host(&self) -> &Graph;

    /// Objective of `sub`, and for every host edge the loss from deleting it.
    fn evaluate(&self, sub: &Graph) -> (Self::V, Vec<Self::V>);

    /// Edges (of `sub`) of some forbidden structure inside `sub`, if any.
    fn obstruction(&self, sub: &Graph) -> Option<Vec<Edge>>;

    /// Several obstructions for the greedy start; the default offers one.
    fn obstructions(&self, sub: &Graph) -> Vec<Vec<Edge>> {
        self.obstruction(sub).into_iter().collect()
    }

    /// Number of host edges in one counted copy; loss sums are divided by it.
    fn copy_edges(&self) -> usize;
}

#[derive(Debug, Clone)]
pub(crate) struct Found<V> {
    pub value: V,
    pub alive: Vec<bool>,
}

pub(crate) enum Outcome<V> {
    Complete { best: Found<V>, nodes: u64 },
    Exhausted { lower: V, upper: V },
}

#[derive(Clone)]
struct Node {
    alive: Vec<bool>,
    fixed: Vec<bool>,
}

enum Step<V> {
    Leaf(V),
    Pruned,
    Branch { upper: V, children: Vec<Node> },
}

struct Engine<'a, P: Problem> {
    problem: &'a P,
    nodes: AtomicU64,
    budget: u64,
}

impl<'a, P: Problem> Engine<'a, P> {
    fn sub(&self, alive: &[bool]) -> Graph {
        self.problem.host().edge_subgraph(alive)
    }

    fn index(&self, e: Edge) -> usize {
        self.problem.host().edge_index(e.0, e.1).expect("obstruction edge lies in the host")
    }

    /// Evaluates a node; `incumbent` is the value to beat.
    fn step(&self, node: &Node, incumbent: Option<&P::V>) -> Step<P::V> {
        let host = self.problem.host();
        let sub = self.sub(&node.alive);
        let (score, loss) = self.problem.evaluate(&sub);
        if incumbent.is_some_and(|inc| score <= *inc) {
            return Step::Pruned;
        }
        // Pack obstructions that share no free edge.
        let mut avail = node.alive.clone();
        let mut packing: Vec<Vec<usize>> = Vec::new();
        let mut total_loss = P::V::zero();
        while let Some(obs) = self.problem.obstruction(&self.sub(&avail)) {
            let mut free: Vec<usize> = obs.iter().map(|&e| self.index(e)).filter(|&i| !node.fixed[i]).collect();
            free.sort_unstable();
            free.dedup();
            if free.is_empty() {
                return Step::Pruned;
            }
            let cheapest = free.iter().map(|&i| &loss[i]).min().expect("nonempty").clone();
            total_loss = total_loss.add(&cheapest);
            for &i in &free {
                avail[i] = false;
            }
            packing.push(free);
        }
        if packing.is_empty() {
            return Step::Leaf(score);
        }
        let upper = score.relax(&total_loss, self.problem.copy_edges());
        if incumbent.is_some_and(|inc| upper <= *inc) {
            return Step::Pruned;
        }
        let chosen = packing.iter().min_by_key(|free| free.len()).expect("nonempty packing");
        debug_assert!(chosen.iter().all(|&i| i < host.edge_count()));
        let mut children = Vec::with_capacity(chosen.len());
        let mut fixed = node.fixed.clone();
        for &i in chosen {
            let mut alive = node.alive.clone();
            alive[i] = false;
            children.push(Node { alive, fixed: fixed.clone() });
            fixed[i] = true;
        }
        Step::Branch { upper, children }
    }

    fn charge(&self) -> bool {
        self.nodes.fetch_add(1, Ordering::Relaxed) < self.budget
    }

    /// Depth-first search below `node`; updates `best` on strict improvement.
    fn dfs(&self, node: &Node, best: &mut Found<P::V>) -> Result<(), ()> {
        if !self.charge() {
            return Err(());
        }
        match self.step(node, Some(&best.value)) {
            Step::Pruned => Ok(()),
            Step::Leaf(value) => {
                best.value = value;
                best.alive = node.alive.clone();
                Ok(())
            }
            Step::Branch { children, .. } => {
                for child in &children {
                    self.dfs(child, best)?;
                }
                Ok(())
            }
        }
    }

    /// Deletes the edge lying in the most obstructions (ties: least loss,
    /// then lowest index) until none remain, then restores deleted edges
    /// whose return creates no obstruction.
    fn greedy(&self) -> Found<P::V> {
        let m = self.problem.host().edge_count();
        let mut alive = vec![true; m];
        loop {
            let sub = self.sub(&alive);
            let all = self.problem.obstructions(&sub);
            if all.is_empty() {
                break;
            }
            let (_, loss) = self.problem.evaluate(&sub);
            let mut hits = vec![0usize; m];
            for obs in &all {
                for &e in obs {
                    hits[self.index(e)] += 1;
                }
            }
            let victim = (0..m)
                .filter(|&i| hits[i] > 0)
                .min_by(|&a, &b| hits[b].cmp(&hits[a]).then(loss[a].cmp(&loss[b])).then(a.cmp(&b)))
                .expect("obstructions have edges");
            alive[victim] = false;
        }
        for i in 0..m {
            if !alive[i] {
                alive[i] = true;
                if self.problem.obstruction(&self.sub(&alive)).is_some() {
                    alive[i] = false;
                }
            }
        }
        let (value, _) = self.problem.evaluate(&self.sub(&alive));
        Found { value, alive }
    }
}

/// Number of open subproblems the root is split into before the (possibly
/// parallel) depth-first phase. Fixed so that node counts and witnesses do not
/// depend on the thread count.
const FRONTIER: usize = 16;

pub(crate) fn solve<P: Problem>(problem: &P, budget: u64, threads: usize) -> Outcome<P::V> {
    let engine = Engine { problem, nodes: AtomicU64::new(0), budget };
    let m = problem.host().edge_count();
    let seed = engine.greedy();
    let root = Node { alive: vec![true; m], fixed: vec![false; m] };

    // Breadth-first expansion against the greedy incumbent only.
    let mut frontier = vec![root];
    let mut root_upper: Option<P::V> = None;
    let mut best = seed.clone();
    while frontier.len() < FRONTIER {
        let mut next = Vec::new();
        let mut expanded = false;
        for node in frontier {
            if !engine.charge() {
                return Outcome::Exhausted { lower: best.value, upper: root_upper.unwrap_or(seed.value) };
            }
            match engine.step(&node, Some(&seed.value)) {
                Step::Pruned => {}
                Step::Leaf(value) => {
                    if value > best.value {
                        best = Found { value, alive: node.alive.clone() };
                    }
                }
                Step::Branch { upper, children } => {
                    root_upper.get_or_insert(upper);
                    expanded = true;
                    next.extend(children);
                }
            }
        }
        frontier = next;
        if !expanded {
            break;
        }
    }

    let run = |node: &Node| -> Option<Found<P::V>> {
        let mut local = seed.clone();
        engine.dfs(node, &mut local).ok()?;
        Some(local)
    };
    let results: Vec<Option<Found<P::V>>> = if threads > 1 && frontier.len() > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        pool.install(|| frontier.par_iter().map(run).collect())
    } else {
        frontier.iter().map(run).collect()
    };

    let mut exhausted = false;
    for found in results {
        match found {
            Some(found) => {
                if found.value > best.value
                    || (found.value == best.value && witness_key(&found.alive) < witness_key(&best.alive))
                {
                    best = found;
                }
            }
            None => exhausted = true,
        }
    }
    if exhausted {
        return Outcome::Exhausted { lower: seed.value.clone(), upper: root_upper.unwrap_or(seed.value) };
    }
    Outcome::Complete { best, nodes: engine.nodes.load(Ordering::Relaxed) }
}

/// Ordering key making the lexicographically smallest kept-edge list win.
fn witness_key(alive: &[bool]) -> Vec<usize> {
    alive.iter().enumerate().filter_map(|(i, &a)| a.then_some(i)).collect()
}
