//! Witness-driven refinement into equal classes, followed by edge deletions
//! that make every remaining class pair pass the witness checker.

use super::{check_regular_witness, RegularityError, Witness};
use crate::graph::{Edge, Graph, Partition};
use crate::rational::{self, Rational};

pub const DEFAULT_K_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefineConfig {
    /// Largest number of classes tried.
    pub k_cap: usize,
}

impl Default for RefineConfig {
    fn default() -> Self {
        RefineConfig { k_cap: DEFAULT_K_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditedPartition {
    pub g_star: Graph,
    pub partition: Partition,
    pub edits_applied: usize,
    /// Every class pair of `g_star` passes the witness checker at this level.
    pub achieved_eps: Rational,
    /// Class pairs whose edges were deleted because they were irregular in `g`.
    pub zeroed_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RefineError {
    #[error("{0} must lie in (0, 1)")]
    OutOfUnit(&'static str),
    #[error("need at least 4·l = {need} vertices, got {n}")]
    TooFewVertices { n: usize, need: usize },
    #[error("minimum class count {l} must be between 1 and the cap {k_cap}")]
    BadClassCount { l: usize, k_cap: usize },
    #[error("best partition ({} classes, {irregular_pairs} irregular pairs) needs {edits} edits, over the budget of {allowed}", best.k())]
    OverBudget { best: Box<Partition>, irregular_pairs: usize, edits: usize, allowed: Rational },
    #[error(transparent)]
    Regularity(#[from] RegularityError),
}

struct Assessment {
    /// Irregular class pairs `(i, j)`, `i < j`, with their witnesses.
    irregular: Vec<((usize, usize), Witness)>,
    cost: usize,
}

fn assess(g: &Graph, p: &Partition, eps: &Rational) -> Result<Assessment, RegularityError> {
    let mut irregular = Vec::new();
    let mut cost = 0;
    for i in 0..p.k() {
        for j in i + 1..p.k() {
            let verdict = check_regular_witness(g, p.class(i), p.class(j), eps)?;
            if let Some(w) = verdict.witness {
                cost += g.edges_between(p.class(i), p.class(j));
                irregular.push(((i, j), w));
            }
        }
    }
    cost += exceptional_edges(g, p).len();
    Ok(Assessment { irregular, cost })
}

fn exceptional_edges(g: &Graph, p: &Partition) -> Vec<Edge> {
    g.edges().iter().copied().filter(|&(u, v)| p.class_of(u).is_none() || p.class_of(v).is_none()).collect()
}

/// Splits every class along the witness of its first irregular pair and
/// re-cuts the pieces into `k` equal classes; leftovers fill later classes
/// and finally `V_0`.
fn split(n: usize, p: &Partition, irregular: &[((usize, usize), Witness)], k: usize) -> Partition {
    let size = n / k;
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut pool: Vec<usize> = Vec::new();
    for i in 0..p.k() {
        let cut = irregular.iter().find_map(|((a, b), w)| {
            if *a == i {
                Some(&w.a)
            } else if *b == i {
                Some(&w.b)
            } else {
                None
            }
        });
        let class = p.class(i);
        let atoms: Vec<Vec<usize>> = match cut {
            Some(side) => {
                let (inside, outside) = class.iter().partition(|v| side.contains(v));
                vec![inside, outside]
            }
            None => vec![class.to_vec()],
        };
        for atom in atoms {
            let mut chunks = atom.chunks_exact(size);
            for chunk in chunks.by_ref() {
                if classes.len() < k {
                    classes.push(chunk.to_vec());
                } else {
                    pool.extend_from_slice(chunk);
                }
            }
            pool.extend_from_slice(chunks.remainder());
        }
    }
    pool.extend_from_slice(p.exceptional());
    pool.sort_unstable();
    let missing = k - classes.len();
    classes.extend(pool.chunks_exact(size).take(missing).map(<[usize]>::to_vec));
    assert_eq!(classes.len(), k, "n >= k·size leaves enough vertices");
    let exceptional = pool[missing * size..].to_vec();
    Partition::new(n, exceptional, classes).expect("split yields a valid partition")
}

pub fn refine_partition(
    g: &Graph,
    eps: &Rational,
    l: usize,
    budget: &Rational,
) -> Result<EditedPartition, RefineError> {
    refine_partition_with(g, eps, l, budget, &RefineConfig::default())
}

/// Starting from `l` classes by vertex index, doubles the class count (up to
/// the cap) while irregular pairs remain, keeping the partition whose
/// irregular pairs and `V_0` carry the fewest edges. Those edges are then
/// deleted, so `g_star ⊆ g`.
pub fn refine_partition_with(
    g: &Graph,
    eps: &Rational,
    l: usize,
    budget: &Rational,
    config: &RefineConfig,
) -> Result<EditedPartition, RefineError> {
    if !rational::is_in_open_unit(eps) {
        return Err(RefineError::OutOfUnit("eps"));
    }
    if !rational::is_in_open_unit(budget) {
        return Err(RefineError::OutOfUnit("budget"));
    }
    if l == 0 || l > config.k_cap {
        return Err(RefineError::BadClassCount { l, k_cap: config.k_cap });
    }
    let n = g.n();
    if n < 4 * l {
        return Err(RefineError::TooFewVertices { n, need: 4 * l });
    }

    let mut partition = Partition::equitable(n, l).expect("l <= n");
    let mut best: Option<(Partition, Assessment)> = None;
    loop {
        let current = assess(g, &partition, eps)?;
        let done = current.irregular.is_empty();
        let next_k = (partition.k() * 2).min(config.k_cap);
        let next = (!done && next_k > partition.k() && n / next_k >= 2)
            .then(|| split(n, &partition, &current.irregular, next_k));
        if best.as_ref().is_none_or(|(_, b)| current.cost < b.cost) {
            best = Some((partition, current));
        }
        match next {
            Some(p) => partition = p,
            None => break,
        }
    }
    let (partition, chosen) = best.expect("at least one round");

    let allowed = budget * rational::from_usize(n * n);
    if rational::from_usize(chosen.cost) > allowed {
        return Err(RefineError::OverBudget {
            irregular_pairs: chosen.irregular.len(),
            edits: chosen.cost,
            best: Box::new(partition),
            allowed,
        });
    }
    let doomed: Vec<(usize, usize)> = chosen.irregular.iter().map(|(pair, _)| *pair).collect();
    let g_star = g.filter_edges(|u, v| match (partition.class_of(u), partition.class_of(v)) {
        (Some(i), Some(j)) => !doomed.contains(&(i.min(j), i.max(j))),
        _ => false,
    });
    debug_assert_eq!(g.symmetric_difference_size(&g_star), chosen.cost);
    Ok(EditedPartition {
        g_star,
        partition,
        edits_applied: chosen.cost,
        achieved_eps: eps.clone(),
        zeroed_pairs: doomed.len(),
    })
}
