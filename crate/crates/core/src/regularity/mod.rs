//! Pair densities, ε-regularity checks, partition refinement with edge
//! editing, partition graphs and the subgraphs `G_{W'}` they induce.

mod partition_graph;
mod refine;

pub use partition_graph::{
    build_partition_graph, extract_subgraph, extract_subgraph_unchecked, ExtractError, PartitionGraph,
};
pub use refine::{refine_partition, refine_partition_with, EditedPartition, RefineConfig, RefineError, DEFAULT_K_CAP};

use crate::graph::Graph;
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use std::cmp::Ordering;

/// Largest side accepted by [`check_regular_exact`].
pub const EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegularityError {
    #[error("vertex sets must be nonempty")]
    EmptySet,
    #[error("vertex {0} lies in both sets")]
    Overlap(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("exact check enumerates subsets of sets up to {EXACT_LIMIT} vertices, got {0}; use the witness checker")]
    TooLarge(usize),
    #[error("witness checker needs equal sides, got {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("eps must lie in (0, 1)")]
    BadEps,
}

/// Subsets `A' ⊆ A`, `B' ⊆ B` with `|d(A',B') - d(A,B)| = deviation`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    #[serde(with = "rational::serde_rational")]
    pub deviation: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularityVerdict {
    pub regular: bool,
    pub witness: Option<Witness>,
    /// The ε the verdict was computed for.
    #[serde(with = "rational::serde_rational")]
    pub level: Rational,
    /// For the heuristic checker: the level `ε⁴/16` at which its witnesses
    /// are classically guaranteed. Absent for the exact checker.
    #[serde(with = "rational::serde_rational_opt")]
    pub relaxed_level: Option<Rational>,
}

fn validate(g: &Graph, a: &[usize], b: &[usize]) -> Result<(), RegularityError> {
    if a.is_empty() || b.is_empty() {
        return Err(RegularityError::EmptySet);
    }
    let mut seen = vec![false; g.n()];
    for &v in a.iter().chain(b) {
        if v >= g.n() {
            return Err(RegularityError::OutOfRange { vertex: v, n: g.n() });
        }
        if seen[v] {
            return Err(RegularityError::Overlap(v));
        }
        seen[v] = true;
    }
    Ok(())
}

fn check_eps(eps: &Rational) -> Result<(), RegularityError> {
    if rational::is_in_open_unit(eps) {
        Ok(())
    } else {
        Err(RegularityError::BadEps)
    }
}

/// `d(A, B) = e(A, B) / (|A| |B|)`.
pub fn density(g: &Graph, a: &[usize], b: &[usize]) -> Result<Rational, RegularityError> {
    validate(g, a, b)?;
    Ok(raw_density(g, a, b))
}

pub(crate) fn raw_density(g: &Graph, a: &[usize], b: &[usize]) -> Rational {
    rational::from_usize(g.edges_between(a, b)) / rational::from_usize(a.len() * b.len())
}

/// Smallest subset size allowed by `|A'| ≥ ε|A|`.
fn min_size(eps: &Rational, len: usize) -> usize {
    rational::ceil_to_usize(&(eps * rational::from_usize(len))).expect("small").max(1)
}

/// `|e'/(a' b') - E/(A B)|` kept as an exact fraction of machine integers.
#[derive(Debug, Clone, Copy)]
struct Dev {
    num: u64,
    den: u64,
}

impl Dev {
    fn new(e_sub: usize, a_sub: usize, b_sub: usize, e: usize, a: usize, b: usize) -> Dev {
        let lhs = (e_sub * a * b) as u64;
        let rhs = (e * a_sub * b_sub) as u64;
        Dev { num: lhs.abs_diff(rhs), den: (a_sub * b_sub * a * b) as u64 }
    }

    fn cmp(&self, other: &Dev) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }

    fn to_rational(self) -> Rational {
        rational::from_u64(self.num) / rational::from_u64(self.den)
    }
}

struct Best {
    dev: Dev,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl Best {
    fn offer(slot: &mut Option<Best>, dev: Dev, a: impl FnOnce() -> Vec<usize>, b: impl FnOnce() -> Vec<usize>) {
        if slot.as_ref().is_none_or(|best| dev.cmp(&best.dev) == Ordering::Greater) {
            *slot = Some(Best { dev, a: a(), b: b() });
        }
    }
}

fn verdict(best: Option<Best>, eps: &Rational, relaxed_level: Option<Rational>) -> RegularityVerdict {
    let witness = best.and_then(|best| {
        let deviation = best.dev.to_rational();
        (deviation > *eps).then(|| {
            let (mut a, mut b) = (best.a, best.b);
            a.sort_unstable();
            b.sort_unstable();
            Witness { a, b, deviation }
        })
    });
    RegularityVerdict { regular: witness.is_none(), witness, level: eps.clone(), relaxed_level }
}

/// Decides ε-regularity by enumerating every admissible `A'`; for each, the
/// extreme `B'` of every size are the top and bottom vertices of `B` by their
/// number of neighbours in `A'`. The witness, if any, has maximum deviation.
pub fn check_regular_exact(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    eps: &Rational,
) -> Result<RegularityVerdict, RegularityError> {
    validate(g, a, b)?;
    check_eps(eps)?;
    if let Some(&too_big) = [a.len(), b.len()].iter().find(|&&s| s > EXACT_LIMIT) {
        return Err(RegularityError::TooLarge(too_big));
    }
    let (na, nb) = (a.len(), b.len());
    let e = g.edges_between(a, b);
    let masks: Vec<u32> = b
        .iter()
        .map(|&y| a.iter().enumerate().filter(|&(_, &x)| g.has_edge(x, y)).fold(0, |m, (i, _)| m | 1 << i))
        .collect();
    let (ta, tb) = (min_size(eps, na), min_size(eps, nb));
    let mut best: Option<Best> = None;
    let mut order: Vec<usize> = (0..nb).collect();
    let mut counts = vec![0usize; nb];
    for sub in 1u32..(1 << na) {
        let size_a = sub.count_ones() as usize;
        if size_a < ta {
            continue;
        }
        for (c, m) in counts.iter_mut().zip(&masks) {
            *c = (m & sub).count_ones() as usize;
        }
        order.sort_by(|&x, &y| counts[y].cmp(&counts[x]).then(x.cmp(&y)));
        let mut top = 0;
        let mut bottom = 0;
        for s in 1..=nb {
            top += counts[order[s - 1]];
            bottom += counts[order[nb - s]];
            if s < tb {
                continue;
            }
            let pick_a = || (0..na).filter(|i| sub >> i & 1 == 1).map(|i| a[i]).collect();
            Best::offer(&mut best, Dev::new(top, size_a, s, e, na, nb), pick_a, || {
                order[..s].iter().map(|&j| b[j]).collect()
            });
            Best::offer(&mut best, Dev::new(bottom, size_a, s, e, na, nb), pick_a, || {
                order[nb - s..].iter().map(|&j| b[j]).collect()
            });
        }
    }
    Ok(verdict(best, eps, None))
}

/// Polynomial one-sided check for pairs of equal size.
///
/// Pairs with density within `ε³` of 0 or 1 are regular outright. Otherwise
/// candidate subsets come from degree extremes and from codegree extremes
/// inside single neighbourhoods, in both orientations. Any witness returned
/// is exactly valid at `ε`; "regular" means no candidate deviated.
pub fn check_regular_witness(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    eps: &Rational,
) -> Result<RegularityVerdict, RegularityError> {
    validate(g, a, b)?;
    check_eps(eps)?;
    if a.len() != b.len() {
        return Err(RegularityError::SizeMismatch(a.len(), b.len()));
    }
    let relaxed = rational::pow(eps, 4) / rational::from_u64(16);
    let d = raw_density(g, a, b);
    let eps3 = rational::pow(eps, 3);
    if d < eps3 || d > Rational::one() - &eps3 {
        return Ok(verdict(None, eps, Some(relaxed)));
    }
    let mut best = None;
    scan(g, a, b, eps, false, &mut best);
    scan(g, b, a, eps, true, &mut best);
    Ok(verdict(best, eps, Some(relaxed)))
}

/// Offers candidates with `X' ⊆ x`, `Y' ⊆ y`; `swapped` restores `(A, B)` order.
fn scan(g: &Graph, x: &[usize], y: &[usize], eps: &Rational, swapped: bool, best: &mut Option<Best>) {
    let m = x.len();
    let s = min_size(eps, m);
    let e = g.edges_between(x, y);
    let mut offer = |xs: &[usize], ys: &[usize]| {
        let dev = Dev::new(g.edges_between(xs, ys), xs.len(), ys.len(), e, m, m);
        if swapped {
            Best::offer(best, dev, || ys.to_vec(), || xs.to_vec());
        } else {
            Best::offer(best, dev, || xs.to_vec(), || ys.to_vec());
        }
    };
    // Sorted by score descending, then vertex index.
    let ranked = |pool: &[usize], score: &dyn Fn(usize) -> usize| {
        let mut v = pool.to_vec();
        v.sort_by(|&p, &q| score(q).cmp(&score(p)).then(p.cmp(&q)));
        v
    };
    let extremes = |sorted: &[usize], k: usize| -> [Vec<usize>; 2] {
        let mut low = sorted[sorted.len() - k..].to_vec();
        low.reverse();
        [sorted[..k].to_vec(), low]
    };
    let within = |v: usize, set: &[usize]| set.iter().filter(|&&w| g.has_edge(v, w)).count();

    let by_degree = ranked(x, &|v| within(v, y));
    for xs in extremes(&by_degree, s) {
        offer(&xs, y);
    }
    for &x0 in x {
        let nbhd: Vec<usize> = y.iter().copied().filter(|&w| g.has_edge(x0, w)).collect();
        let rest: Vec<usize> = y.iter().copied().filter(|&w| !g.has_edge(x0, w)).collect();
        for ys in [nbhd, rest] {
            if ys.len() < s {
                continue;
            }
            let by_codegree = ranked(x, &|v| within(v, &ys));
            for xs in extremes(&by_codegree, s) {
                offer(&xs, &ys);
            }
        }
    }
}

/// Re-verifies a witness from scratch at level `eps`.
pub fn witness_is_valid(g: &Graph, a: &[usize], b: &[usize], eps: &Rational, w: &Witness) -> bool {
    let subset = |small: &[usize], big: &[usize]| small.iter().all(|v| big.contains(v));
    if w.a.is_empty() || w.b.is_empty() || !subset(&w.a, a) || !subset(&w.b, b) {
        return false;
    }
    if rational::from_usize(w.a.len()) < eps * rational::from_usize(a.len())
        || rational::from_usize(w.b.len()) < eps * rational::from_usize(b.len())
    {
        return false;
    }
    let dev = raw_density(g, &w.a, &w.b) - raw_density(g, a, b);
    let dev = if dev < Rational::zero() { -dev } else { dev };
    dev == w.deviation && dev > *eps
}
