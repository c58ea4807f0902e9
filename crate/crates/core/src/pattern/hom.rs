//! Homomorphism existence by backtracking over arc-consistent candidate sets.

use crate::graph::Graph;
use std::collections::VecDeque;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * 64 + b)
            })
        })
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    /// Intersects in place; returns whether anything was removed.
    fn intersect_with(&mut self, other: &Bits) -> bool {
        let mut changed = false;
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            let next = *a & b;
            changed |= next != *a;
            *a = next;
        }
        changed
    }
}

struct Solver<'a> {
    f: &'a Graph,
    host_n: usize,
    host_nbhd: Vec<Bits>,
}

impl Solver<'_> {
    fn revise(&self, domains: &mut [Bits], x: usize, y: usize) -> bool {
        let mut support = Bits::empty(self.host_n);
        for b in domains[y].iter() {
            support.union_with(&self.host_nbhd[b]);
        }
        domains[x].intersect_with(&support)
    }

    /// AC-3 starting from arcs into the vertices in `dirty`.
    fn propagate(&self, domains: &mut [Bits], dirty: &[usize]) -> bool {
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for &y in dirty {
            for &x in self.f.neighbors(y) {
                queue.push_back((x, y));
            }
        }
        while let Some((x, y)) = queue.pop_front() {
            if self.revise(domains, x, y) {
                if domains[x].is_empty() {
                    return false;
                }
                for &z in self.f.neighbors(x) {
                    if z != y {
                        queue.push_back((z, x));
                    }
                }
            }
        }
        true
    }

    fn search(&self, domains: Vec<Bits>) -> Option<Vec<Bits>> {
        let pick = (0..self.f.n()).filter(|&x| domains[x].len() > 1).min_by_key(|&x| (domains[x].len(), x));
        let Some(x) = pick else {
            return Some(domains);
        };
        for v in domains[x].iter().collect::<Vec<_>>() {
            let mut next = domains.clone();
            let mut single = Bits::empty(self.host_n);
            single.insert(v);
            next[x] = single;
            if self.propagate(&mut next, &[x]) {
                if let Some(done) = self.search(next) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// An edge-preserving map `f -> g` (not necessarily injective), if one exists.
/// The result is deterministic: the first map found when branching on the
/// smallest candidate set with values in increasing order.
pub fn find_homomorphism(f: &Graph, g: &Graph) -> Option<Vec<usize>> {
    if f.n() == 0 {
        return Some(Vec::new());
    }
    if g.n() == 0 {
        return None;
    }
    let host_nbhd: Vec<Bits> = (0..g.n())
        .map(|v| {
            let mut b = Bits::empty(g.n());
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut domains = Vec::with_capacity(f.n());
    for x in 0..f.n() {
        let mut d = Bits::empty(g.n());
        for v in 0..g.n() {
            if f.degree(x) == 0 || g.degree(v) > 0 {
                d.insert(v);
            }
        }
        if d.is_empty() {
            return None;
        }
        domains.push(d);
    }
    let solver = Solver { f, host_n: g.n(), host_nbhd };
    let all: Vec<usize> = (0..f.n()).collect();
    if !solver.propagate(&mut domains, &all) {
        return None;
    }
    let solved = solver.search(domains)?;
    let phi: Vec<usize> = solved.iter().map(|d| d.iter().next().expect("singleton domain")).collect();
    debug_assert!(f.edges().iter().all(|&(x, y)| g.has_edge(phi[x], phi[y])));
    Some(phi)
}

pub fn hom_exists(f: &Graph, g: &Graph) -> bool {
    find_homomorphism(f, g).is_some()
}
