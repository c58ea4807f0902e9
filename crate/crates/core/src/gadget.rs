//! Reduction gadgets: the host `G⁺` that attaches complete multipartite
//! layers to a graph, and the blow-up attachment that hangs copies of
//! `T − {u, v}` off every edge. Both double as structured test instances.

use crate::graph::{complete, Edge, Graph};
use crate::pattern::enumerate_copies;
use crate::rational::{self, Rational};
use num_integer::binomial;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForgeError {
    #[error("need m >= 2, got {0}")]
    CliqueTooSmall(usize),
    #[error("need k >= m + 2, got m = {m}, k = {k}")]
    ForbiddenTooSmall { m: usize, k: usize },
    #[error("set size must be at least 1")]
    ZeroSetSize,
    #[error("host graph has no vertices")]
    EmptyHost,
    #[error("pattern needs at least 3 vertices, got {0}")]
    PatternTooSmall(usize),
    #[error("pattern is not 3-connected")]
    NotThreeConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NpParams {
    pub m: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpGadget {
    pub host: Graph,
    /// The original vertices `0..n`; edges among them are the inner edges.
    pub inner_vertices: Vec<usize>,
    pub u_sets: Vec<Vec<usize>>,
    pub params: NpParams,
}

fn check_np(m: usize, k: usize, s: usize) -> Result<(), ForgeError> {
    if m < 2 {
        return Err(ForgeError::CliqueTooSmall(m));
    }
    if k < m + 2 {
        return Err(ForgeError::ForbiddenTooSmall { m, k });
    }
    if s == 0 {
        return Err(ForgeError::ZeroSetSize);
    }
    Ok(())
}

/// Adds `r = k − 3` independent sets of size `s`, each joined to every other
/// set and to all of `V(g)`.
pub fn build_np_gadget(g: &Graph, m: usize, k: usize, s: usize) -> Result<NpGadget, ForgeError> {
    check_np(m, k, s)?;
    let n = g.n();
    let r = k - 3;
    let u_sets: Vec<Vec<usize>> = (0..r).map(|i| (n + i * s..n + (i + 1) * s).collect()).collect();
    let mut edges = g.edges().to_vec();
    for (i, ui) in u_sets.iter().enumerate() {
        for &x in ui {
            edges.extend((0..n).map(|v| (v, x)));
            for uj in &u_sets[i + 1..] {
                edges.extend(uj.iter().map(|&y| (x, y)));
            }
        }
    }
    let host = Graph::from_edges(n + r * s, edges).expect("gadget edges are in range");
    Ok(NpGadget { host, inner_vertices: (0..n).collect(), u_sets, params: NpParams { m, k, r, s } })
}

impl NpGadget {
    fn is_inner(&self, v: usize) -> bool {
        v < self.inner_vertices.len()
    }

    /// Copies of `K_m` containing the inner edge `e` whose other vertices all
    /// lie in the U-sets.
    pub fn copies_through_inner_edge(&self, e: Edge, m: usize) -> u64 {
        if m < 2 || !self.host.has_edge(e.0, e.1) || !self.is_inner(e.0) || !self.is_inner(e.1) {
            return 0;
        }
        let mut keep = vec![e.0, e.1];
        keep.extend(self.u_sets.iter().flatten());
        let local = self.host.induced(&keep);
        enumerate_copies(&complete(m), &local).iter().filter(|c| c.vertices.starts_with(&[0, 1])).count() as u64
    }

    /// Copies of `K_m` with at least `min_inner` vertices in `V(g)`.
    pub fn copies_with_inner_at_least(&self, m: usize, min_inner: usize) -> u64 {
        enumerate_copies(&complete(m), &self.host)
            .iter()
            .filter(|c| c.vertices.iter().filter(|&&v| self.is_inner(v)).count() >= min_inner)
            .count() as u64
    }
}

/// `C(r, m − 2) · s^(m − 2)`: copies of `K_m` lost with each deleted inner edge.
pub fn per_missing_edge_km_count(m: usize, r: usize, s: usize) -> u64 {
    assert!(m >= 2 && r + 2 >= m, "need m >= 2 and r >= m - 2");
    binomial(r as u64, (m - 2) as u64) * (s as u64).pow((m - 2) as u32)
}

/// Lower bounds on copies lost by deleting outer edges (two cases) and the
/// upper bound on copies lost inside `V`. A bound whose binomial has a
/// negative index is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetBounds {
    #[serde(with = "crate::rational::serde_rational_opt")]
    pub outer1: Option<Rational>,
    #[serde(with = "crate::rational::serde_rational_opt")]
    pub outer2: Option<Rational>,
    #[serde(with = "crate::rational::serde_rational")]
    pub inner: Rational,
}

impl GadgetBounds {
    /// `inner` is below every present outer bound (and some bound is present).
    pub fn inner_wins(&self) -> bool {
        let outers: Vec<&Rational> = self.outer1.iter().chain(self.outer2.iter()).collect();
        !outers.is_empty() && outers.iter().all(|o| self.inner < **o)
    }
}

fn binom_opt(n: isize, k: isize) -> Option<Rational> {
    (n >= 0 && k >= 0 && k <= n).then(|| rational::from_u64(binomial(n as u64, k as u64)))
}

pub fn gadget_bounds(g: &Graph, m: usize, k: usize, s: usize, b: usize) -> Result<GadgetBounds, ForgeError> {
    check_np(m, k, s)?;
    let n = rational::from_usize(g.n());
    let r = (k - 3) as isize;
    let mi = m as isize;
    let sr = rational::from_usize(s);
    let half = &sr / rational::from_u64(2);
    let br = rational::from_usize(b);
    let outer1 = binom_opt(r - 2, mi - 3).and_then(|c| {
        let pairs = binom_opt(mi - 1, 2)?;
        Some(&half * &half * c * rational::pow(&sr, m - 3) * &n / pairs)
    });
    let outer2 =
        binom_opt(r - 1, mi - 2).map(|c| &br * &half * c * rational::pow(&sr, m - 2) / rational::from_usize(m - 1));
    // b·n^(m−1)·(r·s/n + 1)^(m−2) = b·n·(r·s + n)^(m−2)
    let inner = &br * &n * rational::pow(&(rational::from_usize((k - 3) * s) + &n), m - 2);
    Ok(GadgetBounds { outer1, outer2, inner })
}

/// Smallest power of two `s` for which the inner bound (with `b = n`) beats
/// every present outer bound.
pub fn choose_scale(g: &Graph, m: usize, k: usize) -> Result<usize, ForgeError> {
    check_np(m, k, 1)?;
    if g.n() == 0 {
        return Err(ForgeError::EmptyHost);
    }
    let mut s = 1usize;
    loop {
        if gadget_bounds(g, m, k, s, g.n())?.inner_wins() {
            return Ok(s);
        }
        s *= 2;
    }
}

/// `(ex̄(G⁺, K_m, K_k) − g) / (C(r, m − 2) · s^(m − 2))`.
pub fn recover_ex_from_gadget(ex_bar_plus: u64, g: u64, m: usize, r: usize, s: usize) -> Rational {
    let denom = per_missing_edge_km_count(m, r, s);
    assert!(denom > 0, "denominator must be positive");
    (rational::from_u64(ex_bar_plus) - rational::from_u64(g)) / rational::from_u64(denom)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupGadget {
    pub host: Graph,
    /// The edge `(u, v)` of `T` whose endpoints were removed.
    pub removed_edge: Edge,
    /// Vertices of `T − {u, v}` in increasing order; set `i` of every edge
    /// blows up `t_prime_vertices[i]`.
    pub t_prime_vertices: Vec<usize>,
    /// `per_edge_sets[j][i]`: host vertices of set `i` attached to edge `j` of `g`.
    pub per_edge_sets: Vec<Vec<Vec<usize>>>,
    /// For set `i`: joined to the first endpoint, joined to the second.
    pub attach_map: Vec<(bool, bool)>,
}

/// Stays connected after deleting any two vertices, and has at least four.
pub fn is_three_connected(t: &Graph) -> bool {
    let n = t.n();
    if n < 4 {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            if !t.induced(&rest).is_connected() {
                return false;
            }
        }
    }
    true
}

/// For every edge `(a, b)` of `g`, adds `v(t) − 2` independent sets of size
/// `s` forming a blow-up of `T' = t − {u, v}`, where `(u, v)` is the first
/// edge of `t`; sets of `u`'s neighbours join `a`, of `v`'s join `b`.
pub fn build_blowup_gadget(g: &Graph, t: &Graph, s: usize) -> Result<BlowupGadget, ForgeError> {
    if t.n() < 3 {
        return Err(ForgeError::PatternTooSmall(t.n()));
    }
    if !is_three_connected(t) {
        return Err(ForgeError::NotThreeConnected);
    }
    if s == 0 {
        return Err(ForgeError::ZeroSetSize);
    }
    let (u, v) = t.edges()[0];
    let t_prime_vertices: Vec<usize> = (0..t.n()).filter(|&w| w != u && w != v).collect();
    let attach_map: Vec<(bool, bool)> =
        t_prime_vertices.iter().map(|&w| (t.has_edge(w, u), t.has_edge(w, v))).collect();
    let width = t_prime_vertices.len() * s;
    let n = g.n();
    let mut edges = g.edges().to_vec();
    let mut per_edge_sets = Vec::with_capacity(g.edge_count());
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        let base = n + j * width;
        let sets: Vec<Vec<usize>> =
            (0..t_prime_vertices.len()).map(|i| (base + i * s..base + (i + 1) * s).collect()).collect();
        for (i, &wi) in t_prime_vertices.iter().enumerate() {
            let (to_a, to_b) = attach_map[i];
            for &x in &sets[i] {
                if to_a {
                    edges.push((a, x));
                }
                if to_b {
                    edges.push((b, x));
                }
            }
            for (i2, &wj) in t_prime_vertices.iter().enumerate().skip(i + 1) {
                if t.has_edge(wi, wj) {
                    for &x in &sets[i] {
                        edges.extend(sets[i2].iter().map(|&y| (x, y)));
                    }
                }
            }
        }
        per_edge_sets.push(sets);
    }
    let host = Graph::from_edges(n + g.edge_count() * width, edges).expect("gadget edges are in range");
    Ok(BlowupGadget { host, removed_edge: (u, v), t_prime_vertices, per_edge_sets, attach_map })
}

impl BlowupGadget {
    /// Copies of `t` through edge `j` of the original graph that use only
    /// that edge's attached sets besides its endpoints.
    pub fn external_copies(&self, g: &Graph, t: &Graph, j: usize) -> u64 {
        let (a, b) = g.edges()[j];
        let mut keep = vec![a, b];
        keep.extend(self.per_edge_sets[j].iter().flatten());
        let local = self.host.induced(&keep);
        enumerate_copies(t, &local).iter().filter(|c| c.edges.contains(&(0, 1))).count() as u64
    }

    /// The host with the original graph's edges removed.
    pub fn outer_part(&self, g: &Graph) -> Graph {
        self.host.without_edges(g.edges())
    }
}
