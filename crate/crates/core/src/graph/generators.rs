use super::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi `G(n, p)`; pairs are visited in lexicographic order and each is
/// kept with probability `p`. The same seed always yields the same graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted_unchecked(n, edges)
}

pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    complete_multipartite(&vec![1; n])
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Star `K_{1,r}` with centre 0.
pub fn star(r: usize) -> Graph {
    Graph::from_edges(r + 1, (1..=r).map(|i| (0, i))).unwrap()
}

/// `k` disjoint edges.
pub fn matching(k: usize) -> Graph {
    Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// Complete multipartite graph; vertices are numbered part by part.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    assert!(!sizes.is_empty(), "need at least one part");
    let mut part = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted_unchecked(n, edges)
}

/// `h`-blow-up: vertex `x` of `t` becomes vertices `x*h .. x*h + h`, and every
/// edge becomes a complete bipartite join.
pub fn blowup(t: &Graph, h: usize) -> Graph {
    assert!(h >= 1, "blow-up factor must be positive");
    let mut edges = Vec::with_capacity(t.edge_count() * h * h);
    for &(x, y) in t.edges() {
        for i in 0..h {
            for j in 0..h {
                edges.push((x * h + i, y * h + j));
            }
        }
    }
    Graph::from_edges(t.n() * h, edges).unwrap()
}
