//! Copy counting, weighted copy mass, homomorphisms and freeness tests.

mod embed;
mod hom;

pub(crate) use embed::Matcher;
pub use embed::{count_embeddings, enumerate_copies, find_embedding, image_edges, Copy};
pub use hom::{find_homomorphism, hom_exists};

use crate::graph::{self, Graph, Partition, WeightedGraph};
use crate::rational::Rational;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum PatternError {
    #[error("invalid pattern `{0}`: expected K<r>, C<r>, P<r>, S<r>, M<k> or @<file>")]
    Invalid(String),
    #[error("cannot read pattern file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("pattern file {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: graph::ParseError,
    },
    #[error("forbidden family must be nonempty")]
    EmptyFamily,
    #[error("forbidden graph #{0} has no edges, so no spanning subgraph can avoid it")]
    EdgelessMember(usize),
}

/// The counted graph `T` together with its automorphism count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSpec {
    graph: Graph,
    aut: u64,
}

impl PatternSpec {
    pub fn new(graph: Graph) -> Self {
        let aut = count_embeddings(&graph, &graph);
        PatternSpec { graph, aut }
    }

    pub fn parse(text: &str) -> Result<Self, PatternError> {
        parse_pattern(text).map(Self::new)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertex count `t = v(T)`.
    pub fn t(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn automorphisms(&self) -> u64 {
        self.aut
    }
}

/// Finite nonempty family of forbidden graphs, each with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenFamily {
    members: Vec<Graph>,
    max_degree: usize,
    max_vertices: usize,
}

impl ForbiddenFamily {
    pub fn new(members: Vec<Graph>) -> Result<Self, PatternError> {
        if members.is_empty() {
            return Err(PatternError::EmptyFamily);
        }
        if let Some(i) = members.iter().position(|f| f.edge_count() == 0) {
            return Err(PatternError::EdgelessMember(i));
        }
        let max_degree = members.iter().map(Graph::max_degree).max().unwrap_or(0);
        let max_vertices = members.iter().map(Graph::n).max().unwrap_or(0);
        Ok(ForbiddenFamily { members, max_degree, max_vertices })
    }

    pub fn single(f: Graph) -> Result<Self, PatternError> {
        Self::new(vec![f])
    }

    /// Comma-separated pattern list, e.g. `K3,C5`.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        let members = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(parse_pattern)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(members)
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// `Δ(F)`, the largest maximum degree over the members.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `v(F)`, the largest vertex count over the members.
    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }
}

/// Parses `K<r>`, `C<r>`, `P<r>`, `S<r>` (star `K_{1,r}`), `M<k>` (`k` disjoint
/// edges) or `@<file>`.
pub fn parse_pattern(text: &str) -> Result<Graph, PatternError> {
    let s = text.trim();
    if let Some(path) = s.strip_prefix('@') {
        return read_graph_file(Path::new(path));
    }
    parse_shorthand(s).ok_or_else(|| PatternError::Invalid(text.to_string()))
}

/// Shorthand only (no files); `None` if `s` is not a shorthand.
pub fn parse_shorthand(s: &str) -> Option<Graph> {
    let mut chars = s.chars();
    let kind = chars.next()?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let r: usize = rest.parse().ok()?;
    match kind {
        'K' if r >= 1 => Some(graph::complete(r)),
        'C' if r >= 3 => Some(graph::cycle(r)),
        'P' if r >= 1 => Some(graph::path(r)),
        'S' if r >= 1 => Some(graph::star(r)),
        'M' if r >= 1 => Some(graph::matching(r)),
        _ => None,
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph, PatternError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| PatternError::Io { path: shown.clone(), source })?;
    graph::parse_graph(&text).map_err(|source| PatternError::Parse { path: shown, source })
}

/// Number of subgraphs of `g` isomorphic to `t`, each counted once:
/// injective embeddings divided by `|Aut(T)|`.
pub fn count_copies(g: &Graph, t: &PatternSpec) -> u64 {
    count_embeddings(t.graph(), g) / t.automorphisms()
}

/// `N(W, T)`: sum over copies of `T` on positive-weight pairs of the product of
/// their weights.
pub fn count_weighted(w: &WeightedGraph, t: &PatternSpec) -> Rational {
    embed::count_weighted_embeddings(t.graph(), w, t.automorphisms())
}

/// Does `g` avoid every member of `fam` as a (not necessarily induced) subgraph?
pub fn is_family_free(g: &Graph, fam: &ForbiddenFamily) -> bool {
    fam.members().iter().all(|f| find_embedding(f, g).is_none())
}

/// No member of `fam` maps homomorphically into the support of `w`.
pub fn is_hom_free(w: &WeightedGraph, fam: &ForbiddenFamily) -> bool {
    let support = w.support();
    fam.members().iter().all(|f| !hom_exists(f, &support))
}

/// Is `f` a subgraph of some blow-up of `t`? Equivalent to a homomorphism
/// `f -> t`: the map sends adjacent vertices of `f` to joined classes.
pub fn blowup_subgraph_test(f: &Graph, t: &Graph) -> bool {
    hom_exists(f, t)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("partition covers {partition} vertices but the weighted graph has {graph}")]
pub struct PartitionMismatch {
    pub partition: usize,
    pub graph: usize,
}

/// Weighted mass of the copies of `t` that use two or more vertices of one class.
pub fn same_part_copy_mass(w: &WeightedGraph, p: &Partition, t: &PatternSpec) -> Result<Rational, PartitionMismatch> {
    if p.n() != w.n() {
        return Err(PartitionMismatch { partition: p.n(), graph: w.n() });
    }
    Ok(embed::same_class_mass(t.graph(), w, p, t.automorphisms()))
}
