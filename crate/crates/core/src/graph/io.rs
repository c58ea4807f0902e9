//! DIMACS-style edge lists.
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>            (1-indexed, u != v)
//! ```
//!
//! Weighted graphs use the same layout with an optional third field on each
//! edge line holding a rational weight in `[0, 1]` (default `1`).

use super::{Graph, WeightedGraph};
use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("second `p` header")]
    DuplicateHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("edge line before the `p` header")]
    EdgeBeforeHeader,
    #[error("malformed edge line: {0}")]
    MalformedEdge(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("weight {0} is not a rational in [0, 1]")]
    InvalidWeight(String),
    #[error("conflicting weights for edge {0}-{1}")]
    ConflictingWeight(usize, usize),
    #[error("unrecognised line `{0}`")]
    UnknownLine(String),
}

struct RawEdge {
    line: usize,
    u: usize,
    v: usize,
    weight: Option<Rational>,
}

fn parse_lines(text: &str, weighted: bool) -> Result<(usize, Vec<RawEdge>), ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => {}
            "p" => {
                if n.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                if rest.len() != 3 || rest[0] != "edge" {
                    return Err(err(ParseErrorKind::MalformedHeader(raw.trim().to_string())));
                }
                let count = rest[1]
                    .parse::<usize>()
                    .map_err(|_| err(ParseErrorKind::MalformedHeader(raw.trim().to_string())))?;
                // the declared edge count is informational; duplicates are merged
                rest[2].parse::<usize>().map_err(|_| err(ParseErrorKind::MalformedHeader(raw.trim().to_string())))?;
                n = Some(count);
            }
            "e" => {
                let Some(n) = n else {
                    return Err(err(ParseErrorKind::EdgeBeforeHeader));
                };
                let arity_ok = rest.len() == 2 || (weighted && rest.len() == 3);
                if !arity_ok {
                    return Err(err(ParseErrorKind::MalformedEdge(raw.trim().to_string())));
                }
                let mut ends = [0usize; 2];
                for (slot, field) in ends.iter_mut().zip(&rest[..2]) {
                    *slot = field
                        .parse::<usize>()
                        .map_err(|_| err(ParseErrorKind::MalformedEdge(raw.trim().to_string())))?;
                    if *slot == 0 || *slot > n {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex: *slot, n }));
                    }
                }
                let [u, v] = ends;
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u)));
                }
                let weight = match rest.get(2) {
                    Some(w) => {
                        let value = parse_rational(w)
                            .ok()
                            .filter(|r| !r.is_negative_or_above_one())
                            .ok_or_else(|| err(ParseErrorKind::InvalidWeight(w.to_string())))?;
                        Some(value)
                    }
                    None => None,
                };
                edges.push(RawEdge { line, u: u - 1, v: v - 1, weight });
            }
            other => return Err(err(ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }
    let n = n.ok_or(ParseError { line: last_line, kind: ParseErrorKind::MissingHeader })?;
    Ok((n, edges))
}

trait UnitInterval {
    fn is_negative_or_above_one(&self) -> bool;
}

impl UnitInterval for Rational {
    fn is_negative_or_above_one(&self) -> bool {
        self < &Rational::zero() || self > &Rational::one()
    }
}

/// Parses an unweighted graph file. Edge order and duplicates do not matter.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let (n, edges) = parse_lines(text, false)?;
    Ok(Graph::from_edges(n, edges.into_iter().map(|e| (e.u, e.v))).expect("validated while parsing"))
}

/// Parses a weighted graph file; an edge line without a weight has weight 1.
pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let (n, edges) = parse_lines(text, true)?;
    let mut weights: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for e in edges {
        let key = (e.u.min(e.v), e.u.max(e.v));
        let w = e.weight.unwrap_or_else(Rational::one);
        if let Some(prev) = weights.get(&key) {
            if prev != &w {
                return Err(ParseError { line: e.line, kind: ParseErrorKind::ConflictingWeight(key.0 + 1, key.1 + 1) });
            }
        }
        weights.insert(key, w);
    }
    Ok(WeightedGraph::new(n, weights).expect("validated while parsing"))
}

/// Canonical listing: header, then edges in sorted order, 1-indexed.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Canonical weighted listing; only positive-weight pairs are written.
pub fn write_weighted_graph(w: &WeightedGraph) -> String {
    let mut out = format!("p edge {} {}\n", w.n(), w.support_size());
    for ((u, v), weight) in w.iter() {
        let _ = writeln!(out, "e {} {} {}", u + 1, v + 1, format_rational(weight));
    }
    out
}

/// Serde adapter storing a graph as its edge-list text.
pub(crate) mod serde_graph {
    use super::{parse_graph, write_graph, Graph};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph(&text).map_err(serde::de::Error::custom)
    }
}
