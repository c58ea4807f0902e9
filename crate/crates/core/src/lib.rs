//! Generalized Turán numbers `ex(G, T, F)`: the largest number of copies of a
//! graph `T` in an `F`-free subgraph of a host graph `G`.

pub mod cli;
pub mod gadget;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod pattern;
pub mod pipeline;
pub mod rational;
pub mod regularity;

pub use graph::{Graph, Partition, WeightedGraph};
pub use pattern::{ForbiddenFamily, PatternSpec};
pub use rational::Rational;
