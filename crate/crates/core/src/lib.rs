//! Exact analysis of toughness, forbidden `P2 ∪ kP1` subgraphs and longest
//! cycles, for checking hamiltonicity results on concrete graphs.

pub mod bitset;
pub mod cycles;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod invariants;
pub mod limits;
pub mod rational;
pub mod replay;
pub mod structure;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use cycles::Cycle;
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use graph6::{parse_edge_list, parse_graph6, write_graph6};
pub use limits::{CancelToken, Limits};
pub use rational::Rational;
