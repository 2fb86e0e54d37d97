//! Exact graph invariants: toughness, vertex connectivity, independence
//! number and minimum degree.

mod connectivity;
mod independence;
mod toughness;

pub use connectivity::{is_k_connected, local_connectivity, vertex_connectivity};
pub use independence::{
    for_each_independent_set, for_each_maximal_independent_set, independence_number,
    independent_set_of_size, max_independent_set_within, IndependenceResult,
};
pub use toughness::{
    is_t_tough, is_t_tough_with, toughness, toughness_with, TToughResult, Toughness,
    ToughnessResult,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `δ(G)`; undefined on the empty graph.
pub fn min_degree(g: &Graph) -> Result<usize> {
    g.min_degree()
        .ok_or_else(|| Error::InvalidParameter("minimum degree of the empty graph".into()))
}
