use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_labeled_graphs`].
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// Cheap filters applied before a graph is yielded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Prefilter {
    pub min_degree: Option<usize>,
    pub connected: bool,
}

impl Prefilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        if let Some(d) = self.min_degree {
            if g.order() > 0 && g.min_degree().unwrap_or(0) < d {
                return false;
            }
        }
        !self.connected || g.is_connected()
    }
}

/// Number of labeled graphs on `n` vertices, `2^(n(n−1)/2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The graph whose edge set is `mask`, with bit `b` standing for the
/// `b`-th pair in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`. Pairs
/// past bit 63 (only present when `n >= 12`) are absent.
pub fn labeled_graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if b < 64 && mask >> b & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            b += 1;
        }
    }
    Graph::from_rows(rows).expect("rows are symmetric by construction")
}

/// Every labeled graph on `n <= 7` vertices that passes `filter`, in mask
/// order.
pub fn enumerate_labeled_graphs(
    n: usize,
    filter: Prefilter,
) -> Result<impl Iterator<Item = Graph>> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "exhaustive enumeration supports n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )));
    }
    Ok((0..labeled_graph_count(n))
        .map(move |m| labeled_graph_from_mask(n, m))
        .filter(move |g| filter.accepts(g)))
}
