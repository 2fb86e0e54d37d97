//! Forbidden `P2 ∪ kP1` detection, the neighbour-count property of
//! independent sets in such graphs, and Petersen recognition.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::generators::petersen;
use crate::graph::Graph;
use crate::invariants::{
    for_each_independent_set, for_each_maximal_independent_set, independent_set_of_size,
};

/// An induced copy of `P2 ∪ kP1`: the edge `x y` plus `k` vertices that are
/// pairwise nonadjacent and nonadjacent to `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FreenessWitness {
    pub edge: (usize, usize),
    pub isolated_part: VertexSet,
}

impl FreenessWitness {
    pub fn vertices(&self) -> VertexSet {
        self.isolated_part.with(self.edge.0).with(self.edge.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FreenessResult {
    pub free: bool,
    pub witness: Option<FreenessWitness>,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "k must be at least 1 for P2 ∪ kP1".into(),
        ));
    }
    Ok(())
}

/// True iff `G[{x, y} ∪ isolated]` is exactly `P2 ∪ kP1` with the edge `xy`.
pub fn is_induced_p2_kp1(g: &Graph, x: usize, y: usize, isolated: VertexSet, k: usize) -> bool {
    x != y
        && x < g.order()
        && y < g.order()
        && isolated.is_subset(g.vertices())
        && isolated.len() == k
        && !isolated.contains(x)
        && !isolated.contains(y)
        && g.has_edge(x, y)
        && g.is_independent(isolated)
        && g.adj(x).union(g.adj(y)).is_disjoint(isolated)
}

/// Decides `(P2 ∪ kP1)`-freeness.
///
/// For each edge `xy` (in lexicographic order) the vertices outside
/// `N[x] ∪ N[y]` are searched for an independent `k`-set; the first hit is
/// returned as the witness.
pub fn is_p2_kp1_free(g: &Graph, k: usize) -> Result<FreenessResult> {
    check_k(k)?;
    for (x, y) in g.edges() {
        let undominated = g
            .vertices()
            .difference(g.adj(x))
            .difference(g.adj(y))
            .without(x)
            .without(y);
        if undominated.len() < k {
            continue;
        }
        if let Some(isolated) = independent_set_of_size(g, undominated, k) {
            return Ok(FreenessResult {
                free: false,
                witness: Some(FreenessWitness {
                    edge: (x, y),
                    isolated_part: isolated,
                }),
            });
        }
    }
    Ok(FreenessResult {
        free: true,
        witness: None,
    })
}

/// A vertex with at least one but too few neighbours in an independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NeighborBoundViolation {
    pub vertex: usize,
    pub set: VertexSet,
    pub neighbors_in_set: usize,
    /// `|X| − k + 1`.
    pub required: usize,
}

/// Largest order for which every independent set (not only the maximal
/// ones) is examined by [`neighbor_bound_violations`].
pub const ALL_INDEPENDENT_SETS_MAX_N: usize = 12;

/// Pairs `(v, X)` with `X` independent, `N(v) ∩ X ≠ ∅` and
/// `|N(v) ∩ X| < |X| − k + 1`.
///
/// In a `(P2 ∪ kP1)`-free graph no such pair exists. `X` ranges over all
/// independent sets when `n <= 12` and over maximal independent sets
/// otherwise.
pub fn neighbor_bound_violations(g: &Graph, k: usize) -> Result<Vec<NeighborBoundViolation>> {
    check_k(k)?;
    let mut out = Vec::new();
    let mut visit = |x: VertexSet| {
        if x.len() < k + 1 {
            // |X| − k + 1 <= 1 is met by any vertex with a neighbour in X.
            return;
        }
        let required = x.len() - k + 1;
        for v in 0..g.order() {
            let hits = g.adj(v).intersection(x).len();
            if hits > 0 && hits < required {
                out.push(NeighborBoundViolation {
                    vertex: v,
                    set: x,
                    neighbors_in_set: hits,
                    required,
                });
            }
        }
    };
    if g.order() <= ALL_INDEPENDENT_SETS_MAX_N {
        for_each_independent_set(g, &mut visit);
    } else {
        for_each_maximal_independent_set(g, &mut visit);
    }
    Ok(out)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.adj(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Isomorphism test against the Petersen graph.
///
/// Order, regularity, edge count and girth filter first; survivors are
/// matched against the standard labelling by backtracking.
pub fn is_petersen(g: &Graph) -> bool {
    if g.order() != 10 || g.size() != 15 || g.degrees().iter().any(|&d| d != 3) {
        return false;
    }
    if girth(g) != Some(5) {
        return false;
    }
    find_isomorphism(g, &petersen()).is_some()
}

/// A bijection `map` with `uv ∈ E(a) ⇔ map[u] map[v] ∈ E(b)`, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return None;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut VertexSet) -> bool {
        if v == a.order() {
            return true;
        }
        for w in b.vertices().difference(*used) {
            if a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used.insert(w);
            if extend(a, b, v + 1, map, used) {
                return true;
            }
            used.remove(w);
        }
        map[v] = usize::MAX;
        false
    }
    extend(a, b, 0, &mut map, &mut used).then_some(map)
}
