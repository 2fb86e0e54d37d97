use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    /// Lexicographically smallest maximum independent set.
    pub witness: VertexSet,
}

/// `α(G)` with a deterministic witness.
pub fn independence_number(g: &Graph) -> IndependenceResult {
    let witness = max_independent_set_within(g, g.vertices());
    IndependenceResult {
        alpha: witness.len(),
        witness,
    }
}

/// Lexicographically smallest (by sorted vertex list) maximum independent
/// set of `G[within]`.
///
/// Branches on the smallest candidate, including it first, so the first
/// maximum set reached is the lexicographically smallest one; later sets
/// only replace the incumbent when strictly larger.
pub fn max_independent_set_within(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    let within = within.intersection(g.vertices());
    if !within.is_empty() {
        best = VertexSet::singleton(within.min().unwrap());
    }
    branch(g, VertexSet::EMPTY, within, &mut best);
    best
}

fn branch(g: &Graph, chosen: VertexSet, cand: VertexSet, best: &mut VertexSet) {
    let Some(v) = cand.min() else {
        if chosen.len() > best.len() {
            *best = chosen;
        }
        return;
    };
    if chosen.len() + clique_cover_bound(g, cand) <= best.len() {
        return;
    }
    branch(
        g,
        chosen.with(v),
        cand.difference(g.adj(v)).without(v),
        best,
    );
    branch(g, chosen, cand.without(v), best);
}

/// Number of cliques in a greedy clique cover of `cand`; bounds `α`.
pub(crate) fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut count = 0;
    while let Some(v) = cand.min() {
        let mut clique = VertexSet::singleton(v);
        let mut ext = g.adj(v).intersection(cand);
        while let Some(w) = ext.min() {
            clique.insert(w);
            ext = ext.intersection(g.adj(w));
        }
        cand = cand.difference(clique);
        count += 1;
    }
    count
}

/// Lexicographically smallest independent `k`-subset of `within`, if any.
pub fn independent_set_of_size(g: &Graph, within: VertexSet, k: usize) -> Option<VertexSet> {
    fn go(g: &Graph, chosen: VertexSet, cand: VertexSet, k: usize) -> Option<VertexSet> {
        if chosen.len() == k {
            return Some(chosen);
        }
        let v = cand.min()?;
        if chosen.len() + clique_cover_bound(g, cand) < k {
            return None;
        }
        go(g, chosen.with(v), cand.difference(g.adj(v)).without(v), k)
            .or_else(|| go(g, chosen, cand.without(v), k))
    }
    go(g, VertexSet::EMPTY, within.intersection(g.vertices()), k)
}

/// Every independent set of `g` (including the empty set), in
/// include-first depth-first order.
pub fn for_each_independent_set<F: FnMut(VertexSet)>(g: &Graph, mut f: F) {
    fn go<F: FnMut(VertexSet)>(g: &Graph, chosen: VertexSet, cand: VertexSet, f: &mut F) {
        let Some(v) = cand.min() else {
            f(chosen);
            return;
        };
        go(g, chosen.with(v), cand.difference(g.adj(v)).without(v), f);
        go(g, chosen, cand.without(v), f);
    }
    go(g, VertexSet::EMPTY, g.vertices(), &mut f);
}

/// Every maximal independent set of `g` (Bron–Kerbosch with pivoting on
/// the complement).
pub fn for_each_maximal_independent_set<F: FnMut(VertexSet)>(g: &Graph, mut f: F) {
    // Cliques of the complement, without building it: non-neighbours of v
    // within P are P \ N[v].
    fn go<F: FnMut(VertexSet)>(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, f: &mut F) {
        if p.is_empty() {
            if x.is_empty() {
                f(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.difference(g.adj(u)).without(u).len())
            .unwrap();
        let mut p = p;
        let mut x = x;
        for v in p.intersection(g.adj(pivot).with(pivot)) {
            let non = |s: VertexSet| s.difference(g.adj(v)).without(v);
            go(g, r.with(v), non(p), non(x), f);
            p.remove(v);
            x.insert(v);
        }
    }
    go(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut f);
}
