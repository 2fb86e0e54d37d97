use std::collections::VecDeque;

use crate::graph::Graph;

/// Maximum number of internally vertex-disjoint `s`–`t` paths, stopping
/// early once `limit` is reached. `s` and `t` must be distinct and
/// nonadjacent.
///
/// Unit-capacity augmenting paths on the split graph: vertex `v` becomes
/// `v_in = 2v -> v_out = 2v + 1` with capacity 1, each edge `uv` becomes
/// `u_out -> v_in` and `v_out -> u_in`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.order();
    let nodes = 2 * n;
    let mut cap = vec![0i8; nodes * nodes];
    let idx = |a: usize, b: usize| a * nodes + b;
    for v in 0..n {
        if v != s && v != t {
            cap[idx(2 * v, 2 * v + 1)] = 1;
        }
        for u in g.adj(v) {
            cap[idx(2 * v + 1, 2 * u)] = 1;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; nodes];
    let mut queue = VecDeque::with_capacity(nodes);
    while flow < limit {
        parent.fill(usize::MAX);
        parent[source] = source;
        queue.clear();
        queue.push_back(source);
        'bfs: while let Some(a) = queue.pop_front() {
            for b in 0..nodes {
                if parent[b] == usize::MAX && cap[idx(a, b)] > 0 {
                    parent[b] = a;
                    if b == sink {
                        break 'bfs;
                    }
                    queue.push_back(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            cap[idx(a, b)] -= 1;
            cap[idx(b, a)] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// `κ(G)`: `n − 1` for complete graphs, 0 for disconnected graphs and
/// `n <= 1`, otherwise the minimum vertex cut size.
///
/// The smallest label outside a minimum cut is at most `κ`, and every
/// vertex separated from it has a larger label, so only nonadjacent pairs
/// `i < j` with `i <= κ` need a flow computation.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().unwrap();
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// `κ(G) >= k`, with early exits on order and degree.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.order();
    if n <= k || g.min_degree().unwrap_or(0) < k {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    (0..k).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) || local_connectivity(g, i, j, k) >= k))
}
