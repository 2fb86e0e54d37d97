//! Brute-force reference implementations. Each works from `has_edge` alone
//! so it shares no code path with the library algorithm it checks.
#![allow(dead_code)]

use std::ops::ControlFlow;

use hamtough::cycles::for_each_cycle_of_length;
use hamtough::harness::labeled_graph_from_mask;
use hamtough::replay::{build_context, run_claims, ClaimReport};
use hamtough::{Cycle, Graph, Limits, Rational};

pub fn adjacency(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

/// Components of the subgraph induced on `alive`, by repeated flood fill.
pub fn components(adj: &[u64], alive: u64) -> usize {
    let mut left = alive;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut frontier = left & left.wrapping_neg();
        let mut seen = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & alive & !seen;
            seen |= new;
            frontier |= new;
        }
        left &= !seen;
    }
    count
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Minimum of `|S| / ω(G−S)` over all `2^n` subsets with `ω >= 2`; `None`
/// when no subset disconnects (complete graphs).
pub fn brute_toughness(g: &Graph) -> Option<Rational> {
    let adj = adjacency(g);
    let n = g.order();
    let mut best: Option<Rational> = None;
    for s in 0..=full(n) {
        let c = components(&adj, full(n) & !s);
        if c >= 2 {
            let r = Rational::new(s.count_ones() as i64, c as i64).unwrap();
            if best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        }
    }
    best
}

/// `|S| >= ω(G−S)` for every disconnecting `S`.
pub fn brute_one_tough(g: &Graph) -> bool {
    brute_toughness(g).is_none_or(|t| t >= Rational::integer(1))
}

pub fn brute_alpha(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0..=full(g.order()))
        .filter(|&s| {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & s != 0 {
                    return false;
                }
            }
            true
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest `S` leaving `G−S` disconnected or with one vertex; `n − 1` for
/// complete graphs.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let adj = adjacency(g);
    let mut best = n - 1;
    for s in 0..=full(n) {
        let size = s.count_ones() as usize;
        if size < best && n - size >= 2 && components(&adj, full(n) & !s) >= 2 {
            best = size;
        }
    }
    best
}

fn subsets_of_size(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    // Visits k-subsets of {0..n} until `f` returns false.
    fn rec(start: usize, n: usize, k: usize, acc: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if k == 0 {
            return f(acc);
        }
        (start..n).all(|v| n - v < k || rec(v + 1, n, k - 1, acc | 1 << v, f))
    }
    rec(0, n, k, 0, &mut f)
}

/// No `(k+2)`-subset induces exactly one edge.
pub fn naive_p2_kp1_free(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n < k + 2 {
        return true;
    }
    let adj = adjacency(g);
    subsets_of_size(n, k + 2, |s| {
        let mut edges = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            edges += (adj[v] & rest).count_ones();
        }
        edges != 1
    })
}

/// Every simple cycle, each listed once as `[min, ..]` with the second
/// vertex smaller than the last.
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let n = g.order();
    let mut out = Vec::new();
    fn walk(
        adj: &[u64],
        start: usize,
        path: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && adj[last] >> start & 1 == 1 && path[1] < last {
            out.push(path.clone());
        }
        let mut next = adj[last] & !used & !((1u64 << (start + 1)) - 1);
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(v);
            walk(adj, start, path, used | 1 << v, out);
            path.pop();
        }
    }
    for s in 0..n {
        walk(&adj, s, &mut vec![s], 1 << s, &mut out);
    }
    out
}

pub fn brute_circumference(g: &Graph) -> Option<usize> {
    all_cycles(g).iter().map(Vec::len).max()
}

/// Every component of `G − V(C)` is a single vertex, i.e. no edge avoids `C`.
pub fn brute_edge_dominating(g: &Graph, cycle: &[usize]) -> bool {
    let on: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let adj = adjacency(g);
    (0..g.order()).all(|v| on >> v & 1 == 1 || adj[v] & !on == 0)
}

/// Deterministic sample of labeled graphs on `n` vertices.
pub fn sample_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let pairs = n * n.saturating_sub(1) / 2;
    (0..count)
        .map(|_| {
            let mask = if pairs == 0 {
                0
            } else {
                rng.gen::<u64>() & ((1u64 << pairs) - 1)
            };
            labeled_graph_from_mask(n, mask)
        })
        .collect()
}

/// Runs every claim on every `(C, h)` context of `g` with `|C| = len`,
/// calling `visit` with the cycle and reports.
pub fn for_each_context_report(
    g: &Graph,
    len: usize,
    k: usize,
    mut visit: impl FnMut(&Cycle, &[ClaimReport]),
) {
    let limits = Limits::default();
    for_each_cycle_of_length(g, len, &limits, |c| {
        for h in 0..g.order() {
            if let Ok(ctx) = build_context(g, c, h, k) {
                let (reports, _) = run_claims(&ctx);
                visit(c, &reports);
            }
        }
        ControlFlow::Continue(())
    })
    .unwrap();
}
