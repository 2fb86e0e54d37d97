//! Exact hamiltonian and longest-cycle solvers, longest-cycle enumeration
//! and edge-dominating-cycle checks.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::is_k_connected;
use crate::limits::{Limits, Meter};

/// Largest order handled by the Held–Karp hamiltonicity table.
pub const HELD_KARP_MAX_N: usize = 24;
/// Largest order for which the circumference comes from the subset table.
pub const SUBSET_DP_MAX_N: usize = 20;

/// A simple cycle in canonical form: the first vertex is the minimum and
/// the second is smaller than the last. The stored order is the cycle's
/// orientation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates `seq` against `g` and stores it canonically.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Cycle> {
        let cycle = Cycle::from_sequence(seq)?;
        cycle.validate(g)?;
        Ok(cycle)
    }

    /// Canonicalises without checking edges.
    pub fn from_sequence(seq: Vec<usize>) -> Result<Cycle> {
        if seq.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {}",
                seq.len()
            )));
        }
        let set: VertexSet = seq.iter().filter(|&&v| v < 64).collect();
        if set.len() != seq.len() {
            return Err(Error::InvalidCycle(format!(
                "repeated or out-of-range vertex in {seq:?}"
            )));
        }
        Ok(Cycle {
            vertices: canonicalize(seq),
        })
    }

    /// Checks edges, distinctness, range and canonical form against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let seq = &self.vertices;
        let l = seq.len();
        if l < 3 {
            return Err(Error::InvalidCycle("fewer than 3 vertices".into()));
        }
        if let Some(&v) = seq.iter().find(|&&v| v >= g.order()) {
            return Err(Error::InvalidCycle(format!("vertex {v} not in graph")));
        }
        let set: VertexSet = seq.iter().collect();
        if set.len() != l {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..l {
            let (a, b) = (seq[i], seq[(i + 1) % l]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidCycle(format!("{a}{b} is not an edge")));
            }
        }
        if seq[0] != set.min().unwrap() || seq[1] > seq[l - 1] {
            return Err(Error::InvalidCycle("not in canonical form".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// `x⁺` along the stored orientation.
    pub fn successor(&self, v: usize) -> Option<usize> {
        let i = self.position(v)?;
        Some(self.vertices[(i + 1) % self.len()])
    }

    /// `x⁻` along the stored orientation.
    pub fn predecessor(&self, v: usize) -> Option<usize> {
        let i = self.position(v)?;
        Some(self.vertices[(i + self.len() - 1) % self.len()])
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.vertices)
    }
}

impl TryFrom<Vec<usize>> for Cycle {
    type Error = Error;
    fn try_from(seq: Vec<usize>) -> Result<Cycle> {
        Cycle::from_sequence(seq)
    }
}

impl From<Cycle> for Vec<usize> {
    fn from(c: Cycle) -> Vec<usize> {
        c.vertices
    }
}

/// Rotates the minimum vertex to the front and reverses if needed so the
/// second vertex is smaller than the last.
pub fn canonicalize(mut seq: Vec<usize>) -> Vec<usize> {
    if seq.is_empty() {
        return seq;
    }
    let (imin, _) = seq.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
    seq.rotate_left(imin);
    let l = seq.len();
    if l > 2 && seq[1] > seq[l - 1] {
        seq[1..].reverse();
    }
    seq
}

fn is_forest(g: &Graph) -> bool {
    g.size() + g.components().len() == g.order()
}

/// Some hamiltonian cycle, or `None` after an exhaustive proof that none
/// exists. Held–Karp up to [`HELD_KARP_MAX_N`] vertices, backtracking above.
pub fn find_hamiltonian_cycle(g: &Graph) -> Result<Option<Cycle>> {
    find_hamiltonian_cycle_with(g, &Limits::default())
}

pub fn find_hamiltonian_cycle_with(g: &Graph, limits: &Limits) -> Result<Option<Cycle>> {
    limits.check_now()?;
    if g.order() <= HELD_KARP_MAX_N {
        hamiltonian_cycle_held_karp(g)
    } else {
        hamiltonian_cycle_backtrack(g, limits)
    }
}

/// Held–Karp over subsets containing vertex 0: `table[S]` is the set of
/// endpoints `v` such that some path from 0 covers exactly `S ∪ {0}` and
/// ends at `v`.
pub fn hamiltonian_cycle_held_karp(g: &Graph) -> Result<Option<Cycle>> {
    let n = g.order();
    if n > HELD_KARP_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "Held–Karp table for {n} vertices exceeds the limit of {HELD_KARP_MAX_N}"
        )));
    }
    if n < 3 || g.min_degree().unwrap_or(0) < 2 {
        return Ok(None);
    }
    // Index bit i-1 stands for vertex i.
    let rest = n - 1;
    let size = 1usize << rest;
    let mut table = vec![0u32; size];
    table[0] = 1;
    let adj: Vec<u32> = (0..n).map(|v| g.adj(v).bits() as u32).collect();
    for s in 1..size {
        let mut ends = 0u32;
        let mut bits = s;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if table[s & !(1 << b)] & adj[b + 1] != 0 {
                ends |= 1 << (b + 1);
            }
        }
        table[s] = ends;
    }
    let full = size - 1;
    let closing = table[full] & adj[0];
    if closing == 0 {
        return Ok(None);
    }
    let mut cur = closing.trailing_zeros() as usize;
    let mut s = full;
    let mut path = vec![cur];
    while cur != 0 {
        let prev = s & !(1 << (cur - 1));
        let u = (table[prev] & adj[cur]).trailing_zeros() as usize;
        path.push(u);
        s = prev;
        cur = u;
    }
    Cycle::new(g, path).map(Some)
}

/// Depth-first hamiltonicity with degree, 2-connectivity and reachability
/// cutoffs.
pub fn hamiltonian_cycle_backtrack(g: &Graph, limits: &Limits) -> Result<Option<Cycle>> {
    let n = g.order();
    if n > limits.cycle_max_n {
        return Err(Error::ResourceLimit(format!(
            "backtracking on {n} vertices exceeds the limit of {}",
            limits.cycle_max_n
        )));
    }
    if n < 3 || g.min_degree().unwrap_or(0) < 2 || !is_k_connected(g, 2) {
        return Ok(None);
    }
    let mut found = None;
    let mut search = CycleSearch::new(g, n, limits);
    search.run_from(0, &mut |c: &[usize]| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    })?;
    found.map(|seq| Cycle::new(g, seq)).transpose()
}

/// Depth-first enumeration of cycles of one length in canonical form.
///
/// Each cycle is generated once, from its minimum vertex, with the second
/// vertex below the last. Starts and extensions are tried in increasing
/// order, so cycles come out in lexicographic order.
struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    meter: Meter<'a>,
    path: Vec<usize>,
}

impl<'a> CycleSearch<'a> {
    fn new(g: &'a Graph, len: usize, limits: &'a Limits) -> Self {
        CycleSearch {
            g,
            len,
            meter: limits.meter(),
            path: Vec::with_capacity(len),
        }
    }

    /// Runs every start vertex; returns `true` if the visitor stopped early.
    fn run<F>(&mut self, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for s in 0..self.g.order() {
            if self.g.order() - s < self.len {
                break;
            }
            if self.run_from(s, visit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn run_from<F>(&mut self, s: usize, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let avail = self.g.vertices().difference(VertexSet::full(s + 1));
        self.path.clear();
        self.path.push(s);
        self.extend(s, avail, visit)
    }

    fn extend<F>(&mut self, cur: usize, avail: VertexSet, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.meter.tick()?;
        let start = self.path[0];
        let need = self.len - self.path.len();
        if need == 0 {
            if self.g.has_edge(cur, start) && self.path[1] < self.path[self.len - 1] {
                return Ok(visit(&self.path).is_break());
            }
            return Ok(false);
        }
        let reach = self.g.reachable(cur, avail.with(cur)).without(cur);
        if reach.len() < need || reach.is_disjoint(self.g.adj(start)) {
            return Ok(false);
        }
        let mut next = self.g.adj(cur).intersection(avail);
        if need == 1 {
            next = next.intersection(self.g.adj(start));
            if self.path.len() >= 2 {
                next = next.difference(VertexSet::full(self.path[1] + 1));
            }
        }
        for v in next {
            self.path.push(v);
            let stop = self.extend(v, avail.without(v), visit)?;
            self.path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Visits every cycle of length `len` in lexicographic canonical order
/// until `visit` breaks. Returns `true` if it broke.
pub fn for_each_cycle_of_length<F>(
    g: &Graph,
    len: usize,
    limits: &Limits,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(&Cycle) -> ControlFlow<()>,
{
    limits.check_now()?;
    if len < 3 || len > g.order() {
        return Ok(false);
    }
    let mut search = CycleSearch::new(g, len, limits);
    search.run(&mut |seq: &[usize]| {
        visit(&Cycle {
            vertices: seq.to_vec(),
        })
    })
}

/// Length of a longest cycle, `None` for forests.
pub fn circumference(g: &Graph) -> Result<Option<usize>> {
    circumference_with(g, &Limits::default())
}

pub fn circumference_with(g: &Graph, limits: &Limits) -> Result<Option<usize>> {
    Ok(find_longest_cycle_with(g, limits)?.map(|c| c.len()))
}

pub fn find_longest_cycle(g: &Graph) -> Result<Option<Cycle>> {
    find_longest_cycle_with(g, &Limits::default())
}

/// A maximum-length cycle, exact. Subset table up to [`SUBSET_DP_MAX_N`]
/// vertices; above that, backtracking over target lengths from `n` down.
pub fn find_longest_cycle_with(g: &Graph, limits: &Limits) -> Result<Option<Cycle>> {
    limits.check_now()?;
    if is_forest(g) {
        return Ok(None);
    }
    if g.order() <= SUBSET_DP_MAX_N {
        return Ok(longest_cycle_subset_dp(g));
    }
    if g.order() > limits.cycle_max_n {
        return Err(Error::ResourceLimit(format!(
            "longest-cycle search on {} vertices exceeds the limit of {}",
            g.order(),
            limits.cycle_max_n
        )));
    }
    for len in (3..=g.order()).rev() {
        let mut found = None;
        for_each_cycle_of_length(g, len, limits, |c| {
            found = Some(c.clone());
            ControlFlow::Break(())
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// `table[S]` holds the endpoints of paths that start at `min(S)` and cover
/// exactly `S`; `S` carries a cycle when an endpoint is adjacent to
/// `min(S)` and `|S| >= 3`. Returns the cycle on the numerically first
/// vertex set of maximum size.
fn longest_cycle_subset_dp(g: &Graph) -> Option<Cycle> {
    let n = g.order();
    let size = 1usize << n;
    let adj: Vec<u32> = (0..n).map(|v| g.adj(v).bits() as u32).collect();
    let mut table = vec![0u32; size];
    let mut best: Option<(usize, usize)> = None;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        if s == 1 << low {
            table[s] = s as u32;
            continue;
        }
        let mut ends = 0u32;
        let mut bits = s & !(1 << low);
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if table[s & !(1 << v)] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        table[s] = ends;
        let count = s.count_ones() as usize;
        if count >= 3 && ends & adj[low] != 0 && best.is_none_or(|(c, _)| count > c) {
            best = Some((count, s));
        }
    }
    let (_, set) = best?;
    let low = set.trailing_zeros() as usize;
    let mut cur = (table[set] & adj[low]).trailing_zeros() as usize;
    let mut s = set;
    let mut path = vec![cur];
    while cur != low {
        let prev = s & !(1 << cur);
        let u = (table[prev] & adj[cur]).trailing_zeros() as usize;
        path.push(u);
        s = prev;
        cur = u;
    }
    Some(Cycle::from_sequence(path).expect("table reconstruction yields a simple cycle"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LongestCycles {
    /// Circumference, `None` for forests.
    pub length: Option<usize>,
    pub cycles: Vec<Cycle>,
    /// More longest cycles exist than were returned.
    pub truncated: bool,
}

/// All longest cycles in canonical lexicographic order, at most `cap`.
pub fn enumerate_longest_cycles(g: &Graph, cap: usize) -> Result<LongestCycles> {
    enumerate_longest_cycles_with(g, cap, &Limits::default())
}

pub fn enumerate_longest_cycles_with(
    g: &Graph,
    cap: usize,
    limits: &Limits,
) -> Result<LongestCycles> {
    let mut cycles = Vec::new();
    let mut truncated = false;
    let length = for_each_longest_cycle(g, limits, |c| {
        if cycles.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        cycles.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(LongestCycles {
        length,
        cycles,
        truncated,
    })
}

/// Streams longest cycles until `visit` breaks; returns the circumference.
pub fn for_each_longest_cycle<F>(g: &Graph, limits: &Limits, visit: F) -> Result<Option<usize>>
where
    F: FnMut(&Cycle) -> ControlFlow<()>,
{
    let Some(len) = circumference_with(g, limits)? else {
        return Ok(None);
    };
    for_each_cycle_of_length(g, len, limits, visit)?;
    Ok(Some(len))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeDominance {
    pub holds: bool,
    /// A component of `G − V(C)` with at least two vertices.
    pub offending_component: Option<VertexSet>,
}

/// Whether every component of `G − V(C)` is a single vertex.
pub fn is_edge_dominating(g: &Graph, c: &Cycle) -> Result<EdgeDominance> {
    c.validate(g)?;
    let outside = g.vertices().difference(c.vertex_set());
    let offending = g
        .components_within(outside)
        .into_iter()
        .find(|comp| comp.len() >= 2);
    Ok(EdgeDominance {
        holds: offending.is_none(),
        offending_component: offending,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle_graph, path_graph, petersen, star};

    #[test]
    fn canonical_form() {
        assert_eq!(canonicalize(vec![3, 1, 2, 0]), vec![0, 2, 1, 3]);
        assert_eq!(canonicalize(vec![2, 0, 1]), vec![0, 1, 2]);
        assert_eq!(canonicalize(vec![0, 2, 1]), vec![0, 1, 2]);
        let k4 = complete(4).unwrap();
        assert!(Cycle::new(&k4, vec![0, 1]).is_err());
        assert!(Cycle::new(&k4, vec![0, 1, 1]).is_err());
        assert!(Cycle::new(&path_graph(3).unwrap(), vec![0, 1, 2]).is_err());
        let c = Cycle::new(&k4, vec![2, 3, 0, 1]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
        assert_eq!(c.successor(3), Some(0));
        assert_eq!(c.predecessor(0), Some(3));
    }

    #[test]
    fn hamiltonian_examples() {
        let c5 = cycle_graph(5).unwrap();
        let h = find_hamiltonian_cycle(&c5).unwrap().unwrap();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(
            find_hamiltonian_cycle(&complete(4).unwrap())
                .unwrap()
                .unwrap()
                .len(),
            4
        );
        assert!(find_hamiltonian_cycle(&petersen()).unwrap().is_none());
        assert!(hamiltonian_cycle_backtrack(&petersen(), &Limits::default())
            .unwrap()
            .is_none());
        assert!(find_hamiltonian_cycle(&complete(2).unwrap())
            .unwrap()
            .is_none());
        assert!(find_hamiltonian_cycle(&Graph::empty(0).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn longest_examples() {
        assert!(find_longest_cycle(&star(5).unwrap()).unwrap().is_none());
        assert_eq!(circumference(&petersen()).unwrap(), Some(9));
        let mut chorded = cycle_graph(5).unwrap().edges().collect::<Vec<_>>();
        chorded.push((0, 2));
        let g = Graph::from_edges(5, chorded).unwrap();
        assert_eq!(circumference(&g).unwrap(), Some(5));
    }

    #[test]
    fn longest_backtracking_matches_table() {
        let limits = Limits::default();
        for g in [petersen(), complete(5).unwrap(), cycle_graph(8).unwrap()] {
            let table = longest_cycle_subset_dp(&g).unwrap().len();
            let mut by_search = None;
            for len in (3..=g.order()).rev() {
                if for_each_cycle_of_length(&g, len, &limits, |_| ControlFlow::Break(())).unwrap() {
                    by_search = Some(len);
                    break;
                }
            }
            assert_eq!(Some(table), by_search);
        }
    }

    #[test]
    fn enumeration_counts() {
        let r = enumerate_longest_cycles(&cycle_graph(6).unwrap(), 10).unwrap();
        assert_eq!((r.length, r.cycles.len(), r.truncated), (Some(6), 1, false));
        let r = enumerate_longest_cycles(&complete(4).unwrap(), 10).unwrap();
        assert_eq!(r.cycles.len(), 3);
        let r = enumerate_longest_cycles(&complete(4).unwrap(), 2).unwrap();
        assert_eq!((r.cycles.len(), r.truncated), (2, true));
        let mut sorted = r.cycles.clone();
        sorted.sort();
        assert_eq!(sorted, r.cycles);
    }

    #[test]
    fn edge_domination() {
        let c6 = cycle_graph(6).unwrap();
        let ham = find_hamiltonian_cycle(&c6).unwrap().unwrap();
        assert!(is_edge_dominating(&c6, &ham).unwrap().holds);

        let mut edges: Vec<_> = c6.edges().collect();
        edges.push((0, 6));
        let pendant = Graph::from_edges(7, edges.clone()).unwrap();
        let c = Cycle::new(&pendant, (0..6).collect()).unwrap();
        assert!(is_edge_dominating(&pendant, &c).unwrap().holds);

        edges.push((6, 7));
        let tail = Graph::from_edges(8, edges).unwrap();
        let c = Cycle::new(&tail, (0..6).collect()).unwrap();
        let r = is_edge_dominating(&tail, &c).unwrap();
        assert!(!r.holds);
        assert_eq!(r.offending_component.unwrap().to_vec(), vec![6, 7]);

        let bogus = Cycle::from_sequence(vec![0, 2, 4]).unwrap();
        assert!(is_edge_dominating(&c6, &bogus).is_err());
    }
}
