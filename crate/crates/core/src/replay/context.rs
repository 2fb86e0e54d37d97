use std::ops::ControlFlow;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::cycles::{for_each_longest_cycle, Cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Whether a precondition of a claim was checked, and how it came out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Verified,
    Failed,
    Unchecked,
}

impl From<Option<bool>> for CheckStatus {
    fn from(v: Option<bool>) -> Self {
        match v {
            Some(true) => CheckStatus::Verified,
            Some(false) => CheckStatus::Failed,
            None => CheckStatus::Unchecked,
        }
    }
}

/// Facts about the graph and the chosen `(C, h)` that claims rely on.
/// `None` means the fact was neither computed nor supplied.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ContextFacts {
    /// `C` is a longest cycle.
    pub cycle_is_longest: Option<bool>,
    /// `d(h)` is maximum over all longest cycles and vertices off them.
    pub degree_is_maximum: Option<bool>,
    pub p2_kp1_free: Option<bool>,
    pub one_tough: Option<bool>,
}

/// The objects built from a graph, an oriented cycle `C` and a vertex `h`
/// off it: the neighbours `v_1..v_d` of `h` in cycle order, their
/// successors `u_i = v_i⁺`, the predecessors `w_i = v_{i+1}⁻` and
/// `U = {u_1..u_d}`.
///
/// Lists are stored 0-based (`v[0]` is `v_1`); reports print 1-based
/// indices. Index arithmetic is modulo `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofContext {
    #[serde(skip)]
    pub g: Graph,
    pub cycle: Cycle,
    pub h: usize,
    pub k: usize,
    pub d: usize,
    pub v: Vec<usize>,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub u_set: VertexSet,
    pub facts: ContextFacts,
    #[serde(skip)]
    pos: Vec<usize>,
}

const OFF: usize = usize::MAX;

/// Builds the context for `(C, h)` with parameter `k`.
///
/// Fails when `h` lies on `C`, when `h` has a neighbour off `C` (so `C`
/// does not dominate the edges at `h`), or when `h` is isolated.
pub fn build_context(g: &Graph, c: &Cycle, h: usize, k: usize) -> Result<ProofContext> {
    c.validate(g)?;
    if h >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: h,
            n: g.order(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if c.contains(h) {
        return Err(Error::InvalidContext(format!("h = {h} lies on the cycle")));
    }
    let on_cycle = c.vertex_set();
    if let Some(y) = g.adj(h).difference(on_cycle).min() {
        return Err(Error::InvalidContext(format!(
            "neighbour {y} of h = {h} is off the cycle"
        )));
    }
    let d = g.degree(h);
    if d == 0 {
        return Err(Error::InvalidContext(format!("h = {h} has no neighbours")));
    }
    let mut pos = vec![OFF; g.order()];
    for (i, &x) in c.vertices().iter().enumerate() {
        pos[x] = i;
    }
    let mut v = g.adj(h).to_vec();
    v.sort_by_key(|&x| pos[x]);
    let len = c.len();
    let at = |p: usize| c.vertices()[p % len];
    let u: Vec<usize> = v.iter().map(|&x| at(pos[x] + 1)).collect();
    let w: Vec<usize> = (0..d).map(|i| at(pos[v[(i + 1) % d]] + len - 1)).collect();
    let u_set = u.iter().collect();
    Ok(ProofContext {
        g: g.clone(),
        cycle: c.clone(),
        h,
        k,
        d,
        v,
        u,
        w,
        u_set,
        facts: ContextFacts::default(),
        pos,
    })
}

impl ProofContext {
    pub fn with_facts(mut self, facts: ContextFacts) -> Self {
        self.facts = facts;
        self
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn on_cycle(&self, x: usize) -> bool {
        self.pos.get(x).is_some_and(|&p| p != OFF)
    }

    /// `x⁺`; `x` must lie on the cycle.
    pub fn succ(&self, x: usize) -> usize {
        self.cycle.vertices()[(self.pos[x] + 1) % self.cycle_len()]
    }

    /// `x⁻`; `x` must lie on the cycle.
    pub fn pred(&self, x: usize) -> usize {
        let len = self.cycle_len();
        self.cycle.vertices()[(self.pos[x] + len - 1) % len]
    }

    /// `a →C b`: from `a` to `b` along the orientation, both included.
    pub fn arc_forward(&self, a: usize, b: usize) -> Vec<usize> {
        let len = self.cycle_len();
        let steps = (self.pos[b] + len - self.pos[a]) % len;
        (0..=steps)
            .map(|t| self.cycle.vertices()[(self.pos[a] + t) % len])
            .collect()
    }

    /// `a ←C b`: from `a` to `b` against the orientation, both included.
    pub fn arc_backward(&self, a: usize, b: usize) -> Vec<usize> {
        let mut arc = self.arc_forward(b, a);
        arc.reverse();
        arc
    }

    /// `N(h)`.
    pub fn nh(&self) -> VertexSet {
        self.g.adj(self.h)
    }

    /// `N(U)`, excluding `U` itself.
    pub fn nu(&self) -> VertexSet {
        self.g.neighbors_of_set(self.u_set)
    }

    /// `e(U, N(U))`.
    pub fn e_u_nu(&self) -> usize {
        self.g.edges_between(self.u_set, self.nu())
    }

    /// 0-based index `i` with `u[i] == x`.
    pub fn u_index(&self, x: usize) -> Option<usize> {
        self.u.iter().position(|&y| y == x)
    }

    /// Relabels indices so that old index `shift` becomes index 0.
    pub fn rotated(&self, shift: usize) -> ProofContext {
        let mut out = self.clone();
        if self.d > 0 {
            let s = shift % self.d;
            out.v.rotate_left(s);
            out.u.rotate_left(s);
            out.w.rotate_left(s);
        }
        out
    }
}

/// A longest cycle and a vertex off it whose degree is as large as
/// possible over all such pairs. Ties go to the lexicographically first
/// canonical cycle, then to the smallest vertex. `None` when `g` is
/// hamiltonian or acyclic.
pub fn choose_cycle_and_h(g: &Graph) -> Result<Option<(Cycle, usize)>> {
    choose_cycle_and_h_with(g, &Limits::default())
}

pub fn choose_cycle_and_h_with(g: &Graph, limits: &Limits) -> Result<Option<(Cycle, usize)>> {
    let mut best: Option<(usize, Cycle, usize)> = None;
    let max_possible = g.max_degree().unwrap_or(0);
    let len = for_each_longest_cycle(g, limits, |c| {
        if c.len() == g.order() {
            return ControlFlow::Break(());
        }
        let off = g.vertices().difference(c.vertex_set());
        for h in off {
            let d = g.degree(h);
            if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
                best = Some((d, c.clone(), h));
            }
        }
        if best.as_ref().is_some_and(|(bd, _, _)| *bd == max_possible) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if len == Some(g.order()) {
        return Ok(None);
    }
    Ok(best.map(|(_, c, h)| (c, h)))
}
