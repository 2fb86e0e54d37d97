//! Executable replay of the longest-cycle argument for hamiltonicity of
//! 1-tough `(P2 ∪ kP1)`-free graphs: the objects `C, h, v_i, u_i, w_i, U`,
//! each claim as a checkable report, and the exchange cycles that refute a
//! failing claim.

mod arithmetic;
mod claims;
mod context;
mod report;

use std::fmt::Write as _;

use serde::Serialize;

pub use arithmetic::{
    d_upper_for_bound, eval_f, final_arithmetic, final_system_solution, max_f_on_range,
};
pub use claims::{
    claim_consecutive_pair, claim_d_lower_bound, claim_neighbor_degree_lower,
    claim_nonneighbors_independent, claim_pair_index_bounds, claim_u_degree_upper,
    claim_u_independent, find_consecutive_pair, ConsecutivePair,
};
pub use context::{
    build_context, choose_cycle_and_h, choose_cycle_and_h_with, CheckStatus, ContextFacts,
    ProofContext,
};
pub use report::{
    Check, ClaimId, ClaimReport, Exchange, ExchangeKind, Precondition, Quantity, Replacement,
    ReplacementKind, Witness,
};

use crate::cycles::find_longest_cycle_with;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::invariants::is_t_tough_with;
use crate::limits::Limits;
use crate::rational::Rational;
use crate::structure::is_p2_kp1_free;

/// Runs every claim on `ctx` in proof order. The pair claims run only
/// when a consecutive pair exists.
pub fn run_claims(ctx: &ProofContext) -> (Vec<ClaimReport>, Option<ConsecutivePair>) {
    let mut out = vec![
        claim_u_independent(ctx),
        claim_nonneighbors_independent(ctx),
        claim_neighbor_degree_lower(ctx),
        claim_u_degree_upper(ctx),
        claim_d_lower_bound(ctx),
    ];
    let (rep, pair) = claim_consecutive_pair(ctx);
    out.push(rep);
    if let Some(p) = pair {
        out.push(claim_pair_index_bounds(ctx, &p));
        out.push(final_arithmetic(
            ctx.k as i64,
            ctx.d as i64,
            p.l_x as i64,
            p.r_x as i64,
        ));
    }
    (out, pair)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReplayOutcome {
    /// The graph has a hamiltonian cycle; nothing to replay.
    Hamiltonian,
    /// No cycle at all.
    Acyclic,
    /// A context could not be built, e.g. `h` has a neighbour off `C`.
    ContextUnavailable {
        reason: String,
    },
    /// A resource guard tripped.
    Undecided {
        reason: String,
    },
    Replayed,
}

/// The intermediate quantities of a replay, with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContextSummary {
    pub cycle: Vec<usize>,
    pub cycle_length: usize,
    pub h: usize,
    pub d: usize,
    pub v: Vec<usize>,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub u_set: Vec<usize>,
    pub nu: Vec<usize>,
    pub e_u_nu: usize,
    pub x: Option<usize>,
    pub l_x: Option<usize>,
    pub r_x: Option<usize>,
    /// Rotation applied to the indices before `l_x`, `r_x` were read off.
    pub index_rotation: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub graph6: String,
    pub k: usize,
    pub index_base: usize,
    pub outcome: ReplayOutcome,
    pub facts: Option<ContextFacts>,
    pub context: Option<ContextSummary>,
    pub claims: Vec<ClaimReport>,
}

impl ReplayReport {
    fn bare(g: &Graph, k: usize, outcome: ReplayOutcome) -> Self {
        ReplayReport {
            graph6: write_graph6(g),
            k,
            index_base: 1,
            outcome,
            facts: None,
            context: None,
            claims: Vec::new(),
        }
    }

    /// True when some claim produced an exchange or replacement cycle.
    pub fn any_fired(&self) -> bool {
        self.claims.iter().any(ClaimReport::fired)
    }

    pub fn claim(&self, id: ClaimId) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.claim == id)
    }

    /// Human-readable claim-by-claim rendering.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {}  k = {}", self.graph6, self.k);
        match &self.outcome {
            ReplayOutcome::Hamiltonian => {
                let _ = writeln!(s, "hamiltonian; replay vacuous");
                return s;
            }
            ReplayOutcome::Acyclic => {
                let _ = writeln!(s, "acyclic; no longest cycle");
                return s;
            }
            ReplayOutcome::ContextUnavailable { reason } => {
                let _ = writeln!(s, "no proof context: {reason}");
                return s;
            }
            ReplayOutcome::Undecided { reason } => {
                let _ = writeln!(s, "undecided: {reason}");
                return s;
            }
            ReplayOutcome::Replayed => {}
        }
        if let Some(c) = &self.context {
            let _ = writeln!(s, "C = {:?} (length {})", c.cycle, c.cycle_length);
            let _ = writeln!(s, "h = {}  d = {}", c.h, c.d);
            let _ = writeln!(s, "v = {:?}", c.v);
            let _ = writeln!(s, "u = {:?}", c.u);
            let _ = writeln!(s, "w = {:?}", c.w);
            let _ = writeln!(s, "U = {:?}", c.u_set);
            let _ = writeln!(s, "N(U) = {:?}", c.nu);
            let _ = writeln!(s, "e(U,N(U)) = {}", c.e_u_nu);
            if let (Some(x), Some(l), Some(r)) = (c.x, c.l_x, c.r_x) {
                let _ = writeln!(
                    s,
                    "x = {x}  l_x = {l}  r_x = {r}  (indices rotated by {})",
                    c.index_rotation.unwrap_or(0)
                );
            }
        }
        if let Some(f) = &self.facts {
            let show = |v: Option<bool>| CheckStatus::from(v);
            let _ = writeln!(
                s,
                "facts: longest {:?}, max degree {:?}, free {:?}, 1-tough {:?}",
                show(f.cycle_is_longest),
                show(f.degree_is_maximum),
                show(f.p2_kp1_free),
                show(f.one_tough)
            );
        }
        for c in &self.claims {
            let _ = writeln!(
                s,
                "[{}] {}",
                if c.holds { "holds" } else { "FAILS" },
                c.claim.as_str()
            );
            for chk in &c.checks {
                let _ = writeln!(s, "    {:<22} {}", chk.name, chk.holds);
            }
            for q in &c.quantities {
                let _ = writeln!(s, "    {} = {}", q.name, q.value);
            }
            for w in &c.witnesses {
                let _ = writeln!(
                    s,
                    "    witness {}: vertices {:?} edges {:?} indices {:?}",
                    w.label, w.vertices, w.edges, w.indices
                );
            }
            for e in &c.improvements {
                let _ = writeln!(
                    s,
                    "    longer cycle ({:?}): {:?}",
                    e.kind,
                    e.cycle.vertices()
                );
            }
            for r in &c.replacements {
                let _ = writeln!(
                    s,
                    "    replacement ({:?}): {:?} leaves {} (degree {}) off",
                    r.kind,
                    r.cycle.vertices(),
                    r.off_vertex,
                    r.off_degree
                );
            }
            for n in &c.notes {
                let _ = writeln!(s, "    note: {n}");
            }
        }
        s
    }
}

fn guarded<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_resource_guard() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Chooses `(C, h)`, builds the context and runs every claim.
///
/// Freeness and 1-toughness are computed and recorded as facts; a
/// resource guard on either leaves the fact unchecked. A guard on the
/// cycle search makes the whole replay undecided.
pub fn replay(g: &Graph, k: usize, limits: &Limits) -> Result<ReplayReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let undecided = |e: Error| {
        ReplayReport::bare(
            g,
            k,
            ReplayOutcome::Undecided {
                reason: e.to_string(),
            },
        )
    };
    let longest = match find_longest_cycle_with(g, limits) {
        Ok(c) => c,
        Err(e) if e.is_resource_guard() => return Ok(undecided(e)),
        Err(e) => return Err(e),
    };
    let Some(longest) = longest else {
        return Ok(ReplayReport::bare(g, k, ReplayOutcome::Acyclic));
    };
    if longest.len() == g.order() {
        return Ok(ReplayReport::bare(g, k, ReplayOutcome::Hamiltonian));
    }
    let (c, h) = match choose_cycle_and_h_with(g, limits) {
        Ok(Some(pair)) => pair,
        Ok(None) => return Ok(ReplayReport::bare(g, k, ReplayOutcome::Hamiltonian)),
        Err(e) if e.is_resource_guard() => return Ok(undecided(e)),
        Err(e) => return Err(e),
    };
    let ctx = match build_context(g, &c, h, k) {
        Ok(ctx) => ctx,
        Err(Error::InvalidContext(reason)) => {
            return Ok(ReplayReport::bare(
                g,
                k,
                ReplayOutcome::ContextUnavailable { reason },
            ))
        }
        Err(e) => return Err(e),
    };
    let facts = ContextFacts {
        cycle_is_longest: Some(true),
        degree_is_maximum: Some(true),
        p2_kp1_free: guarded(is_p2_kp1_free(g, k))?.map(|r| r.free),
        one_tough: guarded(is_t_tough_with(g, Rational::ONE, limits))?.map(|r| r.holds),
    };
    let ctx = ctx.with_facts(facts);
    let (claims, pair) = run_claims(&ctx);
    let context = ContextSummary {
        cycle: ctx.cycle.vertices().to_vec(),
        cycle_length: ctx.cycle_len(),
        h: ctx.h,
        d: ctx.d,
        v: ctx.v.clone(),
        u: ctx.u.clone(),
        w: ctx.w.clone(),
        u_set: ctx.u_set.to_vec(),
        nu: ctx.nu().to_vec(),
        e_u_nu: ctx.e_u_nu(),
        x: pair.map(|p| p.x),
        l_x: pair.map(|p| p.l_x),
        r_x: pair.map(|p| p.r_x),
        index_rotation: pair.map(|p| p.rotation),
    };
    Ok(ReplayReport {
        graph6: write_graph6(g),
        k,
        index_base: 1,
        outcome: ReplayOutcome::Replayed,
        facts: Some(facts),
        context: Some(context),
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path_graph, petersen};

    #[test]
    fn petersen_replay() {
        let r = replay(&petersen(), 3, &Limits::default()).unwrap();
        assert_eq!(r.outcome, ReplayOutcome::Replayed);
        let c = r.context.as_ref().unwrap();
        assert_eq!(c.d, 3);
        assert_eq!(c.cycle_length, 9);
        assert!(!r.any_fired());
        let f = r.facts.unwrap();
        assert_eq!(f.p2_kp1_free, Some(true));
        assert_eq!(f.one_tough, Some(true));
        assert!(r.render_text().contains("u_independent"));
        serde_json::to_string(&r).unwrap();
    }

    #[test]
    fn vacuous_outcomes() {
        let r = replay(&complete(4).unwrap(), 3, &Limits::default()).unwrap();
        assert_eq!(r.outcome, ReplayOutcome::Hamiltonian);
        assert!(r.render_text().contains("hamiltonian; replay vacuous"));
        let r = replay(&path_graph(5).unwrap(), 3, &Limits::default()).unwrap();
        assert_eq!(r.outcome, ReplayOutcome::Acyclic);
    }
}
