use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::cycles::{
    find_hamiltonian_cycle_with, find_longest_cycle_with, for_each_longest_cycle,
    is_edge_dominating, Cycle,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::harness::presets::{HypothesisPreset, PresetId};
use crate::invariants::{
    independence_number, is_k_connected, is_t_tough_with, vertex_connectivity,
};
use crate::limits::Limits;
use crate::rational::Rational;
use crate::structure::{is_p2_kp1_free, is_petersen};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisStatus {
    Held,
    Failed,
    /// A resource guard tripped.
    Undecided,
    /// Not evaluated because an earlier hypothesis failed.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisResult {
    pub name: &'static str,
    pub status: HypothesisStatus,
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    /// Vertices refuting the hypothesis: a cut for toughness, the pattern
    /// `x, y, isolated..` for freeness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    HypothesesFailed,
    ConclusionHeld,
    Counterexample,
    Undecided,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerdictWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_cycle: Option<Cycle>,
    /// A longest cycle that is not edge-dominating.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_cycle: Option<Cycle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_component: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_petersen: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub graph6: String,
    pub n: usize,
    pub preset: PresetId,
    pub k: Option<usize>,
    pub hypotheses: Vec<HypothesisResult>,
    pub hypotheses_satisfied: bool,
    /// Absent unless every hypothesis held.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion_holds: Option<bool>,
    pub status: VerdictStatus,
    pub witnesses: VerdictWitnesses,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub undecided_reason: Option<String>,
    /// Only recorded when timing is requested, so default output is
    /// byte-for-byte reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        self.status == VerdictStatus::Counterexample
    }
}

/// Per-graph settings for [`evaluate_with`].
#[derive(Debug, Clone, Default)]
pub struct EvalOptions {
    /// Size limits and cancellation; any deadline here is ignored in
    /// favour of `time_limit`.
    pub limits: Limits,
    /// Budget per graph, started when its evaluation starts.
    pub time_limit: Option<Duration>,
    pub witnesses: bool,
    pub timing: bool,
}

pub fn evaluate(g: &Graph, preset: HypothesisPreset) -> Result<Verdict> {
    evaluate_with(g, preset, &EvalOptions::default())
}

#[derive(Clone, Copy)]
enum Hyp {
    OrderAtLeast(usize),
    MinDegree {
        num: usize,
        rhs: i64,
        name: &'static str,
    },
    Connected(usize, &'static str),
    Free(usize),
    OneTough,
    AlphaAtMostKappaPlusOne,
}

#[derive(Clone, Copy)]
enum Conclusion {
    Hamiltonian,
    HamiltonianOrPetersen,
    LongestCyclesDominating,
}

fn plan(preset: HypothesisPreset) -> (Vec<Hyp>, Conclusion) {
    use Hyp::*;
    let k = preset.k.unwrap_or(0);
    let ki = k as i64;
    let free_tough = [Free(k), OneTough];
    let mut hyps = Vec::new();
    let conclusion = match preset.id {
        PresetId::LargeOrderHamiltonian => {
            hyps.push(OrderAtLeast(k * k + k + 1));
            hyps.push(MinDegree {
                num: 1,
                rhs: ki,
                name: "min_degree_at_least_k",
            });
            hyps.push(Connected(k - 1, "connectivity_at_least_k_minus_1"));
            hyps.extend(free_tough);
            Conclusion::Hamiltonian
        }
        PresetId::LongestCyclesDominating | PresetId::NoOrderFloor => {
            hyps.push(Connected(k - 1, "connectivity_at_least_k_minus_1"));
            hyps.extend(free_tough);
            if preset.id == PresetId::NoOrderFloor {
                Conclusion::Hamiltonian
            } else {
                Conclusion::LongestCyclesDominating
            }
        }
        PresetId::KConnectedQuestion => {
            hyps.push(Connected(k, "connectivity_at_least_k"));
            hyps.extend(free_tough);
            Conclusion::HamiltonianOrPetersen
        }
        PresetId::DegreeThreeHalves => {
            hyps.push(MinDegree {
                num: 2,
                rhs: 3 * ki - 3,
                name: "2_min_degree_at_least_3k_minus_3",
            });
            hyps.push(Connected(k, "connectivity_at_least_k"));
            hyps.extend(free_tough);
            Conclusion::HamiltonianOrPetersen
        }
        PresetId::DegreeSevenFifths => {
            hyps.push(MinDegree {
                num: 5,
                rhs: 7 * ki - 6,
                name: "5_min_degree_at_least_7k_minus_6",
            });
            hyps.push(Connected(k, "connectivity_at_least_k"));
            hyps.extend(free_tough);
            Conclusion::HamiltonianOrPetersen
        }
        PresetId::IndependenceBound => {
            hyps.push(Connected(3, "connectivity_at_least_3"));
            hyps.push(OneTough);
            hyps.push(AlphaAtMostKappaPlusOne);
            Conclusion::HamiltonianOrPetersen
        }
    };
    (hyps, conclusion)
}

fn hyp_name(h: Hyp) -> &'static str {
    match h {
        Hyp::OrderAtLeast(_) => "order_at_least_k2_plus_k_plus_1",
        Hyp::MinDegree { name, .. } => name,
        Hyp::Connected(_, name) => name,
        Hyp::Free(_) => "p2_kp1_free",
        Hyp::OneTough => "one_tough",
        Hyp::AlphaAtMostKappaPlusOne => "alpha_at_most_kappa_plus_1",
    }
}

struct Outcome {
    holds: bool,
    value: Option<String>,
    witness: Option<Vec<usize>>,
}

fn plain(holds: bool) -> Outcome {
    Outcome {
        holds,
        value: None,
        witness: None,
    }
}

fn check(g: &Graph, h: Hyp, limits: &Limits, witnesses: bool) -> Result<Outcome> {
    Ok(match h {
        Hyp::OrderAtLeast(m) => Outcome {
            holds: g.order() >= m,
            value: Some(g.order().to_string()),
            witness: None,
        },
        Hyp::MinDegree { num, rhs, .. } => match g.min_degree() {
            Some(delta) => Outcome {
                holds: (num * delta) as i64 >= rhs,
                value: Some(delta.to_string()),
                witness: None,
            },
            None => plain(false),
        },
        Hyp::Connected(k, _) => {
            let holds = is_k_connected(g, k);
            Outcome {
                holds,
                value: (witnesses && !holds).then(|| vertex_connectivity(g).to_string()),
                witness: None,
            }
        }
        Hyp::Free(k) => {
            let r = is_p2_kp1_free(g, k)?;
            Outcome {
                holds: r.free,
                value: None,
                witness: r.witness.filter(|_| witnesses).map(|w| {
                    let mut v = vec![w.edge.0, w.edge.1];
                    v.extend(w.isolated_part.iter());
                    v
                }),
            }
        }
        Hyp::OneTough => {
            let r = is_t_tough_with(g, Rational::ONE, limits)?;
            Outcome {
                holds: r.holds,
                value: None,
                witness: r.violating_cut.filter(|_| witnesses).map(|c| c.to_vec()),
            }
        }
        Hyp::AlphaAtMostKappaPlusOne => {
            let alpha = independence_number(g);
            let kappa = vertex_connectivity(g);
            Outcome {
                holds: alpha.alpha <= kappa + 1,
                value: Some(format!("alpha={} kappa={kappa}", alpha.alpha)),
                witness: witnesses.then(|| alpha.witness.to_vec()),
            }
        }
    })
}

fn conclude(g: &Graph, c: Conclusion, limits: &Limits, out: &mut VerdictWitnesses) -> Result<bool> {
    match c {
        Conclusion::Hamiltonian => {
            let cyc = find_hamiltonian_cycle_with(g, limits)?;
            let holds = cyc.is_some();
            out.hamiltonian_cycle = cyc;
            Ok(holds)
        }
        Conclusion::HamiltonianOrPetersen => {
            if is_petersen(g) {
                out.is_petersen = Some(true);
                return Ok(true);
            }
            out.is_petersen = Some(false);
            let cyc = find_hamiltonian_cycle_with(g, limits)?;
            let holds = cyc.is_some();
            out.hamiltonian_cycle = cyc;
            Ok(holds)
        }
        Conclusion::LongestCyclesDominating => {
            let Some(longest) = find_longest_cycle_with(g, limits)? else {
                // No cycles: the statement is vacuous.
                return Ok(true);
            };
            if longest.len() == g.order() {
                out.hamiltonian_cycle = Some(longest);
                return Ok(true);
            }
            let mut bad: Option<(Cycle, VertexSet)> = None;
            let mut inner: Result<()> = Ok(());
            for_each_longest_cycle(g, limits, |cyc| match is_edge_dominating(g, cyc) {
                Ok(r) if r.holds => ControlFlow::Continue(()),
                Ok(r) => {
                    bad = Some((cyc.clone(), r.offending_component.unwrap_or_default()));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    inner = Err(e);
                    ControlFlow::Break(())
                }
            })?;
            inner?;
            match bad {
                Some((cyc, comp)) => {
                    out.violating_cycle = Some(cyc);
                    out.offending_component = Some(comp);
                    Ok(false)
                }
                None => Ok(true),
            }
        }
    }
}

/// Evaluates hypotheses cheapest first, stopping at the first failure, and
/// the conclusion only when every hypothesis held. Resource guards give
/// `Undecided`, never a failed conclusion.
pub fn evaluate_with(g: &Graph, preset: HypothesisPreset, opts: &EvalOptions) -> Result<Verdict> {
    let start = Instant::now();
    let mut limits = opts.limits.clone();
    limits.deadline = None;
    if let Some(t) = opts.time_limit {
        limits = limits.with_time_limit(t);
    }
    let (plan_hyps, conclusion) = plan(preset);
    let mut hypotheses = Vec::with_capacity(plan_hyps.len());
    let mut failed = false;
    let mut undecided_reason: Option<String> = None;
    for h in plan_hyps {
        let name = hyp_name(h);
        if failed {
            hypotheses.push(HypothesisResult {
                name,
                status: HypothesisStatus::Skipped,
                holds: None,
                value: None,
                witness: None,
                reason: None,
            });
            continue;
        }
        match check(g, h, &limits, opts.witnesses) {
            Ok(o) => {
                failed |= !o.holds;
                hypotheses.push(HypothesisResult {
                    name,
                    status: if o.holds {
                        HypothesisStatus::Held
                    } else {
                        HypothesisStatus::Failed
                    },
                    holds: Some(o.holds),
                    value: o.value,
                    witness: o.witness,
                    reason: None,
                });
            }
            Err(e) if e.is_resource_guard() => {
                undecided_reason.get_or_insert_with(|| e.to_string());
                hypotheses.push(HypothesisResult {
                    name,
                    status: HypothesisStatus::Undecided,
                    holds: None,
                    value: None,
                    witness: None,
                    reason: Some(e.to_string()),
                });
            }
            Err(e) => return Err(e),
        }
    }
    let hypotheses_satisfied = hypotheses.iter().all(|h| h.holds == Some(true));
    let mut witnesses = VerdictWitnesses::default();
    let (conclusion_holds, status) = if failed {
        (None, VerdictStatus::HypothesesFailed)
    } else if !hypotheses_satisfied {
        (None, VerdictStatus::Undecided)
    } else {
        match conclude(g, conclusion, &limits, &mut witnesses) {
            Ok(true) => (Some(true), VerdictStatus::ConclusionHeld),
            Ok(false) => (Some(false), VerdictStatus::Counterexample),
            Err(e) if e.is_resource_guard() => {
                undecided_reason = Some(e.to_string());
                witnesses = VerdictWitnesses::default();
                (None, VerdictStatus::Undecided)
            }
            Err(e) => return Err(e),
        }
    };
    if status != VerdictStatus::Undecided {
        undecided_reason = None;
    }
    if !opts.witnesses {
        witnesses.hamiltonian_cycle = None;
    }
    Ok(Verdict {
        graph6: write_graph6(g),
        n: g.order(),
        preset: preset.id,
        k: preset.k,
        hypotheses,
        hypotheses_satisfied,
        conclusion_holds,
        status,
        witnesses,
        undecided_reason,
        wall_time_us: opts
            .timing
            .then(|| u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle_graph, petersen};

    fn preset(id: PresetId, k: usize) -> HypothesisPreset {
        HypothesisPreset::new(id, Some(k)).unwrap()
    }

    #[test]
    fn petersen_passes_three_halves_via_exception() {
        let v = evaluate(&petersen(), preset(PresetId::DegreeThreeHalves, 3)).unwrap();
        assert!(v.hypotheses_satisfied);
        assert_eq!(v.conclusion_holds, Some(true));
        assert_eq!(v.witnesses.is_petersen, Some(true));
        assert_eq!(v.status, VerdictStatus::ConclusionHeld);
    }

    #[test]
    fn vacuous_cases() {
        let v = evaluate(
            &complete(5).unwrap(),
            preset(PresetId::LargeOrderHamiltonian, 4),
        )
        .unwrap();
        assert!(!v.hypotheses_satisfied);
        assert_eq!(v.conclusion_holds, None);
        assert_eq!(v.hypotheses[0].status, HypothesisStatus::Failed);
        assert!(v.hypotheses[1..]
            .iter()
            .all(|h| h.status == HypothesisStatus::Skipped));

        let v = evaluate(
            &cycle_graph(5).unwrap(),
            preset(PresetId::LongestCyclesDominating, 4),
        )
        .unwrap();
        assert_eq!(v.status, VerdictStatus::HypothesesFailed);
        assert_eq!(v.conclusion_holds, None);
    }

    #[test]
    fn petersen_is_a_counterexample_without_the_exception() {
        // 3-connected, 1-tough, (P2 ∪ 4P1)-free, not hamiltonian.
        let v = evaluate(&petersen(), preset(PresetId::NoOrderFloor, 4)).unwrap();
        assert!(v.hypotheses_satisfied);
        assert_eq!(v.status, VerdictStatus::Counterexample);
    }

    #[test]
    fn guard_gives_undecided() {
        let opts = EvalOptions {
            limits: Limits {
                toughness_max_n: 5,
                ..Limits::default()
            },
            ..EvalOptions::default()
        };
        let v = evaluate_with(&petersen(), preset(PresetId::KConnectedQuestion, 3), &opts).unwrap();
        assert_eq!(v.status, VerdictStatus::Undecided);
        assert_eq!(v.conclusion_holds, None);
        assert!(v.undecided_reason.is_some());
    }
}
