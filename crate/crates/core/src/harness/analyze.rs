use serde::Serialize;

use crate::bitset::VertexSet;
use crate::cycles::{find_hamiltonian_cycle_with, find_longest_cycle_with, Cycle};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::invariants::{independence_number, toughness_with, vertex_connectivity, Toughness};
use crate::limits::Limits;
use crate::structure::{girth, is_p2_kp1_free, is_petersen, FreenessWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FreenessEntry {
    pub k: usize,
    pub free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<FreenessWitness>,
}

/// Every invariant the library computes for one graph. Fields are `None`
/// when undefined (e.g. `min_degree` of the empty graph) or when a
/// resource guard tripped; guard messages are listed in `undecided`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub toughness: Option<Toughness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub toughness_cut: Option<VertexSet>,
    pub connectivity: usize,
    pub independence_number: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independent_set: Option<VertexSet>,
    pub hamiltonian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_cycle: Option<Cycle>,
    pub circumference: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub longest_cycle: Option<Cycle>,
    pub girth: Option<usize>,
    pub p2_kp1_free: Vec<FreenessEntry>,
    pub is_petersen: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub undecided: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub limits: Limits,
    /// Freeness is reported for `k = 1..=freeness_k_max`.
    pub freeness_k_max: usize,
    pub witnesses: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            limits: Limits::default(),
            freeness_k_max: 5,
            witnesses: false,
        }
    }
}

fn guarded<T>(r: Result<T>, undecided: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_resource_guard() => {
            undecided.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    analyze_with(g, &AnalyzeOptions::default())
}

pub fn analyze_with(g: &Graph, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut undecided = Vec::new();
    let tough = guarded(toughness_with(g, &opts.limits), &mut undecided)?;
    let ham = guarded(find_hamiltonian_cycle_with(g, &opts.limits), &mut undecided)?;
    let longest = guarded(find_longest_cycle_with(g, &opts.limits), &mut undecided)?;
    let alpha = independence_number(g);
    let w = opts.witnesses;
    let p2_kp1_free = (1..=opts.freeness_k_max)
        .map(|k| {
            let r = is_p2_kp1_free(g, k)?;
            Ok(FreenessEntry {
                k,
                free: r.free,
                witness: r.witness.filter(|_| w),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        graph6: write_graph6(g),
        n: g.order(),
        m: g.size(),
        connected: g.is_connected(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        toughness: tough.map(|t| t.value),
        toughness_cut: tough.and_then(|t| t.witness_cut).filter(|_| w),
        connectivity: vertex_connectivity(g),
        independence_number: alpha.alpha,
        independent_set: w.then_some(alpha.witness),
        hamiltonian: ham.as_ref().map(Option::is_some),
        hamiltonian_cycle: ham.flatten().filter(|_| w),
        circumference: longest.as_ref().and_then(|c| c.as_ref().map(Cycle::len)),
        longest_cycle: longest.flatten().filter(|_| w),
        girth: girth(g),
        p2_kp1_free,
        is_petersen: is_petersen(g),
        undecided,
    })
}
