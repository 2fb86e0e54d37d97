use serde::Serialize;

use crate::cycles::Cycle;
use crate::replay::context::CheckStatus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    /// `U ∪ {h}` is independent.
    UIndependent,
    /// `V ∖ N(U)` is independent, `2|N(U)| >= n` and `N(U) ⊆ V(C)`.
    NonneighborsIndependent,
    /// `|N(y) ∩ U| >= d − k + 1` (`+ 2` off `N(h)`) and the lower bound on
    /// `e(U, N(U))`.
    NeighborDegreeLower,
    /// `d(u_i) <= d` and `e(U, N(U)) <= d²`.
    UDegreeUpper,
    /// `2d > k² − k − 2`.
    DLowerBound,
    /// Some `x` on `C` has `x, x⁺ ∈ N(U)`.
    ConsecutivePair,
    /// The index containments around `x`, `x⁺` and `u_{l_x}⁺`.
    PairIndexBounds,
    /// The closing inequalities in `k`, `d`, `l_x`, `r_x`.
    FinalArithmetic,
}

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::UIndependent => "u_independent",
            ClaimId::NonneighborsIndependent => "nonneighbors_independent",
            ClaimId::NeighborDegreeLower => "neighbor_degree_lower",
            ClaimId::UDegreeUpper => "u_degree_upper",
            ClaimId::DLowerBound => "d_lower_bound",
            ClaimId::ConsecutivePair => "consecutive_pair",
            ClaimId::PairIndexBounds => "pair_index_bounds",
            ClaimId::FinalArithmetic => "final_arithmetic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Precondition {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// One sub-assertion of a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
}

/// Objects exhibiting a violation. `indices` are 1-based claim indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: &'static str,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub indices: Vec<usize>,
}

/// The exchange that produced an improvement cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeKind {
    /// `h` adjacent to some `u_i`: insert `h` between `v_i` and `u_i`.
    InsertOffVertex,
    /// `u_i u_j ∈ E`: `h v_i ←C u_j u_i →C v_j h`.
    SuccessorChord,
    /// A vertex off `C` adjacent to two of `U`.
    SharedOffNeighbor,
    /// `l_x < r_x`.
    Crossing,
    /// `u_{l_x}⁺ ∈ N(h)`.
    LeftSuccessorInNh,
    /// `u_{l_x}⁺ u_j ∈ E` with `j < r_x`.
    LeftSuccessorChordBelow,
    /// `u_{l_x}⁺ u_j ∈ E` with `j > l_x`.
    LeftSuccessorChordAbove,
}

impl ExchangeKind {
    pub const ALL: [ExchangeKind; 7] = [
        ExchangeKind::InsertOffVertex,
        ExchangeKind::SuccessorChord,
        ExchangeKind::SharedOffNeighbor,
        ExchangeKind::Crossing,
        ExchangeKind::LeftSuccessorInNh,
        ExchangeKind::LeftSuccessorChordBelow,
        ExchangeKind::LeftSuccessorChordAbove,
    ];
}

/// A cycle strictly longer than `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exchange {
    pub kind: ExchangeKind,
    pub cycle: Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReplacementKind {
    /// `u_i⁺ = v_{i+1}`: `v_i ←C v_{i+1} h v_i`.
    SkipSuccessor,
    /// `u_j u_i⁺ ∈ E`: `v_i ←C u_j u_i⁺ →C v_j h v_i`.
    RerouteThroughChord,
}

/// A cycle as long as `C` that leaves out a vertex of larger degree than
/// `h`, contradicting the choice of `(C, h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Replacement {
    pub kind: ReplacementKind,
    pub cycle: Cycle,
    pub off_vertex: usize,
    pub off_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: &'static str,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub holds: bool,
    pub preconditions: Vec<Precondition>,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
    pub improvements: Vec<Exchange>,
    pub replacements: Vec<Replacement>,
    pub quantities: Vec<Quantity>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub(crate) fn new(claim: ClaimId) -> Self {
        ClaimReport {
            claim,
            holds: true,
            preconditions: Vec::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            improvements: Vec::new(),
            replacements: Vec::new(),
            quantities: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn precondition(&mut self, name: &'static str, status: impl Into<CheckStatus>) {
        self.preconditions.push(Precondition {
            name,
            status: status.into(),
        });
    }

    /// Records a sub-assertion; `holds` becomes the conjunction of all checks.
    pub(crate) fn check(&mut self, name: &'static str, holds: bool) {
        self.checks.push(Check { name, holds });
        self.holds &= holds;
    }

    pub(crate) fn quantity(&mut self, name: &'static str, value: impl ToString) {
        self.quantities.push(Quantity {
            name,
            value: value.to_string(),
        });
    }

    pub fn quantity_value(&self, name: &str) -> Option<&str> {
        self.quantities
            .iter()
            .find(|q| q.name == name)
            .map(|q| q.value.as_str())
    }

    /// True when any exchange or replacement was constructed.
    pub fn fired(&self) -> bool {
        !self.improvements.is_empty() || !self.replacements.is_empty()
    }
}
