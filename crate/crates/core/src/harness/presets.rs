use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A theorem or open problem, encoded as hypotheses plus a conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresetId {
    /// 1-tough, `(k−1)`-connected, `(P2 ∪ kP1)`-free, `n >= k² + k + 1`,
    /// `δ >= k` ⇒ hamiltonian. `k >= 4`.
    #[serde(rename = "THM_MAIN1")]
    LargeOrderHamiltonian,
    /// 1-tough, `(k−1)`-connected, `(P2 ∪ kP1)`-free ⇒ every longest cycle
    /// is edge-dominating. `k >= 4`.
    #[serde(rename = "THM_MAIN3")]
    LongestCyclesDominating,
    /// 1-tough, `k`-connected, `(P2 ∪ kP1)`-free ⇒ hamiltonian or Petersen.
    #[serde(rename = "PROBLEM_OTA_SANKA")]
    KConnectedQuestion,
    /// The question above with `δ >= (3k − 3)/2`.
    #[serde(rename = "THM_A_OTA_SANKA")]
    DegreeThreeHalves,
    /// The question above with `δ >= (7k − 6)/5`.
    #[serde(rename = "THM_B_HU_WANG_SHEN")]
    DegreeSevenFifths,
    /// 1-tough, `κ >= 3`, `α <= κ + 1` ⇒ hamiltonian or Petersen.
    #[serde(rename = "THM_C_BIGALKE_JUNG")]
    IndependenceBound,
    /// 1-tough, `(k−1)`-connected, `(P2 ∪ kP1)`-free ⇒ hamiltonian, with no
    /// order or degree floor. Meant for counterexample hunting.
    #[serde(rename = "PROBLEM_4_2")]
    NoOrderFloor,
}

impl PresetId {
    pub const ALL: [PresetId; 7] = [
        PresetId::LargeOrderHamiltonian,
        PresetId::LongestCyclesDominating,
        PresetId::KConnectedQuestion,
        PresetId::DegreeThreeHalves,
        PresetId::DegreeSevenFifths,
        PresetId::IndependenceBound,
        PresetId::NoOrderFloor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresetId::LargeOrderHamiltonian => "THM_MAIN1",
            PresetId::LongestCyclesDominating => "THM_MAIN3",
            PresetId::KConnectedQuestion => "PROBLEM_OTA_SANKA",
            PresetId::DegreeThreeHalves => "THM_A_OTA_SANKA",
            PresetId::DegreeSevenFifths => "THM_B_HU_WANG_SHEN",
            PresetId::IndependenceBound => "THM_C_BIGALKE_JUNG",
            PresetId::NoOrderFloor => "PROBLEM_4_2",
        }
    }

    /// Smallest admissible `k`, or `None` when the preset takes no `k`.
    pub fn min_k(self) -> Option<usize> {
        match self {
            PresetId::LargeOrderHamiltonian | PresetId::LongestCyclesDominating => Some(4),
            PresetId::IndependenceBound => None,
            _ => Some(2),
        }
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PresetId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        PresetId::ALL
            .into_iter()
            .find(|p| p.as_str() == norm)
            .ok_or_else(|| {
                let known: Vec<_> = PresetId::ALL.iter().map(|p| p.as_str()).collect();
                Error::InvalidParameter(format!(
                    "unknown preset {s:?} (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

/// A preset together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HypothesisPreset {
    pub id: PresetId,
    pub k: Option<usize>,
}

impl HypothesisPreset {
    /// Checks that `k` is present and large enough when the preset needs
    /// it. A `k` passed to a preset without one is dropped.
    pub fn new(id: PresetId, k: Option<usize>) -> Result<Self> {
        match (id.min_k(), k) {
            (None, _) => Ok(HypothesisPreset { id, k: None }),
            (Some(min), Some(k)) if k >= min => Ok(HypothesisPreset { id, k: Some(k) }),
            (Some(min), Some(k)) => Err(Error::InvalidParameter(format!(
                "{id} needs k >= {min}, got {k}"
            ))),
            (Some(_), None) => Err(Error::InvalidParameter(format!("{id} needs --k"))),
        }
    }
}
