use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::{subsets_of_size, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::independence_number;
use crate::limits::Limits;
use crate::rational::Rational;

/// `τ(G)`; complete graphs are infinitely tough.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn finite(self) -> Option<Rational> {
        match self {
            Toughness::Finite(r) => Some(r),
            Toughness::Infinite => None,
        }
    }

    /// `τ(G) >= t`.
    pub fn at_least(self, t: Rational) -> bool {
        match self {
            Toughness::Finite(r) => r >= t,
            Toughness::Infinite => true,
        }
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
            (Toughness::Finite(_), Toughness::Infinite) => Ordering::Less,
            (Toughness::Infinite, Toughness::Finite(_)) => Ordering::Greater,
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `p/q` or `inf`.
impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ToughnessResult {
    pub value: Toughness,
    /// A cut `S` with `ω(G−S) >= 2` and `|S|/ω(G−S) = value`; absent for
    /// complete graphs.
    pub witness_cut: Option<VertexSet>,
}

fn guard(g: &Graph, limits: &Limits) -> Result<()> {
    if g.order() > limits.toughness_max_n && !limits.toughness_branch_and_bound {
        return Err(Error::ResourceLimit(format!(
            "toughness on {} vertices exceeds the exhaustive limit of {} \
             (enable branch-and-bound mode to proceed)",
            g.order(),
            limits.toughness_max_n
        )));
    }
    Ok(())
}

pub fn toughness(g: &Graph) -> Result<ToughnessResult> {
    toughness_with(g, &Limits::default())
}

/// Exact toughness by enumerating cuts in order of increasing size.
///
/// A cut of size `s` leaves at most `min(n − s, α(G))` components, so
/// `s / min(n − s, α)` lower-bounds every ratio at size `s` and above; the
/// scan stops once that bound reaches the incumbent. Ties keep the first
/// cut found (smallest size, then smallest bit pattern).
pub fn toughness_with(g: &Graph, limits: &Limits) -> Result<ToughnessResult> {
    limits.check_now()?;
    if g.is_complete() {
        return Ok(ToughnessResult {
            value: Toughness::Infinite,
            witness_cut: None,
        });
    }
    guard(g, limits)?;
    let n = g.order();
    let all = g.vertices();
    let alpha = independence_number(g).alpha;
    let mut meter = limits.meter();
    let mut best: Option<(Rational, VertexSet)> = None;

    for s in 0..=n - 2 {
        let cap = (n - s).min(alpha);
        if let Some((b, _)) = best {
            if Rational::ratio(s, cap) >= b {
                break;
            }
        }
        for cut in subsets_of_size(all, s) {
            meter.tick()?;
            let omega = g.count_components_within(all.difference(cut));
            if omega < 2 {
                continue;
            }
            let ratio = Rational::ratio(s, omega);
            if best.is_none_or(|(b, _)| ratio < b) {
                best = Some((ratio, cut));
            }
        }
    }
    let (value, cut) = best.expect("non-complete graphs have a disconnecting set");
    Ok(ToughnessResult {
        value: Toughness::Finite(value),
        witness_cut: Some(cut),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TToughResult {
    pub holds: bool,
    /// When `holds` is false: `S` with `ω(G−S) >= 2` and `|S| < t·ω(G−S)`.
    pub violating_cut: Option<VertexSet>,
}

pub fn is_t_tough(g: &Graph, t: Rational) -> Result<TToughResult> {
    is_t_tough_with(g, t, &Limits::default())
}

/// Decides `|S| >= t·ω(G−S)` for every disconnecting `S`, stopping at the
/// first violation.
pub fn is_t_tough_with(g: &Graph, t: Rational, limits: &Limits) -> Result<TToughResult> {
    limits.check_now()?;
    if t.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "toughness threshold {t} < 0"
        )));
    }
    let ok = TToughResult {
        holds: true,
        violating_cut: None,
    };
    if g.is_complete() || t == Rational::ZERO {
        return Ok(ok);
    }
    guard(g, limits)?;
    let n = g.order();
    let all = g.vertices();
    let alpha = independence_number(g).alpha;
    let mut meter = limits.meter();

    for s in 0..=n - 2 {
        let cap = (n - s).min(alpha);
        if Rational::from(s) >= t * Rational::from(cap) {
            break;
        }
        for cut in subsets_of_size(all, s) {
            meter.tick()?;
            let omega = g.count_components_within(all.difference(cut));
            if omega >= 2 && Rational::from(s) < t * Rational::from(omega) {
                return Ok(TToughResult {
                    holds: false,
                    violating_cut: Some(cut),
                });
            }
        }
    }
    Ok(ok)
}
