//! Named graph families and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::rational::Rational;

/// The Petersen graph in its standard labelling: outer 5-cycle `0..5`,
/// spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2) mod 5`.
pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10).expect("order 10");
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5).unwrap();
        b.add_edge(i, i + 5).unwrap();
        b.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    b.build()
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Complete multipartite graph; parts are consecutive label ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let part_of = &part_of;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| part_of[u] != part_of[v])
                .map(move |v| (u, v))
        }),
    )
}

/// Wheel `W_n`: hub 0 joined to the cycle `1..=rim`.
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 3 {
        return Err(Error::InvalidParameter(format!(
            "a wheel rim needs at least 3 vertices, got {rim}"
        )));
    }
    Graph::from_edges(rim + 1, (1..=rim).flat_map(|i| [(0, i), (i, i % rim + 1)]))
}

/// `P2 ∪ kP1`: the edge `0 1` plus isolated vertices `2..k+2`.
pub fn p2_plus_isolated(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 2, [(0, 1)])
}

/// Erdős–Rényi `G(n, p)`.
///
/// The stream is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`;
/// pairs are visited in graph6 order (`(0,1), (0,2), (1,2), (0,3), ...`) and
/// each is kept when `gen_ratio(p.numer, p.denom)` succeeds. Output is
/// identical across runs and platforms for the same seed.
pub fn random_graph(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    if p < Rational::ZERO || p > Rational::ONE {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let num = u32::try_from(p.numer())
        .map_err(|_| Error::InvalidParameter(format!("probability {p} too fine")))?;
    let den = u32::try_from(p.denom())
        .map_err(|_| Error::InvalidParameter(format!("probability {p} too fine")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.gen_ratio(num, den) {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(b.build())
}
