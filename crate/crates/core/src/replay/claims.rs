use serde::Serialize;

use crate::bitset::VertexSet;
use crate::cycles::Cycle;
use crate::rational::Rational;
use crate::replay::arithmetic::{eval_f, max_f_on_range};
use crate::replay::context::ProofContext;
use crate::replay::report::{
    ClaimId, ClaimReport, Exchange, ExchangeKind, Replacement, ReplacementKind, Witness,
};
use crate::structure::is_induced_p2_kp1;

/// Validates `seq` as a cycle of the context graph and records it as an
/// improvement when it is strictly longer than `C`.
fn try_exchange(ctx: &ProofContext, rep: &mut ClaimReport, kind: ExchangeKind, seq: Vec<usize>) {
    match Cycle::new(&ctx.g, seq) {
        Ok(c) if c.len() > ctx.cycle_len() => {
            if !rep.improvements.iter().any(|e| e.cycle == c) {
                rep.improvements.push(Exchange { kind, cycle: c });
            }
        }
        Ok(c) => rep.notes.push(format!(
            "{kind:?} produced a cycle of length {} (not longer than {})",
            c.len(),
            ctx.cycle_len()
        )),
        Err(e) => rep
            .notes
            .push(format!("{kind:?} construction invalid: {e}")),
    }
}

fn sorted_edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// `U ∪ {h}` independent. Every violation gets the matching exchange.
pub fn claim_u_independent(ctx: &ProofContext) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::UIndependent);
    rep.precondition("cycle_is_longest", ctx.facts.cycle_is_longest);
    let g = &ctx.g;
    let mut edges = Vec::new();
    let mut indices = Vec::new();
    for i in 0..ctx.d {
        if g.has_edge(ctx.h, ctx.u[i]) {
            edges.push(sorted_edge(ctx.h, ctx.u[i]));
            indices.push(i + 1);
            let mut seq = vec![ctx.h];
            seq.extend(ctx.arc_backward(ctx.v[i], ctx.u[i]));
            try_exchange(ctx, &mut rep, ExchangeKind::InsertOffVertex, seq);
        }
    }
    for i in 0..ctx.d {
        for j in 0..ctx.d {
            if i < j && g.has_edge(ctx.u[i], ctx.u[j]) {
                edges.push(sorted_edge(ctx.u[i], ctx.u[j]));
                indices.extend([i + 1, j + 1]);
                let mut seq = vec![ctx.h];
                seq.extend(ctx.arc_backward(ctx.v[i], ctx.u[j]));
                seq.extend(ctx.arc_forward(ctx.u[i], ctx.v[j]));
                try_exchange(ctx, &mut rep, ExchangeKind::SuccessorChord, seq);
            }
        }
    }
    rep.check("u_and_h_independent", edges.is_empty());
    if !edges.is_empty() {
        rep.witnesses.push(Witness {
            label: "edges_in_u_and_h",
            vertices: Vec::new(),
            edges,
            indices,
        });
    }
    rep
}

/// `V ∖ N(U)` independent, `2|N(U)| >= n` and `N(U) ⊆ V(C)`.
pub fn claim_nonneighbors_independent(ctx: &ProofContext) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::NonneighborsIndependent);
    rep.precondition("p2_kp1_free", ctx.facts.p2_kp1_free);
    rep.precondition("one_tough", ctx.facts.one_tough);
    rep.precondition("cycle_is_longest", ctx.facts.cycle_is_longest);
    let g = &ctx.g;
    let k = ctx.k;
    let n = g.order();
    let nu = ctx.nu();
    let outside = g.vertices().difference(nu);
    rep.quantity("|N(U)|", nu.len());
    rep.quantity("|V-N(U)|", outside.len());

    // (a) V ∖ N(U) independent.
    let inner: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(a, b)| outside.contains(a) && outside.contains(b))
        .collect();
    rep.check("nonneighbors_independent", inner.is_empty());
    if let Some(&(x, y)) = inner.first() {
        rep.witnesses.push(Witness {
            label: "edges_outside_nu",
            edges: inner.clone(),
            ..Witness::default()
        });
        let iso: VertexSet = ctx
            .u
            .iter()
            .copied()
            .filter(|&u| u != x && u != y)
            .take(k)
            .collect();
        if iso.len() == k && is_induced_p2_kp1(g, x, y, iso, k) {
            let mut vertices = vec![x, y];
            vertices.extend(iso.iter());
            rep.witnesses.push(Witness {
                label: "p2_kp1_pattern",
                vertices,
                edges: vec![sorted_edge(x, y)],
                indices: iso
                    .iter()
                    .filter_map(|u| ctx.u_index(u))
                    .map(|i| i + 1)
                    .collect(),
            });
        } else {
            rep.notes.push(format!(
                "edge {x}{y} with {k} vertices of U does not induce P2 ∪ {k}P1"
            ));
        }
    }

    // (b) 2|N(U)| >= n.
    let half = 2 * nu.len() >= n;
    rep.check("nu_at_least_half", half);
    if !half {
        rep.witnesses.push(Witness {
            label: "large_nonneighbor_set",
            vertices: outside.to_vec(),
            ..Witness::default()
        });
        if inner.is_empty() && outside.len() >= 2 {
            rep.notes.push(format!(
                "removing N(U) ({} vertices) leaves {} isolated vertices, so G is not 1-tough",
                nu.len(),
                outside.len()
            ));
        }
    }

    // (c) N(U) ⊆ V(C).
    let on_cycle = ctx.cycle.vertex_set();
    let off = nu.difference(on_cycle);
    rep.check("nu_on_cycle", off.is_empty());
    if !off.is_empty() {
        rep.witnesses.push(Witness {
            label: "nu_off_cycle",
            vertices: off.to_vec(),
            ..Witness::default()
        });
    }
    for y in off {
        if y == ctx.h {
            rep.notes
                .push("h is adjacent to U; see u_independent".to_string());
            continue;
        }
        let hits: Vec<usize> = (0..ctx.d).filter(|&i| g.has_edge(y, ctx.u[i])).collect();
        if let [i, j, ..] = hits[..] {
            let mut seq = vec![ctx.h];
            seq.extend(ctx.arc_backward(ctx.v[i], ctx.u[j]));
            seq.push(y);
            seq.extend(ctx.arc_forward(ctx.u[i], ctx.v[j]));
            try_exchange(ctx, &mut rep, ExchangeKind::SharedOffNeighbor, seq);
        } else if let [i] = hits[..] {
            let ui = ctx.u[i];
            let iso: VertexSet = std::iter::once(ctx.h)
                .chain(
                    ctx.u
                        .iter()
                        .copied()
                        .filter(|&u| u != ui)
                        .take(k.saturating_sub(1)),
                )
                .collect();
            if is_induced_p2_kp1(g, y, ui, iso, k) {
                let mut vertices = vec![y, ui];
                vertices.extend(iso.iter());
                rep.witnesses.push(Witness {
                    label: "p2_kp1_pattern",
                    vertices,
                    edges: vec![sorted_edge(y, ui)],
                    indices: vec![i + 1],
                });
            } else {
                rep.notes.push(format!(
                    "off-cycle {y} adjacent only to u_{} does not yield P2 ∪ {k}P1",
                    i + 1
                ));
            }
        }
    }
    rep
}

/// Per-vertex lower bounds on `|N(y) ∩ U|` over `y ∈ N(U)` and the
/// aggregate bound on `e(U, N(U))`.
pub fn claim_neighbor_degree_lower(ctx: &ProofContext) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::NeighborDegreeLower);
    rep.precondition("p2_kp1_free", ctx.facts.p2_kp1_free);
    let g = &ctx.g;
    let (d, k) = (ctx.d as i64, ctx.k as i64);
    let nh = ctx.nh();
    let nu = ctx.nu();
    let mut offenders = Vec::new();
    for y in nu {
        let hits = g.adj(y).intersection(ctx.u_set).len() as i64;
        let need = if nh.contains(y) { d - k + 1 } else { d - k + 2 };
        if hits < need {
            offenders.push(y);
        }
    }
    rep.check("per_vertex_bounds", offenders.is_empty());
    if !offenders.is_empty() {
        rep.witnesses.push(Witness {
            label: "low_degree_into_u",
            vertices: offenders,
            ..Witness::default()
        });
    }
    let e = ctx.e_u_nu() as i64;
    let size_nu = nu.len() as i64;
    let n = g.order() as i64;
    let bound1 = (d - k + 2) * size_nu - d;
    rep.quantity("e(U,N(U))", e);
    rep.quantity("(d-k+2)|N(U)|-d", bound1);
    rep.check("e_at_least_nu_bound", e >= bound1);
    let bound2 =
        Rational::new((d - k + 2) * n, 2).expect("nonzero denominator") - Rational::integer(d);
    rep.quantity("(d-k+2)n/2-d", bound2);
    rep.check("e_at_least_order_bound", Rational::integer(e) >= bound2);
    rep
}

/// `d(u_i) <= d` and `e(U, N(U)) <= d²`. Each `u_i` of degree above `d`
/// gets the replacement cycle that leaves it off.
pub fn claim_u_degree_upper(ctx: &ProofContext) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::UDegreeUpper);
    rep.precondition("cycle_is_longest", ctx.facts.cycle_is_longest);
    rep.precondition("degree_is_maximum", ctx.facts.degree_is_maximum);
    rep.precondition("p2_kp1_free", ctx.facts.p2_kp1_free);
    let g = &ctx.g;
    let d = ctx.d;
    let mut heavy = Vec::new();
    for i in 0..d {
        let ui = ctx.u[i];
        if g.degree(ui) <= d {
            continue;
        }
        heavy.push(i + 1);
        let next_v = ctx.v[(i + 1) % d];
        let ui_succ = ctx.succ(ui);
        let (kind, seq) = if ui_succ == next_v {
            let mut seq = ctx.arc_backward(ctx.v[i], next_v);
            seq.push(ctx.h);
            (ReplacementKind::SkipSuccessor, seq)
        } else if let Some(j) = (0..d).find(|&j| j != i && g.has_edge(ctx.u[j], ui_succ)) {
            let mut seq = ctx.arc_backward(ctx.v[i], ctx.u[j]);
            seq.extend(ctx.arc_forward(ui_succ, ctx.v[j]));
            seq.push(ctx.h);
            (ReplacementKind::RerouteThroughChord, seq)
        } else {
            rep.notes.push(format!(
                "u_{} has degree {} > d but u_{}⁺ has no other neighbour in U",
                i + 1,
                g.degree(ui),
                i + 1
            ));
            continue;
        };
        match Cycle::new(g, seq) {
            Ok(c) if c.len() == ctx.cycle_len() && !c.contains(ui) => {
                rep.replacements.push(Replacement {
                    kind,
                    cycle: c,
                    off_vertex: ui,
                    off_degree: g.degree(ui),
                })
            }
            Ok(c) => rep.notes.push(format!(
                "{kind:?} for u_{} gave {c:?}, which does not leave u_{} off a cycle of length {}",
                i + 1,
                i + 1,
                ctx.cycle_len()
            )),
            Err(e) => rep
                .notes
                .push(format!("{kind:?} for u_{} invalid: {e}", i + 1)),
        }
    }
    rep.check("u_degrees_at_most_d", heavy.is_empty());
    if !heavy.is_empty() {
        rep.witnesses.push(Witness {
            label: "heavy_u",
            vertices: heavy.iter().map(|&i| ctx.u[i - 1]).collect(),
            indices: heavy,
            ..Witness::default()
        });
    }
    let e = ctx.e_u_nu();
    rep.quantity("e(U,N(U))", e);
    rep.quantity("d^2", d * d);
    rep.check("e_at_most_d_squared", e <= d * d);
    rep
}

/// `2d > k² − k − 2`, with the order bound `n <= f(d)` that the two edge
/// count inequalities give.
pub fn claim_d_lower_bound(ctx: &ProofContext) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::DLowerBound);
    let (d, k, n) = (ctx.d as i64, ctx.k as i64, ctx.g.order() as i64);
    rep.precondition("order_at_least_k2_k_1", Some(n > k * k + k));
    rep.precondition("p2_kp1_free", ctx.facts.p2_kp1_free);
    rep.precondition("one_tough", ctx.facts.one_tough);
    rep.quantity("d", d);
    rep.quantity("(k^2-k-2)/2", Rational::new(k * k - k - 2, 2).unwrap());
    if d - k + 2 > 0 {
        let f = eval_f(d, k).expect("positive denominator");
        rep.quantity("f(d)", f);
        rep.quantity("n <= f(d)", Rational::integer(n) <= f);
    } else {
        rep.notes.push(format!(
            "f(d) not informative: d − k + 2 = {} <= 0",
            d - k + 2
        ));
    }
    if let Some((m, at)) = max_f_on_range(k) {
        rep.quantity("max f on [k,(k^2-k-2)/2]", m);
        rep.quantity("argmax", at);
    }
    let holds = 2 * d > k * k - k - 2;
    rep.check("2d > k^2-k-2", holds);
    if !holds && d >= k {
        rep.notes.push(format!(
            "with the edge-count bounds, n <= {} <= k²+k",
            max_f_on_range(k).map_or("f(d)".to_string(), |(m, _)| m.to_string())
        ));
    }
    rep
}

/// `x` on `C` with `x, x⁺ ∈ N(U)`, in the labelling where `x` lies on
/// `u_d⁺ →C w_d`.
///
/// `l_x` and `r_x` are 1-based indices in that labelling, which is
/// `ctx.rotated(rotation)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConsecutivePair {
    pub x: usize,
    pub x_succ: usize,
    pub rotation: usize,
    pub l_x: usize,
    pub r_x: usize,
}

impl ConsecutivePair {
    pub fn context(&self, ctx: &ProofContext) -> ProofContext {
        ctx.rotated(self.rotation)
    }
}

/// The first `x` along the stored cycle order with `x, x⁺ ∈ N(U)`.
pub fn find_consecutive_pair(ctx: &ProofContext) -> Option<ConsecutivePair> {
    let nu = ctx.nu();
    let cv = ctx.cycle.vertices();
    let x = cv
        .iter()
        .copied()
        .find(|&x| nu.contains(x) && nu.contains(ctx.succ(x)))?;
    // Segment index: the last v_i at or before x along the orientation.
    let len = ctx.cycle_len();
    let px = ctx.cycle.position(x).unwrap();
    let behind = |v: usize| (px + len - ctx.cycle.position(v).unwrap()) % len;
    let i = (0..ctx.d).min_by_key(|&i| behind(ctx.v[i])).unwrap();
    let rotation = (i + 1) % ctx.d;
    let rot = ctx.rotated(rotation);
    let x_succ = ctx.succ(x);
    let l_x = (0..ctx.d).find(|&i| ctx.g.has_edge(rot.u[i], x))? + 1;
    let r_x = (0..ctx.d)
        .rev()
        .find(|&i| ctx.g.has_edge(rot.u[i], x_succ))?
        + 1;
    Some(ConsecutivePair {
        x,
        x_succ,
        rotation,
        l_x,
        r_x,
    })
}

/// Reports whether a consecutive pair exists. Without one, every cycle
/// edge meeting `N(U)` forces `C` to alternate, so more than half of `V`
/// lies outside `N(U)`.
pub fn claim_consecutive_pair(ctx: &ProofContext) -> (ClaimReport, Option<ConsecutivePair>) {
    let mut rep = ClaimReport::new(ClaimId::ConsecutivePair);
    rep.precondition("p2_kp1_free", ctx.facts.p2_kp1_free);
    rep.precondition("one_tough", ctx.facts.one_tough);
    let nu = ctx.nu();
    let pair = find_consecutive_pair(ctx);
    rep.check("pair_exists", pair.is_some());
    match pair {
        Some(p) => {
            rep.quantity("x", p.x);
            rep.quantity("x+", p.x_succ);
            rep.quantity("l_x", p.l_x);
            rep.quantity("r_x", p.r_x);
            rep.quantity("index_rotation", p.rotation);
            if ctx.nh().contains(p.x) {
                rep.notes.push(format!("x = {} lies in N(h)", p.x));
            }
        }
        None => {
            let edges_meet = ctx
                .cycle
                .vertices()
                .iter()
                .all(|&x| nu.contains(x) || nu.contains(ctx.succ(x)));
            let n = ctx.g.order();
            let outside = n - nu.len();
            rep.quantity("|V-N(U)|", outside);
            rep.quantity("n/2", Rational::ratio(n, 2));
            if edges_meet {
                rep.notes.push(format!(
                    "C alternates between N(U) and its complement, so |V−N(U)| = {outside} > n/2"
                ));
            } else {
                rep.notes.push(
                    "some cycle edge misses N(U); the alternation argument does not apply".into(),
                );
            }
            rep.witnesses.push(Witness {
                label: "nonneighbors_of_u",
                vertices: ctx.g.vertices().difference(nu).to_vec(),
                ..Witness::default()
            });
        }
    }
    (rep, pair)
}

/// The containments around `x`, `x⁺` and `u_{l_x}⁺`, with the four
/// exchanges that rule out their failure on a longest cycle.
#[allow(clippy::int_plus_one)]
pub fn claim_pair_index_bounds(ctx: &ProofContext, pair: &ConsecutivePair) -> ClaimReport {
    let mut rep = ClaimReport::new(ClaimId::PairIndexBounds);
    rep.precondition("cycle_is_longest", ctx.facts.cycle_is_longest);
    rep.precondition("p2_kp1_free", ctx.facts.p2_kp1_free);
    let c = pair.context(ctx);
    let g = &c.g;
    let (d, k) = (c.d as i64, c.k as i64);
    let (x, xs) = (pair.x, pair.x_succ);
    let (l, r) = (pair.l_x - 1, pair.r_x - 1);
    let idx_of =
        |set: VertexSet| -> Vec<usize> { (0..c.d).filter(|&i| set.contains(c.u[i])).collect() };
    rep.quantity("x", x);
    rep.quantity("l_x", pair.l_x);
    rep.quantity("r_x", pair.r_x);

    // (i) and (ii).
    let nx = idx_of(g.adj(x));
    let nxs = idx_of(g.adj(xs));
    rep.check("i_containment", nx.iter().all(|&i| i >= l));
    rep.check("i_size", nx.len() as i64 >= d - k + 2);
    rep.check("ii_containment", nxs.iter().all(|&i| i <= r));
    rep.check("ii_size", nxs.len() as i64 >= d - k + 1);

    rep.check("l_x >= r_x", l >= r);
    if l < r {
        let mut seq = c.arc_forward(c.u[l], c.v[r]);
        seq.push(c.h);
        seq.extend(c.arc_backward(c.v[l], xs));
        seq.extend(c.arc_forward(c.u[r], x));
        try_exchange(&c, &mut rep, ExchangeKind::Crossing, seq);
        return rep;
    }

    // (iii), around y = u_{l_x}⁺.
    let y = c.succ(c.u[l]);
    rep.quantity("u_{l_x}+", y);
    let in_nh = c.nh().contains(y);
    rep.check("iii_not_in_nh", !in_nh);
    // Shared prefix h v_r ←C x⁺ u_r →C u_l.
    let middle = c.arc_forward(c.u[r], c.u[l]);
    if in_nh {
        let mut seq = vec![c.h];
        seq.extend(c.arc_backward(c.v[r], xs));
        seq.extend(middle.iter().copied());
        seq.extend(c.arc_backward(x, y));
        try_exchange(&c, &mut rep, ExchangeKind::LeftSuccessorInNh, seq);
    }
    let ny = idx_of(g.adj(y));
    rep.check("iii_containment", ny.iter().all(|&j| r <= j && j <= l));
    rep.check("iii_size", ny.len() as i64 >= d - k + 2);
    for &j in &ny {
        if j < r {
            let mut seq = vec![c.h];
            seq.extend(c.arc_backward(c.v[j], xs));
            seq.extend(middle.iter().copied());
            seq.extend(c.arc_backward(x, y));
            seq.extend(c.arc_forward(c.u[j], c.v[r]));
            try_exchange(&c, &mut rep, ExchangeKind::LeftSuccessorChordBelow, seq);
        } else if j > l {
            let mut seq = vec![c.h];
            seq.extend(c.arc_backward(c.v[r], xs));
            seq.extend(middle.iter().copied());
            seq.extend(c.arc_backward(x, c.u[j]));
            seq.extend(c.arc_forward(y, c.v[j]));
            try_exchange(&c, &mut rep, ExchangeKind::LeftSuccessorChordAbove, seq);
        }
    }
    rep
}
