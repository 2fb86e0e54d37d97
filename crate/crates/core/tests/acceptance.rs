//! One line per acceptance criterion. Run with
//! `cargo test --test acceptance`; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use hamtough::cycles::{
    circumference, find_hamiltonian_cycle, hamiltonian_cycle_backtrack, hamiltonian_cycle_held_karp,
};
use hamtough::generators::{petersen, random_graph};
use hamtough::harness::{
    evaluate, labeled_graph_count, labeled_graph_from_mask, HypothesisPreset, PresetId,
    VerdictStatus, EXHAUSTIVE_MAX_N,
};
use hamtough::invariants::{
    independence_number, is_t_tough, toughness, vertex_connectivity, Toughness,
};
use hamtough::replay::{
    d_upper_for_bound, eval_f, final_system_solution, max_f_on_range, replay, ClaimId,
    ExchangeKind, ReplayOutcome,
};
use hamtough::structure::{is_p2_kp1_free, is_petersen, neighbor_bound_violations};
use hamtough::{write_graph6, Graph, Limits, Rational};

/// Wall-clock ceilings.
const PETERSEN_BUDGET: Duration = Duration::from_secs(5);
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(600);

/// Sample sizes and seeds.
const SAMPLED_GRAPHS: u64 = 100_000;
const RANDOM_SEED_BASE: u64 = 0x5eed;
const PROPERTY_SAMPLES: u64 = 1_000;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn q(p: i64, r: i64) -> Rational {
    Rational::new(p, r).unwrap()
}

/// Every labeled graph on `0..=7` vertices, in parallel, reduced by `f`.
fn corpus_fold<T, F, R>(f: F, reduce: R) -> T
where
    T: Send + Default,
    F: Fn(&Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    (0..=EXHAUSTIVE_MAX_N)
        .map(|n| {
            (0..labeled_graph_count(n))
                .into_par_iter()
                .map(|m| f(&labeled_graph_from_mask(n, m)))
                .reduce(T::default, &reduce)
        })
        .fold(T::default(), &reduce)
}

fn corpus_size() -> u64 {
    (0..=EXHAUSTIVE_MAX_N).map(labeled_graph_count).sum()
}

fn sampled(i: u64, n_lo: usize, n_hi: usize, ps: &[Rational]) -> Graph {
    let span = (n_hi - n_lo + 1) as u64;
    let n = n_lo + (i % span) as usize;
    let p = ps[((i / span) % ps.len() as u64) as usize];
    random_graph(n, p, RANDOM_SEED_BASE.wrapping_add(i)).unwrap()
}

fn petersen_suite() -> Outcome {
    let start = Instant::now();
    let g = petersen();
    let tau = toughness(&g).unwrap().value;
    let kappa = vertex_connectivity(&g);
    let alpha = independence_number(&g).alpha;
    let delta = g.min_degree().unwrap();
    let ham = find_hamiltonian_cycle(&g).unwrap().is_some();
    let circ = circumference(&g).unwrap();
    let free3 = is_p2_kp1_free(&g, 3).unwrap().free;
    let free2 = is_p2_kp1_free(&g, 2).unwrap().free;
    let pet = is_petersen(&g);
    let oracle = common::brute_toughness(&g) == Some(q(4, 3))
        && common::brute_connectivity(&g) == 3
        && common::brute_alpha(&g) == 4
        && common::brute_circumference(&g) == Some(9)
        && common::naive_p2_kp1_free(&g, 3)
        && !common::naive_p2_kp1_free(&g, 2);
    // The Petersen graph meets the hypotheses of the earlier results and
    // passes only through their exception.
    let exception = [
        (PresetId::DegreeThreeHalves, Some(3)),
        (PresetId::DegreeSevenFifths, Some(3)),
        (PresetId::IndependenceBound, None),
        (PresetId::KConnectedQuestion, Some(3)),
    ]
    .into_iter()
    .all(|(id, k)| {
        let v = evaluate(&g, HypothesisPreset::new(id, k).unwrap()).unwrap();
        v.hypotheses_satisfied
            && v.status == VerdictStatus::ConclusionHeld
            && v.witnesses.is_petersen == Some(true)
    });
    let elapsed = start.elapsed();
    let pass = tau == Toughness::Finite(q(4, 3))
        && kappa == 3
        && alpha == 4
        && delta == 3
        && !ham
        && circ == Some(9)
        && free3
        && !free2
        && pet
        && oracle
        && exception
        && elapsed < PETERSEN_BUDGET;
    Outcome {
        pass,
        detail: format!(
            "tau={tau} kappa={kappa} alpha={alpha} delta={delta} hamiltonian={ham} circumference={} \
             free(k=3)={free3} free(k=2)={free2} is_petersen={pet} oracles_agree={oracle} \
             exception_only={exception} time={:.2?} (limit {:?})",
            circ.unwrap_or(0),
            elapsed,
            PETERSEN_BUDGET
        ),
    }
}

#[derive(Default)]
struct Tally {
    graphs: u64,
    met: u64,
    counterexamples: u64,
    undecided: u64,
    first_bad: Option<String>,
}

fn merge(a: Tally, b: Tally) -> Tally {
    Tally {
        graphs: a.graphs + b.graphs,
        met: a.met + b.met,
        counterexamples: a.counterexamples + b.counterexamples,
        undecided: a.undecided + b.undecided,
        first_bad: a.first_bad.or(b.first_bad),
    }
}

fn tally_verdict(g: &Graph, preset: HypothesisPreset) -> Tally {
    let v = evaluate(g, preset).unwrap();
    Tally {
        graphs: 1,
        met: v.hypotheses_satisfied as u64,
        counterexamples: (v.status == VerdictStatus::Counterexample) as u64,
        undecided: (v.status == VerdictStatus::Undecided) as u64,
        first_bad: (v.status == VerdictStatus::Counterexample).then_some(v.graph6),
    }
}

fn main3() -> HypothesisPreset {
    HypothesisPreset::new(PresetId::LongestCyclesDominating, Some(4)).unwrap()
}

fn exhaustive_main3() -> Outcome {
    let start = Instant::now();
    let t = corpus_fold(|g| tally_verdict(g, main3()), merge);
    let elapsed = start.elapsed();
    Outcome {
        pass: t.counterexamples == 0 && t.undecided == 0 && t.graphs == corpus_size() && elapsed < EXHAUSTIVE_BUDGET,
        detail: format!(
            "n<=7 labeled graphs={} hypotheses_met={} counterexamples={} undecided={} first={:?} time={:.2?} (limit {:?})",
            t.graphs, t.met, t.counterexamples, t.undecided, t.first_bad, elapsed, EXHAUSTIVE_BUDGET
        ),
    }
}

fn sampled_main3() -> Outcome {
    let ps = [q(1, 2), q(7, 10), q(9, 10)];
    let t = (0..SAMPLED_GRAPHS)
        .into_par_iter()
        .map(|i| tally_verdict(&sampled(i, 8, 14, &ps), main3()))
        .reduce(Tally::default, merge);
    Outcome {
        pass: t.graphs == SAMPLED_GRAPHS && t.counterexamples == 0 && t.undecided == 0 && t.met > 0,
        detail: format!(
            "G(n,p) samples={} n in [8,14] p in {{1/2,7/10,9/10}} hypotheses_met={} counterexamples={} undecided={} first={:?}",
            t.graphs, t.met, t.counterexamples, t.undecided, t.first_bad
        ),
    }
}

fn extremal_identity() -> Outcome {
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 4..=10i64 {
        let (max, argmax) = max_f_on_range(k).unwrap();
        // Independent sweep with the closed form 2d(d+1)/(d-k+2).
        let sweep = (k..=d_upper_for_bound(k))
            .map(|d| q(2 * d * (d + 1), d - k + 2))
            .max()
            .unwrap();
        let ok = max == q(k * k + k, 1) && sweep == max && eval_f(argmax, k).unwrap() == max;
        pass &= ok;
        rows.push(format!("k={k}:{max}"));
    }
    Outcome {
        pass,
        detail: format!("max f = k^2+k for k in [4,10]: {}", rows.join(" ")),
    }
}

fn final_infeasibility() -> Outcome {
    let feasible: Vec<i64> = (4..=100)
        .filter(|&k| final_system_solution(k).is_some())
        .collect();
    // Brute sweep: d > (k^2-k-2)/2 and 2d <= 3k-3.
    let brute: Vec<i64> = (4..=100i64)
        .filter(|&k| (0..=3 * k).any(|d| 2 * d > k * k - k - 2 && 2 * d <= 3 * k - 3))
        .collect();
    let k3 = final_system_solution(3);
    Outcome {
        pass: feasible.is_empty() && brute.is_empty() && k3 == Some(3),
        detail: format!(
            "feasible k in [4,100]: {feasible:?} (sweep {brute:?}); k=3 solution d={k3:?}"
        ),
    }
}

#[derive(Default)]
struct BoundTally {
    checked: u64,
    violations: u64,
    first_bad: Option<String>,
}

fn bound_check(g: &Graph) -> BoundTally {
    let mut t = BoundTally::default();
    for k in 2..=4 {
        if is_p2_kp1_free(g, k).unwrap().free {
            t.checked += 1;
            let v = neighbor_bound_violations(g, k).unwrap();
            if !v.is_empty() {
                t.violations += v.len() as u64;
                t.first_bad
                    .get_or_insert_with(|| format!("{} k={k}", write_graph6(g)));
            }
        }
    }
    t
}

fn merge_bound(a: BoundTally, b: BoundTally) -> BoundTally {
    BoundTally {
        checked: a.checked + b.checked,
        violations: a.violations + b.violations,
        first_bad: a.first_bad.or(b.first_bad),
    }
}

fn property_ps() -> [Rational; 4] {
    [q(1, 2), q(7, 10), q(9, 10), q(3, 10)]
}

fn neighbour_bound() -> Outcome {
    let exhaustive = corpus_fold(bound_check, merge_bound);
    let random = (0..PROPERTY_SAMPLES)
        .into_par_iter()
        .map(|i| bound_check(&sampled(i, 1, 12, &property_ps())))
        .reduce(BoundTally::default, merge_bound);
    Outcome {
        pass: exhaustive.violations == 0 && random.violations == 0,
        detail: format!(
            "free (graph,k) pairs checked: exhaustive={} random={} violations={} first={:?}",
            exhaustive.checked,
            random.checked,
            exhaustive.violations + random.violations,
            exhaustive.first_bad.or(random.first_bad)
        ),
    }
}

fn oracle_equivalences() -> Outcome {
    let ps = property_ps();
    let tough_mismatch: u64 = (0..PROPERTY_SAMPLES)
        .into_par_iter()
        .map(|i| {
            let g = sampled(i, 1, 10, &ps);
            let fast = toughness(&g).unwrap().value;
            let slow = common::brute_toughness(&g).map_or(Toughness::Infinite, Toughness::Finite);
            (fast != slow) as u64
        })
        .sum();
    #[derive(Default)]
    struct Free(u64, u64);
    let free = corpus_fold(
        |g| {
            let mut t = Free::default();
            for k in 1..=5 {
                t.0 += 1;
                t.1 +=
                    (is_p2_kp1_free(g, k).unwrap().free != common::naive_p2_kp1_free(g, k)) as u64;
            }
            t
        },
        |a, b| Free(a.0 + b.0, a.1 + b.1),
    );
    let random_free_mismatch: u64 = (0..PROPERTY_SAMPLES)
        .into_par_iter()
        .map(|i| {
            let g = sampled(i + 2 * PROPERTY_SAMPLES, 1, 12, &ps);
            (1..=4)
                .filter(|&k| {
                    is_p2_kp1_free(&g, k).unwrap().free != common::naive_p2_kp1_free(&g, k)
                })
                .count() as u64
        })
        .sum();
    let ham_mismatch: u64 = (0..PROPERTY_SAMPLES)
        .into_par_iter()
        .map(|i| {
            let g = sampled(i + PROPERTY_SAMPLES, 1, 10, &ps);
            let hk = hamiltonian_cycle_held_karp(&g).unwrap().is_some();
            let bt = hamiltonian_cycle_backtrack(&g, &Limits::default())
                .unwrap()
                .is_some();
            (hk != bt) as u64
        })
        .sum();
    Outcome {
        pass: tough_mismatch == 0 && free.1 == 0 && random_free_mismatch == 0 && ham_mismatch == 0,
        detail: format!(
            "toughness vs full enumeration: {tough_mismatch}/{PROPERTY_SAMPLES} mismatches; \
             freeness vs (k+2)-subsets (n<=7, k=1..5): {}/{} mismatches, (random n<=12, k=1..4): {random_free_mismatch}/{} mismatches; \
             Held-Karp vs backtracking: {ham_mismatch}/{PROPERTY_SAMPLES} mismatches",
            free.1,
            free.0,
            4 * PROPERTY_SAMPLES
        ),
    }
}

fn hamiltonian_implies_tough() -> Outcome {
    #[derive(Default)]
    struct H(u64, u64, Option<String>);
    let t = corpus_fold(
        |g| {
            if g.order() < 3 || hamiltonian_cycle_held_karp(g).unwrap().is_none() {
                return H::default();
            }
            let tough = is_t_tough(g, Rational::ONE).unwrap().holds;
            H(1, (!tough) as u64, (!tough).then(|| write_graph6(g)))
        },
        |a, b| H(a.0 + b.0, a.1 + b.1, a.2.or(b.2)),
    );
    Outcome {
        pass: t.1 == 0 && t.0 > 0,
        detail: format!(
            "hamiltonian graphs n<=7: {} ; not 1-tough: {} first={:?}",
            t.0, t.1, t.2
        ),
    }
}

fn replay_soundness() -> Outcome {
    #[derive(Default)]
    struct R {
        replayed: u64,
        fired: u64,
        claim_failed: u64,
        first_bad: Option<String>,
    }
    let t = corpus_fold(
        |g| {
            let r = replay(g, 4, &Limits::default()).unwrap();
            if r.outcome != ReplayOutcome::Replayed {
                return R::default();
            }
            let fired = r.claims.iter().any(|c| !c.improvements.is_empty());
            let failed = !r.claim(ClaimId::UIndependent).unwrap().holds;
            R {
                replayed: 1,
                fired: fired as u64,
                claim_failed: failed as u64,
                first_bad: (fired || failed).then(|| r.graph6.clone()),
            }
        },
        |a, b| R {
            replayed: a.replayed + b.replayed,
            fired: a.fired + b.fired,
            claim_failed: a.claim_failed + b.claim_failed,
            first_bad: a.first_bad.or(b.first_bad),
        },
    );
    // Deliberately shorter cycles: every produced improvement must validate
    // and be strictly longer, and every exchange kind must be exercised.
    let mut kinds = BTreeSet::new();
    let mut improvements = 0u64;
    let mut bad_improvements = 0u64;
    for n in 6..=9 {
        for g in common::sample_graphs(n, 60, 7000 + n as u64) {
            for len in 3..n {
                common::for_each_context_report(&g, len, 3, |c, reports| {
                    for e in reports.iter().flat_map(|r| &r.improvements) {
                        improvements += 1;
                        if e.cycle.validate(&g).is_err() || e.cycle.len() <= c.len() {
                            bad_improvements += 1;
                        }
                        kinds.insert(e.kind);
                    }
                });
            }
        }
    }
    let all_kinds = kinds.len() == ExchangeKind::ALL.len();
    Outcome {
        pass: t.replayed > 0 && t.fired == 0 && t.claim_failed == 0 && improvements > 0 && bad_improvements == 0 && all_kinds,
        detail: format!(
            "longest-cycle contexts n<=7: {} (exchanges fired {}, u-independence failures {}, first={:?}); \
             fixture improvements {improvements} invalid or not longer {bad_improvements}; kinds seen {}/{}",
            t.replayed,
            t.fired,
            t.claim_failed,
            t.first_bad,
            kinds.len(),
            ExchangeKind::ALL.len()
        ),
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("petersen suite", petersen_suite),
        (
            "exhaustive longest-cycle domination, k=4, n<=7",
            exhaustive_main3,
        ),
        ("sampled longest-cycle domination, k=4", sampled_main3),
        ("extremal identity of f", extremal_identity),
        ("final arithmetic infeasible for k>=4", final_infeasibility),
        ("neighbour bound on free graphs", neighbour_bound),
        ("oracle equivalences", oracle_equivalences),
        ("hamiltonian implies 1-tough", hamiltonian_implies_tough),
        ("replay soundness", replay_soundness),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        if !o.pass {
            failures += 1;
        }
        println!(
            "criterion {} [{}] {name}: {} ({:.1?})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
