mod common;

use hamtough::cycles::{
    canonicalize, circumference, enumerate_longest_cycles, find_hamiltonian_cycle,
    find_longest_cycle, find_longest_cycle_with, hamiltonian_cycle_backtrack,
    hamiltonian_cycle_held_karp, is_edge_dominating,
};
use hamtough::generators::{
    complete, complete_multipartite, cycle_graph, path_graph, petersen, random_graph,
};
use hamtough::harness::labeled_graph_from_mask;
use hamtough::{Cycle, Graph, Limits, Rational};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, m)| {
        let pairs = n * n.saturating_sub(1) / 2;
        labeled_graph_from_mask(
            n,
            if pairs >= 64 {
                m
            } else {
                m & ((1u64 << pairs) - 1)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solvers_agree_on_hamiltonicity(g in graph_strategy(10)) {
        let brute = common::brute_circumference(&g) == Some(g.order()) && g.order() >= 3;
        let hk = hamiltonian_cycle_held_karp(&g).unwrap();
        let bt = hamiltonian_cycle_backtrack(&g, &Limits::default()).unwrap();
        prop_assert_eq!(hk.is_some(), brute);
        prop_assert_eq!(bt.is_some(), brute);
        for c in hk.iter().chain(bt.iter()) {
            prop_assert!(c.validate(&g).is_ok());
            prop_assert_eq!(c.len(), g.order());
        }
    }

    #[test]
    fn circumference_matches_brute_force(g in graph_strategy(9)) {
        let brute = common::brute_circumference(&g);
        prop_assert_eq!(circumference(&g).unwrap(), brute);
        let c = find_longest_cycle(&g).unwrap();
        prop_assert_eq!(c.as_ref().map(Cycle::len), brute);
        if let Some(c) = c {
            prop_assert!(c.validate(&g).is_ok());
        }
    }

    #[test]
    fn longest_cycle_enumeration_is_complete(g in graph_strategy(8)) {
        let all = common::all_cycles(&g);
        let best = all.iter().map(Vec::len).max();
        let mut expected: Vec<Vec<usize>> = all.into_iter().filter(|c| Some(c.len()) == best).collect();
        expected.sort();
        let got = enumerate_longest_cycles(&g, usize::MAX).unwrap();
        prop_assert_eq!(got.length, best);
        prop_assert!(!got.truncated);
        let got: Vec<Vec<usize>> = got.cycles.iter().map(|c| c.vertices().to_vec()).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn edge_domination_matches_brute_force(g in graph_strategy(8)) {
        for seq in common::all_cycles(&g) {
            let c = Cycle::new(&g, seq.clone()).unwrap();
            let r = is_edge_dominating(&g, &c).unwrap();
            prop_assert_eq!(r.holds, common::brute_edge_dominating(&g, &seq));
            if let Some(comp) = r.offending_component {
                prop_assert!(comp.len() >= 2 && comp.is_disjoint(c.vertex_set()));
            }
        }
    }

    #[test]
    fn canonical_form_is_rotation_and_reflection_invariant(
        n in 3usize..12, shift in 0usize..12, flip in any::<bool>(),
    ) {
        let base: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % 17).collect();
        let mut seq = base.clone();
        seq.rotate_left(shift % n);
        if flip {
            seq.reverse();
        }
        prop_assert_eq!(canonicalize(seq), canonicalize(base));
    }
}

#[test]
fn known_cycle_facts() {
    let p = petersen();
    assert!(find_hamiltonian_cycle(&p).unwrap().is_none());
    assert_eq!(circumference(&p).unwrap(), Some(9));
    assert_eq!(circumference(&path_graph(6).unwrap()).unwrap(), None);
    assert!(find_hamiltonian_cycle(&complete(6).unwrap())
        .unwrap()
        .is_some());
    // K_{3,4} is not hamiltonian; its circumference is 6.
    let k34 = complete_multipartite(&[3, 4]).unwrap();
    assert!(find_hamiltonian_cycle(&k34).unwrap().is_none());
    assert_eq!(circumference(&k34).unwrap(), Some(6));
    // Every longest cycle of the Petersen graph is edge-dominating.
    for c in enumerate_longest_cycles(&p, usize::MAX).unwrap().cycles {
        assert!(is_edge_dominating(&p, &c).unwrap().holds);
    }
}

#[test]
fn invalid_cycles_are_rejected() {
    let g = cycle_graph(5).unwrap();
    assert!(Cycle::new(&g, vec![0, 1, 2]).is_err());
    assert!(Cycle::new(&g, vec![0, 1]).is_err());
    assert!(Cycle::new(&g, vec![0, 1, 1, 2, 3]).is_err());
    assert!(Cycle::new(&g, vec![4, 3, 2, 1, 0]).is_ok());
}

#[test]
fn larger_random_graphs_use_the_backtracking_path() {
    // Above the subset-DP range the circumference comes from backtracking;
    // a found cycle must validate and a hamiltonian cycle forces n.
    for seed in 0..6 {
        let g = random_graph(22, Rational::new(3, 10).unwrap(), seed).unwrap();
        let c = find_longest_cycle_with(&g, &Limits::default()).unwrap();
        if let Some(c) = &c {
            assert!(c.validate(&g).is_ok());
        }
        let ham = find_hamiltonian_cycle(&g).unwrap().is_some();
        assert_eq!(ham, c.map(|c| c.len()) == Some(22));
    }
}

#[test]
fn time_limit_trips_as_resource_guard() {
    let g = random_graph(40, Rational::new(1, 5).unwrap(), 3).unwrap();
    let limits = Limits::default().with_time_limit(std::time::Duration::from_millis(1));
    std::thread::sleep(std::time::Duration::from_millis(5));
    match find_longest_cycle_with(&g, &limits) {
        Err(e) => assert!(e.is_resource_guard()),
        Ok(c) => panic!("expected a time-limit error, got {c:?}"),
    }
}
