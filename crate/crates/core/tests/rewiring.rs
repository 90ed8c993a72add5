use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specgap::constructions::build_bn;
use specgap::graph::bipartition;
use specgap::rewiring::{apply_two_switch, find_bad_pairs, hill_climb, ClimbOptions, Policy, MIN_GAIN};
use specgap::spectral::dense_eigensolve;
use specgap::Graph;

fn connected(n: usize, seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.random_range(0.2..0.6);
    let g = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect::<Vec<_>>()).unwrap();
    g.is_connected().then_some(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn bad_pair_switches_raise_lambda(n in 5usize..13, seed in any::<u64>()) {
        let Some(g) = connected(n, seed) else { return Ok(()) };
        let s = dense_eigensolve::<f64>(&g).unwrap();
        for mv in find_bad_pairs(&g, &s.eigenvector, None).unwrap() {
            let h = apply_two_switch(&g, &mv).unwrap();
            prop_assert!(h.is_connected());
            prop_assert_eq!(h.degrees(), g.degrees());
            let l = dense_eigensolve::<f64>(&h).unwrap().lambda1;
            prop_assert!(l >= s.lambda1 - 1e-12, "{} < {}", l, s.lambda1);
        }
    }

    #[test]
    fn climbs_are_monotone_and_degree_preserving(n in 5usize..11, seed in any::<u64>(), first in any::<bool>()) {
        let Some(g) = connected(n, seed) else { return Ok(()) };
        let opts = ClimbOptions { seed, policy: if first { Policy::First } else { Policy::Best }, ..Default::default() };
        let t = hill_climb::<f64>(&g, &opts).unwrap();
        for w in t.steps.windows(2) {
            prop_assert!(w[1].lambda1 > w[0].lambda1 + MIN_GAIN);
            prop_assert_eq!(w[1].graph.degrees(), g.degrees());
            prop_assert!(w[1].graph.is_connected());
        }
        let end = &t.last().graph;
        let x = dense_eigensolve::<f64>(end).unwrap().eigenvector;
        for mv in find_bad_pairs(end, &x, None).unwrap() {
            let l = dense_eigensolve::<f64>(&apply_two_switch(end, &mv).unwrap()).unwrap().lambda1;
            prop_assert!(l <= t.last().lambda1 + MIN_GAIN);
        }
    }
}

#[test]
fn climbs_are_reproducible() {
    let g = connected(12, 99).unwrap();
    for policy in [Policy::Best, Policy::First] {
        let opts = ClimbOptions { seed: 7, policy, ..Default::default() };
        assert_eq!(hill_climb::<f64>(&g, &opts).unwrap(), hill_climb::<f64>(&g, &opts).unwrap());
    }
}

#[test]
fn bipartite_climbs_stay_bipartite() {
    let (b10, bip) = build_bn(10).unwrap();
    // scramble B_10 by a bipartition-preserving switch in reverse
    let x = dense_eigensolve::<f64>(&b10).unwrap().eigenvector;
    assert!(find_bad_pairs(&b10, &x, Some(&bip)).unwrap().is_empty());
    let opts = ClimbOptions { keep: Some(bip.clone()), ..Default::default() };
    let t = hill_climb::<f64>(&b10, &opts).unwrap();
    assert_eq!(t.moves(), 0);
    for s in &t.steps {
        assert!(bip.check(&s.graph).is_ok());
        assert!(bipartition(&s.graph).is_ok());
    }
}
