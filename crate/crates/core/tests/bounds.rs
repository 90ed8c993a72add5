use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specgap::bounds::{
    bound_report, chen_hou_connectivity_bound, cioaba_bound, improved_connectivity_bound,
    improved_subgraph_bound, shi_inequality_gap, stevanovic_bound, subgraph_gap_check, BoundKind,
    ReportOptions,
};
use specgap::bounds::compare::{connectivity_denominator_gap, phi_difference};
use specgap::constructions::{build_bn, build_family, Family};
use specgap::Graph;

type Q = Ratio<i128>;

#[test]
fn exact_values() {
    assert_eq!(stevanovic_bound::<Q>(4, 3), Some(Q::new(1, 792)));
    assert_eq!(cioaba_bound::<Q>(8, Some(3)), Some(Q::new(1, 24)));
    assert_eq!(chen_hou_connectivity_bound::<Q>(4, 3, 3, 1), Some(Q::new(6, 64)));
    assert_eq!(improved_connectivity_bound::<Q>(4, 3, 3, 1), Some(Q::new(6, 22)));
    assert_eq!(improved_subgraph_bound::<Q>(10, 3, 3), Some(Q::new(9, 156)));
    assert_eq!(stevanovic_bound::<Q>(1, 3), None);
    assert_eq!(cioaba_bound::<Q>(5, None), None);
}

#[test]
fn reports_hold_on_random_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.random_range(3..=14);
        let p = rng.random_range(0.15..0.7);
        let g = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect::<Vec<_>>()).unwrap();
        if !g.is_connected() || g.is_regular() {
            continue;
        }
        let r = bound_report::<f64>(&g, &ReportOptions::default()).unwrap();
        assert!(r.error.is_none());
        assert!(r.all_hold(), "{}", r.graph6);
        let ch = r.entry(BoundKind::ChenHouConnectivity).unwrap().value.unwrap();
        let im = r.entry(BoundKind::ImprovedConnectivity).unwrap().value.unwrap();
        assert!(im > ch);
        checked += 1;
    }
}

#[test]
fn bn_reports() {
    for n in [6, 7, 12, 25] {
        let (g, _) = build_bn(n).unwrap();
        let r = bound_report::<f64>(&g, &ReportOptions { all_k: true, ..Default::default() }).unwrap();
        assert!(r.all_hold());
        let rows = r.entries.iter().filter(|e| e.kind == BoundKind::ImprovedConnectivity).count();
        assert_eq!(rows, r.k);
    }
}

#[test]
fn subgraph_bound_holds_on_deletions() {
    for g in [build_family(Family::Petersen).unwrap(), build_family(Family::Hypercube(3)).unwrap(), build_family(Family::Complete(6)).unwrap()] {
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let c = subgraph_gap_check::<f64>(&g, &g.without_edge(u, v).unwrap(), None, 1e-12).unwrap();
            assert!(c.holds, "{c:?}");
        }
    }
}

#[test]
fn denominator_gap_matches_formulas() {
    for n in 4..20usize {
        for k in 1..n - 1 {
            for delta in k + 1..n {
                let m = n - 1;
                if 2 * m >= n * delta {
                    continue;
                }
                let (a, b) = (
                    chen_hou_connectivity_bound::<Q>(n, m, delta, k).unwrap(),
                    improved_connectivity_bound::<Q>(n, m, delta, k).unwrap(),
                );
                // same numerator, so 1/a − 1/b scales with the gap
                let gap = connectivity_denominator_gap(n, delta, k);
                assert!(gap > 0);
                assert!(b > a);
            }
        }
    }
    for d in 1..30 {
        for k in 1..15 {
            let (direct, expanded) = phi_difference(d, k);
            assert_eq!(direct, expanded);
        }
    }
}

proptest! {
    #[test]
    fn shi_gap_is_nonnegative(a in 1e-3f64..100.0, b in 1e-3f64..100.0, p in -50f64..50.0, q in -50f64..50.0) {
        let g = shi_inequality_gap(a, b, p, q).unwrap();
        let closed = (a * p - (a + b) * q).powi(2) / (a + b);
        prop_assert!(g >= -1e-9 * (1.0 + closed));
        prop_assert!((g - closed).abs() <= 1e-9 * (1.0 + closed));
    }

    #[test]
    fn shi_gap_exact(a in 1i64..50, b in 1i64..50, p in -40i64..40, q in -40i64..40) {
        let r = |x: i64| Q::from_integer(x as i128);
        let g = shi_inequality_gap(r(a), r(b), r(p), r(q)).unwrap();
        let closed = (r(a) * r(p) - r(a + b) * r(q)) * (r(a) * r(p) - r(a + b) * r(q)) / r(a + b);
        prop_assert_eq!(g, closed);
    }
}
