use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specgap::constructions::{build_bn, build_family, Family};
use specgap::spectral::{dense_eigensolve, kn_minus_edge_lambda, path_lambda, rayleigh, spectral_radius, Method};
use specgap::{Error, Graph};

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.15f64..0.8).prop_filter_map("connected", |(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
        let g = Graph::new(n, edges).unwrap();
        g.is_connected().then_some(g)
    })
}

#[test]
fn named_spectral_radii() {
    let l = |g: &Graph| spectral_radius::<f64>(g, 1e-12).unwrap().lambda1;
    assert!((l(&build_family(Family::Path(4)).unwrap()) - 2.0 * (std::f64::consts::PI / 5.0).cos()).abs() < 1e-10);
    assert!((l(&build_family(Family::CompleteBipartite(3, 3)).unwrap()) - 3.0).abs() < 1e-10);
    assert!((l(&build_bn(6).unwrap().0) - (1.0 + 3f64.sqrt())).abs() < 1e-10);
    assert!((l(&build_family(Family::Star(3)).unwrap()) - 3f64.sqrt()).abs() < 1e-10);
    let k5m = build_family(Family::CompleteMinusEdge(5)).unwrap();
    assert!((dense_eigensolve::<f64>(&k5m).unwrap().lambda1 - (1.0 + 7f64.sqrt())).abs() < 1e-12);
    assert!((dense_eigensolve::<f64>(&build_family(Family::Cycle(6)).unwrap()).unwrap().lambda1 - 2.0).abs() < 1e-12);
    assert!((dense_eigensolve::<f64>(&build_family(Family::CompleteBipartite(2, 3)).unwrap()).unwrap().lambda1 - 6f64.sqrt()).abs() < 1e-12);
}

#[test]
fn closed_forms() {
    assert!((path_lambda::<f64>(2) - 1.0).abs() < 1e-15);
    assert!((path_lambda::<f64>(3) - 2f64.sqrt()).abs() < 1e-15);
    assert!((path_lambda::<f64>(100) - 1.9990326).abs() < 1e-7);
    assert!((kn_minus_edge_lambda::<f64>(3).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    assert!((kn_minus_edge_lambda::<f64>(4).unwrap() - 2.5615528).abs() < 1e-7);
    assert!((kn_minus_edge_lambda::<f64>(5).unwrap() - (1.0 + 7f64.sqrt())).abs() < 1e-14);
    assert!(kn_minus_edge_lambda::<f64>(2).is_err());
    // single precision goes through the same code
    assert!((path_lambda::<f32>(3) - 2f32.sqrt()).abs() < 1e-6);
    let p5 = build_family(Family::Path(5)).unwrap();
    assert!((spectral_radius::<f32>(&p5, 1e-5).unwrap().lambda1 - path_lambda::<f32>(5)).abs() < 1e-4);
}

#[test]
fn rayleigh_examples() {
    let k33 = build_family(Family::CompleteBipartite(3, 3)).unwrap();
    assert!((rayleigh(&k33, &[1.0f64; 6]).unwrap() - 3.0).abs() < 1e-15);
    let p3 = build_family(Family::Path(3)).unwrap();
    assert!((rayleigh(&p3, &[1.0f64; 3]).unwrap() - 4.0 / 3.0).abs() < 1e-15);
    assert!(matches!(rayleigh(&p3, &[0.0f64; 3]), Err(Error::ZeroVector)));
}

#[test]
fn non_convergence_is_reported() {
    let (g, _) = build_bn(400).unwrap();
    let opts = specgap::spectral::PowerOptions { tol: 1e-12, max_iter: 50 };
    match specgap::spectral::spectral_radius_with(&g, &opts) {
        Err(Error::NotConverged { iterations, estimate, .. }) => {
            assert_eq!(iterations, 50);
            assert!(estimate > 2.0 && estimate < 3.0);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn disconnected_uses_largest_component() {
    let g = Graph::new(7, [(0, 1), (2, 3), (3, 4), (4, 2), (5, 6)]).unwrap();
    let s = spectral_radius::<f64>(&g, 1e-12).unwrap();
    assert!((s.lambda1 - 2.0).abs() < 1e-10);
    assert_eq!(&s.eigenvector[..2], &[0.0, 0.0]);
    assert!(s.eigenvector[2..5].iter().all(|&x| x > 0.5));
    assert_eq!(s.method, Method::PowerShifted);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn result_invariants(g in connected_strategy(14)) {
        let s = spectral_radius::<f64>(&g, 1e-12).unwrap();
        let norm: f64 = s.eigenvector.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assert!((norm - 1.0).abs() < 1e-12);
        prop_assert!(s.residual <= 1e-12);
        prop_assert!(s.eigenvector.iter().all(|&x| x > 0.0));
        let (lo, hi) = (g.min_degree() as f64, g.max_degree() as f64);
        if g.is_regular() {
            prop_assert!((s.lambda1 - hi).abs() < 1e-10);
        } else {
            prop_assert!(s.lambda1 >= lo - 1e-12 && s.lambda1 < hi);
        }
        let d = dense_eigensolve::<f64>(&g).unwrap();
        prop_assert!((d.lambda1 - s.lambda1).abs() < 1e-9);
    }

    #[test]
    fn rayleigh_is_maximal(g in connected_strategy(12), seed in any::<u64>()) {
        let l = spectral_radius::<f64>(&g, 1e-12).unwrap().lambda1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let y: Vec<f64> = (0..g.order()).map(|_| rng.random_range(-1.0..1.0)).collect();
            if let Ok(r) = rayleigh(&g, &y) {
                prop_assert!(r <= l + 1e-12);
            }
        }
    }

    #[test]
    fn adding_an_edge_raises_lambda(g in connected_strategy(12), pick in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let before = dense_eigensolve::<f64>(&g).unwrap().lambda1;
        let after = dense_eigensolve::<f64>(&g.with_edge(u, v).unwrap()).unwrap().lambda1;
        prop_assert!(after > before + 1e-10);
    }
}
