mod common;

use boolean_clt::boolean::{boolean_convolve, boolean_power};
use boolean_clt::inversion::{theorem2_bracket, levy_cauchy_bound};
use boolean_clt::measure::levy_distance;
use boolean_clt::transform::{bound_prop2, bound_trivial, eval_f, eval_g};
use boolean_clt::{AtomicMeasure, ComplexPoint};
use common::*;
use proptest::prelude::*;

fn measure() -> impl Strategy<Value = AtomicMeasure> {
    prop::collection::vec((-3.0..3.0f64, 0.05..1.0f64), 1..=6).prop_map(|pairs| {
        let total: f64 = pairs.iter().map(|p| p.1).sum();
        AtomicMeasure::new(pairs.into_iter().map(|(t, w)| (t, w / total))).unwrap()
    })
}

fn point() -> impl Strategy<Value = ComplexPoint> {
    (-5.0..5.0f64, -3.0..1.0f64).prop_map(|(x, ly)| ComplexPoint::new(x, 10f64.powf(ly)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn levy_is_a_metric(a in measure(), b in measure(), c in measure()) {
        let d = |x: &AtomicMeasure, y: &AtomicMeasure| levy_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &a), 0.0);
        prop_assert!((d(&a, &b) - d(&b, &a)).abs() <= 1e-12);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-11);
        prop_assert!(d(&a, &b) <= 1.0);
    }

    #[test]
    fn levy_matches_grid_scan(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (gm, gn) = (GridMeasure::random(&mut r, 4, 15_000), GridMeasure::random(&mut r, 4, 15_000));
        let oracle = grid_levy(&gm, &gn) as f64 * 1e-4;
        let d = levy_distance(&gm.to_measure(), &gn.to_measure()).unwrap();
        prop_assert!((d - oracle).abs() <= 2e-4, "{} vs {}", d, oracle);
    }

    #[test]
    fn nevanlinna_properties(mu in measure(), z in point()) {
        let g = eval_g(&mu, z);
        prop_assert!(g.im < 0.0);
        prop_assert!(g.norm() <= bound_trivial(&mu, z) * (1.0 + 1e-12));
        let f = eval_f(&mu, z).unwrap();
        prop_assert!(f.im >= z.y * (1.0 - 1e-9));
    }

    #[test]
    fn moment_bound_holds(mu in measure(), z in point()) {
        prop_assume!(z.x.abs() >= 1e-3);
        let g = eval_g(&mu, z).norm();
        for i in 0..=4 {
            prop_assert!(g < bound_prop2(&mu, z, i).unwrap());
        }
    }

    #[test]
    fn bracket_contains_true_masses(
        mu in measure(),
        a in -4.0..3.0f64,
        len in 1e-2..4.0f64,
        frac in 1e-3..0.999f64,
        ly in -4.0..0.0f64,
    ) {
        let b = a + len;
        let br = theorem2_bracket(&mu, a, b, 10f64.powf(ly), frac * 0.5 * len).unwrap();
        let c = br.check(&mu);
        prop_assert!(c.inner_slack >= -1e-9 && c.outer_slack >= -1e-9, "{:?}", c);
    }

    #[test]
    fn f_transforms_add(mu in measure(), nu in measure(), z in point()) {
        let conv = boolean_convolve(&mu, &nu).unwrap();
        prop_assert!((conv.total_mass() - 1.0).abs() < 1e-10);
        let lhs = eval_f(&conv, z).unwrap();
        let rhs = eval_f(&mu, z).unwrap() + eval_f(&nu, z).unwrap() - z.z();
        prop_assert!((lhs - rhs).norm() <= 1e-7 * (1.0 + rhs.norm()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn convolution_commutes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (mu, nu) = (random_rational_measure(&mut r, 4), random_rational_measure(&mut r, 4));
        let ab = boolean_convolve(&mu, &nu).unwrap();
        let ba = boolean_convolve(&nu, &mu).unwrap();
        prop_assert!(ab.approx_eq(&ba, 1e-12));
        let p3 = boolean_power(&mu, 3).unwrap();
        let c3 = boolean_convolve(&boolean_convolve(&mu, &mu).unwrap(), &mu).unwrap();
        prop_assert!(p3.approx_eq(&c3, 1e-10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cauchy_levy_bound_dominates(mu in measure(), nu in measure(), ly in -2.0..-0.5f64) {
        let b = levy_cauchy_bound(&mu, &nu, 10f64.powf(ly)).unwrap();
        prop_assert!(levy_distance(&mu, &nu).unwrap() <= b.bound);
    }
}
