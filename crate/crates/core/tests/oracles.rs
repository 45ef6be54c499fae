mod common;

use catalyst_core::catalysis::{
    example1_condition, is_general_catalyst, theorem1_is_catalyst, theorem1_min_residual,
    theorem2_bound,
};
use catalyst_core::experiments::{generate_catalyzable_pairs, PairGenSpec};
use catalyst_core::schmidt::{precedes, tensor_spectrum};
use catalyst_core::search::rng::{Domain, TrialStreams};
use catalyst_core::search::{
    exhaustive_catalyst_oracle, general_catalyst_exists, sample_sorted_simplex,
};
use catalyst_core::{Tolerance, TransformQuery};
use common::*;
use rand::Rng;

fn incomparable_two_level<R: Rng>(rng: &mut R) -> TransformQuery {
    loop {
        let a: f64 = rng.gen_range(0.5..1.0);
        let b: f64 = rng.gen_range(0.5..1.0);
        if a > b {
            return TransformQuery::new(osc(&[a, 1.0 - a]), osc(&[b, 1.0 - b]));
        }
    }
}

#[test]
fn two_level_closed_form_matches_direct_check() {
    let tol = Tolerance::default();
    let mut rng = TrialStreams::new(1, Domain::Properties).stream(0);
    for _ in 0..2000 {
        let q = incomparable_two_level(&mut rng);
        for i in 0..=20 {
            let x = 0.5 + 0.025 * i as f64;
            let chi = osc(&[x, 1.0 - x]);
            let closed = theorem1_is_catalyst(&q, x, &tol).unwrap();
            assert_eq!(
                closed,
                is_general_catalyst(&q, &chi, &tol).feasible,
                "{q:?} x = {x}"
            );
            if closed {
                let got = theorem1_min_residual(&q, x, &tol).unwrap();
                let want = min_residual_bisect(&q, x);
                assert!((got - want).abs() < 1e-9, "{q:?} x = {x}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn three_level_bound_is_sound() {
    let tol = Tolerance::default();
    let mut rng = TrialStreams::new(2, Domain::Properties).stream(0);
    let mut checked = 0;
    while checked < 500 {
        let q = TransformQuery::new(
            sample_sorted_simplex(3, &mut rng),
            sample_sorted_simplex(3, &mut rng),
        );
        let Ok(bound) = theorem2_bound(&q, &tol) else {
            continue;
        };
        checked += 1;
        // every two-level catalyst below the bound works with full consumption
        for i in 0..=10 {
            let x = 0.5 + (bound.min(1.0) - 0.5) * i as f64 / 10.0;
            let chi = osc(&[x, 1.0 - x]);
            assert!(
                is_general_catalyst(&q, &chi, &tol).feasible,
                "{q:?} x = {x}"
            );
        }
    }
}

#[test]
fn two_to_three_level_condition_matches_direct_check() {
    let tol = Tolerance::default();
    let mut rng = TrialStreams::new(3, Domain::Properties).stream(0);
    let mut checked = 0;
    while checked < 1000 {
        let psi = sample_sorted_simplex(2, &mut rng);
        let phi = sample_sorted_simplex(3, &mut rng);
        let q = TransformQuery::new(psi, phi);
        if precedes(&q.psi, &q.phi, &tol) {
            continue;
        }
        checked += 1;
        for i in 0..=20 {
            let x = 0.5 + 0.025 * i as f64;
            let direct = is_general_catalyst(&q, &osc(&[x, 1.0 - x]), &tol).feasible;
            assert_eq!(
                example1_condition(&q, x, &tol).unwrap(),
                direct,
                "{q:?} x = {x}"
            );
        }
    }
}

#[test]
fn region_matches_closed_form_system() {
    let grid = example3_grid(400);
    let check = region_cross_check(&grid);
    assert!(check.compared > 1000);
    assert_eq!(check.disagreements, 0);
    assert!(check.min_feasible_x1p >= 31.0 / 49.0 - 1e-3);
    assert!(grid.is_feasible_at(0.81, 0.10));
}

#[test]
fn merge_matches_sort_up_to_64() {
    let mut rng = TrialStreams::new(4, Domain::Properties).stream(0);
    for _ in 0..300 {
        let a = sample_sorted_simplex(rng.gen_range(1..=64), &mut rng);
        let b = sample_sorted_simplex(rng.gen_range(1..=64), &mut rng);
        assert_eq!(
            tensor_spectrum(&a, &b).coeffs(),
            naive_tensor(a.coeffs(), b.coeffs()).as_slice()
        );
    }
}

#[test]
fn generated_witnesses_agree_with_the_grid_oracle() {
    // a standard catalyst implies a general one at any k >= 1
    let tol = Tolerance::default();
    let spec = PairGenSpec {
        n: 5,
        k: 3,
        count: 30,
        seed: 12,
        ..PairGenSpec::default()
    };
    for p in generate_catalyzable_pairs(&spec, &tol).unwrap() {
        assert!(general_catalyst_exists(&p.query, 3, &tol));
        let found = exhaustive_catalyst_oracle(&p.query, 3, 0.01, &tol).unwrap();
        if let Some(chi) = found {
            assert!(precedes(
                &tensor_spectrum(&p.query.psi, &chi),
                &tensor_spectrum(&p.query.phi, &chi),
                &tol
            ));
        }
    }
}

#[test]
fn separable_residual_witness_is_weakest() {
    let tol = Tolerance::default();
    let mut rng = TrialStreams::new(5, Domain::Properties).stream(0);
    for _ in 0..500 {
        let q = TransformQuery::new(
            sample_sorted_simplex(4, &mut rng),
            sample_sorted_simplex(4, &mut rng),
        );
        let chi = sample_sorted_simplex(2, &mut rng);
        let chi_p = sample_sorted_simplex(2, &mut rng);
        let some = precedes(
            &tensor_spectrum(&q.psi, &chi),
            &tensor_spectrum(&q.phi, &chi_p),
            &tol,
        );
        if some {
            assert!(is_general_catalyst(&q, &chi, &tol).feasible);
        }
    }
}
