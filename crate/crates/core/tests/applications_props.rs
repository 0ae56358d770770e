mod common;

use common::*;
use locc_recovery::applications::{
    concentration_bounds, multicopy_k0, multicopy_recover, mutual_catalysis_check, verify_concentration, CopyMode,
};
use locc_recovery::number::{int, ratio, Rational};
use locc_recovery::strict::{decide_strict, StrictCase};
use locc_recovery::uniformity::indices;
use locc_recovery::vectors::is_majorized;
use locc_recovery::SchmidtVector;
use num_traits::One;
use proptest::prelude::*;
use rand::Rng;

fn two_level(p: &Rational) -> SchmidtVector {
    SchmidtVector::new(vec![p.clone(), Rational::one() - p]).unwrap()
}

/// `(a, b)` with `1/2 < a ≤ b < 1`, on a grid of step 1/200.
fn levels() -> impl Strategy<Value = (Rational, Rational)> {
    (101i64..200, 0i64..99).prop_map(|(x, d)| (ratio(x, 200), ratio((x + d).min(199), 200)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn two_level_interval_top_is_b_over_2a((a, b) in levels()) {
        let bounds = concentration_bounds(&a, &b, 2).unwrap();
        let (lo, hi) = bounds.p_interval.unwrap();
        prop_assert_eq!(lo, ratio(1, 2));
        prop_assert_eq!(&hi, &(&b / (int(2) * &a)));
    }

    #[test]
    fn two_level_interval_is_exact((a, b) in levels(), t in 0i64..=10) {
        let (psi, phi) = (two_level(&a), two_level(&b));
        let (lo, hi) = concentration_bounds(&a, &b, 2).unwrap().p_interval.unwrap();
        let inside = &lo + (&hi - &lo) * ratio(t, 10);
        prop_assert!(verify_concentration(&psi, &phi, &two_level(&inside), 2).unwrap());
        let above = &hi + ratio(1, 10_000);
        if above <= Rational::one() {
            prop_assert!(!verify_concentration(&psi, &phi, &two_level(&above), 2).unwrap());
        }
    }

    #[test]
    fn concentration_bounds_hold_for_passing_states((a, b) in levels(), k in 2usize..5, seed in any::<u64>()) {
        let mut rng = rng(seed);
        let chi = random_state(&mut rng, k, 1, 8);
        let (psi, phi) = (two_level(&a), two_level(&b));
        if verify_concentration(&psi, &phi, &chi, k).unwrap() {
            let bounds = concentration_bounds(&a, &b, k).unwrap();
            prop_assert!(chi.min() >= bounds.gamma_min && chi.max() <= bounds.gamma_max);
        }
    }

    #[test]
    fn mutual_catalysis_flags_are_consistent(seed in any::<u64>(), n in 2usize..5, m in 2usize..5) {
        let mut rng = rng(seed);
        let (psi, phi) = (random_state(&mut rng, n, 0, 6), random_state(&mut rng, n, 0, 6));
        let (alpha, beta) = (random_state(&mut rng, m, 0, 6), random_state(&mut rng, m, 0, 6));
        let r = mutual_catalysis_check(&psi, &phi, &alpha, &beta).unwrap();
        prop_assert_eq!(r.psi_to_phi, independent_majorized(&psi, &phi));
        prop_assert_eq!(r.alpha_to_beta, independent_majorized(&alpha, &beta));
        prop_assert_eq!(r.joint, independent_majorized(&psi.tensor(&alpha), &phi.tensor(&beta)));
        prop_assert_eq!(r.is_mutual_catalysis, !r.psi_to_phi && !r.alpha_to_beta && r.joint && !r.trivial_cross);
        // Majorization is preserved under tensor products.
        if r.psi_to_phi && r.alpha_to_beta {
            prop_assert!(r.joint);
        }
    }

    #[test]
    fn copies_of_the_target_reach_the_threshold(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(2..=3);
        let phi = random_state(&mut rng, n, 2, 9);
        let chi = random_state(&mut rng, 2, 1, 9);
        let (big_l, g) = (indices(&chi).unwrap().big_l_u, indices(&phi).unwrap().g_u);
        prop_assume!(int(0) < big_l && big_l < g && g < Rational::one());
        let k0 = multicopy_k0(&chi, &phi).unwrap();
        prop_assert!(k0 >= 2);
        prop_assume!(n.pow(k0 as u32) <= 729);
        let psi = random_strict(&mut rng, &phi);
        let at = multicopy_recover(&psi, &phi, &chi, k0, CopyMode::Target).unwrap();
        prop_assert_eq!(at.case, StrictCase::CaseII);
        let before = decide_strict(&phi.tensor_power(k0 - 1).unwrap(), &chi).unwrap();
        prop_assert_ne!(before.case, StrictCase::CaseII);
        // Landing exactly on the threshold leaves the boundary pattern test in charge.
        if num_traits::pow(g.clone(), k0 - 1) != big_l {
            prop_assert!(!before.feasible);
        }
    }

    #[test]
    fn copies_of_a_two_level_auxiliary_do_not_help(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(2..=4);
        let phi = random_state(&mut rng, n, 2, 9);
        let chi = random_state(&mut rng, 2, 1, 9);
        prop_assume!(!chi.is_uniform() && !phi.is_uniform());
        prop_assume!(indices(&chi).unwrap().big_l_u < indices(&phi).unwrap().g_u);
        let psi = random_strict(&mut rng, &phi);
        for copies in 1..=5 {
            let r = multicopy_recover(&psi, &phi, &chi, copies, CopyMode::Auxiliary).unwrap();
            prop_assert!(!r.feasible, "copies={} case={:?}", copies, r.case);
        }
    }
}

#[test]
fn worked_copy_counts() {
    assert_eq!(multicopy_k0(&v(&["2/3", "1/3"]), &v(&["5/9", "4/9"])).unwrap(), 4);
    let phi = p(&[3, 3, 3, 3, 2, 2]);
    let psi = p(&[17, 17, 17, 17, 14, 14]);
    let chi = v(&["3/5", "2/5"]);
    assert!(!multicopy_recover(&psi, &phi, &chi, 1, CopyMode::Auxiliary).unwrap().feasible);
    assert!(multicopy_recover(&psi, &phi, &chi, 2, CopyMode::Auxiliary).unwrap().feasible);
}

#[test]
fn worked_mutual_catalysis() {
    let psi = v(&["0.33", "0.32", "0.3", "0.05"]);
    let phi = v(&["0.6", "0.2", "0.14", "0.06"]);
    let alpha = v(&["0.6", "0.3", "0.1", "0"]);
    let beta = v(&["0.46", "0.46", "0.08", "0"]);
    assert!(mutual_catalysis_check(&psi, &phi, &alpha, &beta).unwrap().is_mutual_catalysis);
    assert!(is_majorized(&psi.tensor(&alpha), &phi.tensor(&beta)));
}
