use fermisep::classify::{self, SetLabel, Tolerances, Verdict};
use fermisep::linalg::{self, c, ComplexMatrix, C64};
use fermisep::multicopy;
use fermisep::random::{self, PureFamily, XFamily};
use fermisep::split::ModeBipartition;
use fermisep::xstate::XStateParams;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn one() -> ModeBipartition {
    ModeBipartition::one_by_one()
}

fn family() -> impl Strategy<Value = XFamily> {
    prop::sample::select(XFamily::ALL.to_vec())
}

/// A product of diagonal single-mode states plus the largest `r` and `s`
/// compatible with positivity, scaled by random factors.
fn random_p1_state(rng: &mut ChaCha8Rng) -> XStateParams {
    let (x, y): (f64, f64) = (rng.random(), rng.random());
    let z = x * y;
    let r_max = ((1.0 - x - y + z) * z).sqrt();
    let s_max = ((x - z) * (y - z)).sqrt();
    let r = C64::from_polar(r_max * rng.random::<f64>(), rng.random_range(0.0..std::f64::consts::TAU));
    let s = C64::from_polar(s_max * rng.random::<f64>(), rng.random_range(0.0..std::f64::consts::TAU));
    XStateParams::even(x, y, z, r, s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn inclusion_chain_holds(seed in any::<u64>(), fam in family()) {
        let rho = random::random_x_state(fam, &mut ChaCha8Rng::seed_from_u64(seed)).to_matrix();
        let report = classify::classify(&rho, one(), Tolerances::default()).unwrap();
        prop_assert!(report.chain_violations().is_empty(), "{:?}", report.chain_violations());
        prop_assert_eq!(report.verdict(SetLabel::Z1), Some(Verdict::Member));
    }

    #[test]
    fn one_by_one_separability_is_ppt(seed in any::<u64>(), fam in family()) {
        let params = random::random_x_state(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let rho = params.to_matrix();
        let tols = Tolerances::default();
        let ppt = classify::is_ppt(&rho, one(), tols.membership).unwrap().verdict;
        prop_assert_eq!(classify::in_s1(&rho, one(), tols).unwrap().verdict, ppt);
        prop_assert_eq!(classify::in_s2prime(&rho, one(), tols).unwrap().verdict, ppt);
        let diagonal = params.r.norm().max(params.s.norm()) <= 1e-9;
        prop_assert_eq!(classify::in_s2(&rho, one(), tols).unwrap().is_member(), diagonal);
    }

    #[test]
    fn pure_product_tests_agree(seed in any::<u64>(), ma in 1usize..3, mb in 1usize..3, fam in prop::sample::select(PureFamily::ALL.to_vec()), odd in any::<bool>()) {
        let split = ModeBipartition::new(ma, mb).unwrap();
        let psi = random::random_parity_pure(split, fam, odd, &mut ChaCha8Rng::seed_from_u64(seed));
        let rho = random::pure_density(&psi);
        let p1 = classify::is_product_p1(&rho, split, 1e-9).unwrap().is_member();
        let p2 = classify::is_product_p2(&rho, split, 1e-9).unwrap().is_member();
        let pure = classify::is_product_pure(&psi, split, 1e-9).unwrap().is_member();
        prop_assert_eq!(p1, pure);
        prop_assert_eq!(p2, pure);
    }

    #[test]
    fn p3_agrees_with_p2_on_physical_states(seed in any::<u64>(), ma in 1usize..3, mb in 1usize..3, product in any::<bool>()) {
        let split = ModeBipartition::new(ma, mb).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = if product { random::random_even_product(split, &mut rng) } else { random::random_even_state(split.modes(), &mut rng) };
        let p2 = classify::is_product_p2(&rho, split, 1e-9).unwrap().is_member();
        let p3 = classify::is_product_p3(&rho, split, 1e-9).unwrap().is_member();
        prop_assert_eq!(p2, p3);
        prop_assert_eq!(p2, product);
    }

    #[test]
    fn mixtures_of_p1_states_are_ppt(seed in any::<u64>(), count in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights = random::dirichlet(count, &mut rng);
        let mut rho = ComplexMatrix::zeros(4, 4);
        for w in weights {
            let state = random_p1_state(&mut rng).to_matrix();
            prop_assert!(classify::is_product_p1(&state, one(), 1e-9).unwrap().is_member());
            rho += state * c(w, 0.0);
        }
        let mix = XStateParams::from_matrix(&rho).unwrap();
        prop_assert!(mix.r.norm_sqr() <= (mix.x - mix.z) * (mix.y - mix.z) + 1e-12);
        prop_assert!(mix.s.norm_sqr() <= mix.z * (1.0 - mix.x - mix.y + mix.z) + 1e-12);
    }

    #[test]
    fn two_copy_block_preserves_ppt(seed in any::<u64>(), fam in family()) {
        let rho = random::random_x_state(fam, &mut ChaCha8Rng::seed_from_u64(seed)).to_matrix();
        let report = multicopy::check_multicopy(&rho, Tolerances::default()).unwrap();
        prop_assert!(report.consistent(), "{:?}", report);
    }

    #[test]
    fn closed_form_ppt_matches_spectrum(seed in any::<u64>(), fam in family()) {
        let params = random::random_x_state(fam, &mut ChaCha8Rng::seed_from_u64(seed));
        let witness = classify::ppt_witness(&params.to_matrix(), one()).unwrap();
        // the closed form is exact; the spectrum may sit on the boundary
        if witness.abs() > 1e-12 {
            prop_assert_eq!(params.ppt_closed_form(), witness >= 0.0);
        }
    }
}

#[test]
fn table_example_s_coherence_only() {
    // r = 0, s = 0.1, z(1-x-y+z) = 0.02
    let params = XStateParams::even(0.5, 0.4, 0.1, c(0.0, 0.0), c(0.1, 0.0));
    assert!((params.z * (1.0 - params.x - params.y + params.z) - 0.02).abs() < 1e-15);
    let rho = params.to_matrix();
    linalg::validate_density(&rho, 1e-9).unwrap();
    let tols = Tolerances::default();
    assert!(classify::in_s2prime(&rho, one(), tols).unwrap().is_member());
    assert!(!classify::in_s2(&rho, one(), tols).unwrap().is_member());
}
