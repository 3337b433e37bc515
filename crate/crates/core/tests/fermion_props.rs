use fermisep::fermion::{self, Monomial};
use fermisep::linalg::{self, c, ComplexMatrix, ZERO};
use fermisep::random;
use fermisep::split::ModeBipartition;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random even combination of Majorana monomials drawn from `indices`.
fn random_even_operator(indices: &[usize], modes: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let dim = 1 << modes;
    let mut out = ComplexMatrix::zeros(dim, dim);
    for mask in 0u32..(1 << indices.len()) {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let chosen: Vec<usize> = indices.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &k)| k).collect();
        let weight = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        Monomial::product(&chosen, modes).unwrap().add_to(&mut out, weight);
    }
    out
}

#[test]
fn majoranas_satisfy_the_clifford_relations() {
    for m in 1..=4 {
        let cs: Vec<ComplexMatrix> = (1..=2 * m).map(|k| fermion::majorana(k, m).unwrap()).collect();
        let id = ComplexMatrix::identity(1 << m, 1 << m);
        for (j, cj) in cs.iter().enumerate() {
            for (k, ck) in cs.iter().enumerate() {
                let anti = cj * ck + ck * cj;
                let expected = if j == k { &id * c(2.0, 0.0) } else { ComplexMatrix::zeros(1 << m, 1 << m) };
                assert_eq!(anti, expected, "m = {m}, j = {j}, k = {k}");
            }
        }
    }
}

#[test]
fn parity_anticommutes_with_every_majorana() {
    for m in 1..=5 {
        let parity = fermion::parity_operator(m).unwrap();
        for k in 1..=2 * m {
            let ck = fermion::majorana(k, m).unwrap();
            assert_eq!(&parity * &ck + &ck * &parity, ComplexMatrix::zeros(1 << m, 1 << m));
        }
    }
}

#[test]
fn parity_is_the_scaled_product_of_all_majoranas() {
    // Π = (-i)^m c_1 c_2 … c_{2m}, phase fixed by ⟨0|Π|0⟩ = +1
    for m in 1..=4 {
        let mut product = ComplexMatrix::identity(1 << m, 1 << m);
        for k in 1..=2 * m {
            product *= fermion::majorana(k, m).unwrap();
        }
        let phase = product[(0, 0)];
        let scaled = product / phase;
        assert!(linalg::max_abs_diff(&scaled, &fermion::parity_operator(m).unwrap()) < 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn even_operators_on_disjoint_modes_commute(seed in any::<u64>(), ma in 1usize..3, mb in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = ma + mb;
        let on_a: Vec<usize> = (1..=2 * ma).collect();
        let on_b: Vec<usize> = (2 * ma + 1..=2 * m).collect();
        let a = random_even_operator(&on_a, m, &mut rng);
        let b = random_even_operator(&on_b, m, &mut rng);
        prop_assert!(linalg::max_abs(&(&a * &b - &b * &a)) <= 1e-12);
    }

    #[test]
    fn pinching_is_idempotent_and_trace_preserving(seed in any::<u64>(), ma in 1usize..3, mb in 1usize..3) {
        let split = ModeBipartition::new(ma, mb).unwrap();
        let a = random::ginibre(split.dim(), split.dim(), &mut ChaCha8Rng::seed_from_u64(seed));
        let once = fermion::block_diagonal_part(&a, split).unwrap();
        let twice = fermion::block_diagonal_part(&once, split).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!((once.trace() - a.trace()).norm() <= 1e-12);
    }

    #[test]
    fn pinching_matches_projector_sandwich(seed in any::<u64>()) {
        let split = ModeBipartition::new(1, 2).unwrap();
        let a = random::ginibre(8, 8, &mut ChaCha8Rng::seed_from_u64(seed));
        let pa = fermion::parity_projectors(split, fermion::ParityScope::A);
        let pb = fermion::parity_projectors(split, fermion::ParityScope::B);
        let mut sandwich = ComplexMatrix::zeros(8, 8);
        for p in [&pa.even, &pa.odd] {
            for q in [&pb.even, &pb.odd] {
                let proj = p * q;
                sandwich += &proj * &a * &proj;
            }
        }
        prop_assert!(linalg::max_abs_diff(&sandwich, &fermion::block_diagonal_part(&a, split).unwrap()) <= 1e-14);
    }

    #[test]
    fn covariance_round_trip(seed in any::<u64>()) {
        // random pure-state covariance rotated by an orthogonal matrix, then shrunk
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random::random_hermitian(4, &mut rng);
        let a = fermisep::linalg::RealMatrix::from_fn(4, 4, |i, j| h[(i, j)].im);
        let q = (a.clone() * 0.5).exp();
        let mut gamma0 = fermisep::linalg::RealMatrix::zeros(4, 4);
        let shrink = rng.random_range(0.0..1.0);
        for k in 0..2 {
            gamma0[(2 * k, 2 * k + 1)] = -shrink;
            gamma0[(2 * k + 1, 2 * k)] = shrink;
        }
        let gamma = &q * gamma0 * q.transpose();
        let cov = fermion::MajoranaCovariance::new(gamma.clone(), 1e-9).unwrap();
        let rho = fermion::gaussian_state_from_covariance(&cov, 1e-9).unwrap();
        linalg::validate_density(&rho, 1e-9).unwrap();
        let back = fermion::covariance_matrix(&rho, 1e-9).unwrap();
        prop_assert!((back.gamma() - &gamma).abs().max() <= 1e-9, "{} vs {}", back.gamma(), gamma);
        prop_assert!(fermion::parity_commutator_norm(&rho) <= 1e-12);
    }
}

#[test]
fn block_diagonal_part_of_an_x_state_is_its_diagonal() {
    let rho = fermisep::xstate::XStateParams::even(0.4, 0.3, 0.1, c(0.1, 0.02), c(0.05, -0.03)).to_matrix();
    let pinched = fermion::block_diagonal_part(&rho, ModeBipartition::one_by_one()).unwrap();
    let diag = ComplexMatrix::from_fn(4, 4, |i, j| if i == j { rho[(i, i)] } else { ZERO });
    assert_eq!(pinched, diag);
}
