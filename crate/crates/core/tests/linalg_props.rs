use fermisep::linalg::{self, c, ComplexMatrix, RealMatrix};
use fermisep::random;
use fermisep::split::ModeBipartition;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn antisymmetric(n: usize, seed: u64) -> RealMatrix {
    let g = random::random_hermitian(n, &mut rng(seed));
    RealMatrix::from_fn(n, n, |i, j| g[(i, j)].im)
}

/// Determinant by Gaussian elimination with partial pivoting.
fn det_oracle(a: &RealMatrix) -> f64 {
    let mut m = a.clone();
    let n = m.nrows();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| m[(i, col)].abs().total_cmp(&m[(j, col)].abs())).unwrap();
        if m[(pivot, col)] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap_rows(pivot, col);
            det = -det;
        }
        det *= m[(col, col)];
        for row in col + 1..n {
            let f = m[(row, col)] / m[(col, col)];
            for k in col..n {
                m[(row, k)] -= f * m[(col, k)];
            }
        }
    }
    det
}

/// Roots of the characteristic polynomial of a 4x4 Hermitian matrix, from
/// the coefficients of det(tI - A) obtained by the Faddeev–LeVerrier
/// recursion and Newton iteration started from bisection brackets.
fn char_poly_roots(a: &ComplexMatrix) -> Vec<f64> {
    let n = a.nrows();
    let mut coeffs = vec![1.0];
    let mut m = ComplexMatrix::zeros(n, n);
    let id = ComplexMatrix::identity(n, n);
    for k in 1..=n {
        m = a * &m + &id * c(*coeffs.last().unwrap(), 0.0);
        let ck = -(a * &m).trace().re / k as f64;
        coeffs.push(ck);
    }
    let poly = |t: f64| coeffs.iter().fold(0.0, |acc, &co| acc * t + co);
    let bound = 1.0 + coeffs.iter().skip(1).map(|v| v.abs()).fold(0.0, f64::max);
    // scan for sign changes then bisect
    let steps = 20000;
    let mut roots = Vec::new();
    let mut prev_t = -bound;
    let mut prev = poly(prev_t);
    for s in 1..=steps {
        let t = -bound + 2.0 * bound * s as f64 / steps as f64;
        let v = poly(t);
        if prev == 0.0 {
            roots.push(prev_t);
        } else if prev * v < 0.0 {
            let (mut lo, mut hi) = (prev_t, t);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if poly(lo) * poly(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_t = t;
        prev = v;
    }
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn partial_transpose_is_an_involution(seed in any::<u64>(), ma in 1usize..3, mb in 1usize..3) {
        let split = ModeBipartition::new(ma, mb).unwrap();
        let a = random::ginibre(split.dim(), split.dim(), &mut rng(seed));
        let twice = linalg::partial_transpose(&linalg::partial_transpose(&a, split).unwrap(), split).unwrap();
        prop_assert!(linalg::max_abs_diff(&twice, &a) <= 1e-12);
    }

    #[test]
    fn eigen_residuals_are_small(seed in any::<u64>(), n in 2usize..9) {
        let a = random::random_hermitian(n, &mut rng(seed));
        let eig = linalg::herm_eig(&a, 1e-9).unwrap();
        let norm = a.norm();
        for (j, &lam) in eig.eigenvalues.iter().enumerate() {
            let v = eig.eigenvectors.column(j);
            let residual = (&a * v - v * c(lam, 0.0)).norm();
            prop_assert!(residual <= 1e-10 * norm.max(1.0));
        }
    }

    #[test]
    fn kron_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, d) = (random::ginibre(2, 3, &mut r), random::ginibre(3, 2, &mut r), random::ginibre(2, 2, &mut r));
        let left = linalg::kron(&linalg::kron(&a, &b), &d);
        let right = linalg::kron(&a, &linalg::kron(&b, &d));
        prop_assert!(linalg::max_abs_diff(&left, &right) <= 1e-14);
    }

    #[test]
    fn kron_trace_factorizes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (random::ginibre(2, 2, &mut r), random::ginibre(2, 2, &mut r));
        let lhs = linalg::kron(&a, &b).trace();
        prop_assert!((lhs - a.trace() * b.trace()).norm() <= 1e-12);
    }

    #[test]
    fn pfaffian_squared_is_the_determinant(seed in any::<u64>(), half in 1usize..5) {
        let a = antisymmetric(2 * half, seed);
        let pf = linalg::pfaffian(&a, 1e-9).unwrap();
        let det = det_oracle(&a);
        prop_assert!((pf * pf - det).abs() <= 1e-8 * det.abs().max(1e-12), "pf² = {} det = {}", pf * pf, det);
    }

    #[test]
    fn partial_traces_preserve_the_trace(seed in any::<u64>()) {
        let split = ModeBipartition::new(1, 2).unwrap();
        let rho = random::random_even_state(3, &mut rng(seed));
        let ra = linalg::partial_trace(&rho, split, fermisep::split::Subsystem::A).unwrap();
        prop_assert!((ra.trace() - rho.trace()).norm() <= 1e-12);
    }
}

#[test]
fn six_by_six_pfaffian_matches_determinant() {
    for seed in 0..50 {
        let a = antisymmetric(6, seed);
        let pf = linalg::pfaffian(&a, 1e-9).unwrap();
        assert!((pf * pf - det_oracle(&a)).abs() <= 1e-10 * det_oracle(&a).abs().max(1.0));
    }
}

#[test]
fn eigenvalues_match_characteristic_polynomial() {
    let mut r = rng(5);
    for _ in 0..20 {
        let a = random::random_hermitian(4, &mut r);
        let ev = linalg::eigenvalues(&a, 1e-9).unwrap();
        let roots = char_poly_roots(&a);
        assert_eq!(roots.len(), 4, "{roots:?}");
        for (x, y) in ev.iter().zip(&roots) {
            assert!((x - y).abs() < 1e-8, "{ev:?} vs {roots:?}");
        }
    }
}

#[test]
fn bell_state_partial_transpose_spectrum() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let psi = nalgebra::DVector::from_vec(vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]);
    let rho = random::pure_density(&psi);
    let pt = linalg::partial_transpose(&rho, ModeBipartition::one_by_one()).unwrap();
    assert!((linalg::min_eigenvalue(&pt, 1e-9).unwrap() + 0.5).abs() < 1e-14);
}
