//! Randomized search for states in `P1π` that fail the PPT test.
//!
//! Each trial draws a product `ρ_A ⊗ ρ_B` of even local states and adds
//! `ε R`, where `R` is a random Hermitian matrix living only on the blocks
//! that couple `(α, β)` with `(ᾱ, β̄)`. The perturbation commutes with the
//! total parity and is removed by the local-parity pinching, so every trial
//! state stays in `P1π`. `ε` starts at 1 and is halved until the state is
//! positive, then refined by bisection towards the positivity boundary,
//! where the partial transpose is most likely to turn negative.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify;
use crate::error::Result;
use crate::linalg::{self, c, ComplexMatrix};
use crate::random;
use crate::split::ModeBipartition;

/// Default threshold on the partial-transpose witness.
pub const DEFAULT_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub split: ModeBipartition,
    pub seed: u64,
    pub max_iters: usize,
    /// Success requires a witness `≤ -threshold`.
    pub threshold: f64,
    /// Bisection steps after the halving phase.
    pub bisection_steps: usize,
}

impl SearchConfig {
    pub fn new(split: ModeBipartition, seed: u64, max_iters: usize) -> Self {
        Self { split, seed, max_iters, threshold: DEFAULT_THRESHOLD, bisection_steps: 24 }
    }
}

/// A physical state in `P1π` whose partial transpose has a negative
/// eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub state: ComplexMatrix,
    pub split: ModeBipartition,
    /// Smallest eigenvalue of the partial transpose.
    pub witness: f64,
    /// Factorization residual of the pinched state.
    pub p1_residual: f64,
    pub epsilon: f64,
    /// 1-based trial index.
    pub iteration: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found(Counterexample),
    Exhausted { iterations: usize, best_witness: f64 },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Counterexample> {
        match self {
            SearchOutcome::Found(ce) => Some(ce),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

fn positive(a: &ComplexMatrix) -> bool {
    linalg::is_psd(a, 0.0)
}

/// Largest `ε` (up to the bisection resolution) with `base + ε R ≥ 0`.
fn boundary_epsilon(base: &ComplexMatrix, r: &ComplexMatrix, bisection_steps: usize) -> Option<f64> {
    let at = |eps: f64| base + r * c(eps, 0.0);
    let mut eps = 1.0;
    while !positive(&at(eps)) {
        eps *= 0.5;
        if eps < 1e-12 {
            return None;
        }
    }
    if eps == 1.0 {
        return Some(eps);
    }
    let (mut lo, mut hi) = (eps, 2.0 * eps);
    for _ in 0..bisection_steps {
        let mid = 0.5 * (lo + hi);
        if positive(&at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Runs the search; deterministic for a given configuration.
pub fn search_p1_nppt(config: &SearchConfig) -> Result<SearchOutcome> {
    let split = config.split;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut best_witness = f64::INFINITY;
    for iteration in 1..=config.max_iters {
        let base = random::random_even_product(split, &mut rng);
        let r = random::random_cross_block_hermitian(split, &mut rng)?;
        let Some(epsilon) = boundary_epsilon(&base, &r, config.bisection_steps) else {
            continue;
        };
        let state = linalg::hermitian_part(&(&base + &r * c(epsilon, 0.0)));
        let witness = classify::ppt_witness(&state, split)?;
        best_witness = best_witness.min(witness);
        if witness <= -config.threshold {
            let p1 = classify::is_product_p1(&state, split, 1e-9)?;
            if !p1.is_member() {
                continue;
            }
            return Ok(SearchOutcome::Found(Counterexample {
                state,
                split,
                witness,
                p1_residual: p1.witness,
                epsilon,
                iteration,
                seed: config.seed,
            }));
        }
    }
    Ok(SearchOutcome::Exhausted { iterations: config.max_iters, best_witness })
}
