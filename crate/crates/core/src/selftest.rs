//! Cross-checks of the numerical engines against independent references.
//!
//! Each suite reports its largest residual and the threshold it was held
//! to. Thresholds scale with the base tolerance, so an over-tight tolerance
//! produces failures rather than errors.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::{self, RealMatrix};
use crate::measures::{self, OracleConfig};
use crate::oracles;
use crate::random;
use crate::xstate::XStateParams;
use crate::xychain::{self, XYParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelftestConfig {
    pub tol: f64,
    /// Nodes of the fixed-size quadrature under test.
    pub quad_points: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self { tol: linalg::DEFAULT_TOL, quad_points: xychain::DEFAULT_QUAD_POINTS, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
    pub detail: String,
}

impl SuiteResult {
    fn new(name: &'static str, residual: f64, threshold: f64, detail: String) -> Self {
        Self { name, residual, threshold, passed: residual <= threshold, detail }
    }
}

const CHAIN_POINTS: [(f64, f64, f64); 5] =
    [(0.5, 0.4, 2.0), (0.95, 0.1, 20.0), (1.0, 0.5, 5.0), (1.5, 1.0, 0.7), (1.0, 0.05, 200.0)];

/// Shift of the fixed-size trapezoidal rule when its nodes are doubled.
pub fn quadrature_suite(config: &SelftestConfig) -> Result<SuiteResult> {
    let mut worst: f64 = 0.0;
    let mut unconverged = 0;
    for (lambda, gamma, beta) in CHAIN_POINTS {
        let q = xychain::correlators_infinite(&XYParams::new(lambda, gamma, beta)?, config.quad_points)?;
        worst = worst.max(q.shift);
        if !q.converged {
            unconverged += 1;
        }
    }
    let detail = format!("{} nodes, {unconverged} of {} points unconverged", config.quad_points, CHAIN_POINTS.len());
    let mut result = SuiteResult::new("quadrature", worst, config.tol, detail);
    result.passed &= unconverged == 0;
    Ok(result)
}

/// Infinite-chain correlators against the 500-site ring.
pub fn finite_size_suite(config: &SelftestConfig) -> Result<SuiteResult> {
    let mut worst: f64 = 0.0;
    for lambda in [0.3, 0.9, 1.4] {
        for gamma in [0.2, 0.6, 1.0] {
            for beta in [0.5, 2.0, 5.0] {
                let p = XYParams::new(lambda, gamma, beta)?;
                let inf = xychain::correlators_adaptive(&p, config.quad_points)?;
                let fin = xychain::correlators_finite(500, &p)?;
                worst = worst.max(inf.correlators.max_abs_diff(&fin));
            }
        }
    }
    Ok(SuiteResult::new("finite-size", worst, 1e3 * config.tol, "N = 500 on a 3x3x3 grid".into()))
}

/// Discrete momentum sums against the exact thermal state of a six-site
/// ring.
pub fn brute_force_suite(config: &SelftestConfig) -> Result<SuiteResult> {
    let mut worst: f64 = 0.0;
    for (lambda, gamma, beta) in CHAIN_POINTS {
        let p = XYParams::new(lambda, gamma, beta)?;
        let rdm = oracles::brute_force_rdm(6, &p)?;
        let wick = xychain::x_state_from_correlators(&xychain::correlators_finite(6, &p)?).to_matrix();
        worst = worst.max(linalg::max_abs_diff(&rdm, &wick));
    }
    Ok(SuiteResult::new("brute-force", worst, 10.0 * config.tol, "6-site ring, 64x64 thermal state".into()))
}

/// Closed-form `E_F` and `E_F^π` against the ensemble minimizer, in
/// absolute difference.
pub fn eof_suite(config: &SelftestConfig) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut worst: f64 = 0.0;
    let mut oracle = OracleConfig::new(false, config.seed);
    oracle.restarts = 3;
    let states = 8;
    for k in 0..states {
        let params: XStateParams = random::random_x_state_any(&mut rng);
        let rho = params.to_matrix();
        for constrained in [false, true] {
            oracle.parity_constrained = constrained;
            oracle.seed = config.seed.wrapping_add(k);
            let closed = if constrained { measures::eof_parity_params(&params) } else { measures::eof_x_params(&params) };
            let numeric = measures::eof_oracle(&rho, &oracle)?;
            worst = worst.max((numeric - closed).abs());
        }
    }
    Ok(SuiteResult::new("entanglement-of-formation", worst, 1e6 * config.tol, format!("{states} random X-states, both measures")))
}

/// `Pf(A)² = det A` on random antisymmetric matrices.
pub fn pfaffian_suite(config: &SelftestConfig) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut worst: f64 = 0.0;
    for n in [2, 4, 6, 8, 10] {
        for _ in 0..4 {
            let g = random::random_hermitian(n, &mut rng);
            let a = RealMatrix::from_fn(n, n, |i, j| g[(i, j)].im);
            let pf = linalg::pfaffian(&a, linalg::DEFAULT_TOL)?;
            let det = a.clone().determinant();
            worst = worst.max((pf * pf - det).abs() / det.abs().max(1.0));
        }
    }
    Ok(SuiteResult::new("pfaffian", worst, 10.0 * config.tol, "sizes 2 to 10, relative to |det|".into()))
}

/// Runs every suite.
pub fn run_all(config: &SelftestConfig) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        quadrature_suite(config)?,
        finite_size_suite(config)?,
        brute_force_suite(config)?,
        eof_suite(config)?,
        pfaffian_suite(config)?,
    ])
}
