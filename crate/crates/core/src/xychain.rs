//! Thermal states of the fermionic XY chain
//!
//! ```text
//! H = ½ Σ_n (a_n† a_{n+1} + h.c.) - λ Σ_n a_n† a_n + γ Σ_n (a_n† a_{n+1}† + h.c.)
//! ```
//!
//! With `a_n = N^{-1/2} Σ_k e^{iφn} a_k` and `ε(φ) = cos φ - λ`, the
//! Hamiltonian is `Σ_k [ε a_k† a_k + (iγ sin φ a_k† a_{-k}† + h.c.)]`, which
//! the Bogoliubov modes `b_k = cos θ a_k + i sin θ a_{-k}†` diagonalize with
//! energies `Λ(φ) = √(ε² + 4γ² sin² φ)`, `cos 2θ = ε/Λ`,
//! `sin 2θ = 2γ sin φ/Λ`. In the thermal state, with
//! `g(φ) = tanh(βΛ/2)/Λ`,
//!
//! ```text
//! ⟨a_k† a_k⟩    = ½ - ½ ε g
//! ⟨a_k a_{-k}⟩  = iγ sin φ g
//! ```
//!
//! and the adjacent-site correlators are Brillouin-zone averages
//!
//! ```text
//! ⟨a_n† a_n⟩       = avg[½ - ½ ε g]
//! ⟨a_n† a_{n+1}⟩   = avg[-½ cos φ ε g]
//! ⟨a_n a_{n+1}⟩    = avg[γ sin² φ g]
//! ```
//!
//! all real. At gapless momenta `g` takes its limit `β/2`.

use rayon::prelude::*;

use crate::classify::{self, Tolerances};
use crate::error::{Error, Result};
use crate::fermion;
use crate::linalg::{c, ComplexMatrix, C64, ZERO};
use crate::measures;
use crate::split::ModeBipartition;
use crate::xstate::XStateParams;

/// Default number of quadrature nodes.
pub const DEFAULT_QUAD_POINTS: usize = 4096;
/// Smallest accepted number of quadrature nodes.
pub const MIN_QUAD_POINTS: usize = 64;
/// Largest shift tolerated when the number of nodes is doubled.
pub const CONVERGENCE_TOL: f64 = 1e-9;
const MAX_QUAD_POINTS: usize = 1 << 22;

/// Transverse field `λ`, anisotropy `γ` and inverse temperature `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XYParams {
    pub lambda: f64,
    pub gamma: f64,
    pub beta: f64,
}

impl XYParams {
    pub fn new(lambda: f64, gamma: f64, beta: f64) -> Result<Self> {
        if !(lambda.is_finite() && gamma.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite chain parameters ({lambda}, {gamma}, {beta})")));
        }
        if beta < 0.0 {
            return Err(Error::InvalidParameter(format!("inverse temperature {beta} is negative")));
        }
        Ok(Self { lambda, gamma, beta })
    }
}

/// `Λ(φ) = √((cos φ - λ)² + 4γ² sin² φ)`.
pub fn dispersion(phi: f64, p: &XYParams) -> f64 {
    let eps = phi.cos() - p.lambda;
    let pairing = 2.0 * p.gamma * phi.sin();
    eps.hypot(pairing)
}

/// Bogoliubov angle `θ(φ)` with `cos 2θ = ε/Λ` and `sin 2θ = 2γ sin φ/Λ`.
/// Undefined where the spectrum is gapless.
pub fn bogoliubov_angle(phi: f64, p: &XYParams) -> Result<f64> {
    let eps = phi.cos() - p.lambda;
    let pairing = 2.0 * p.gamma * phi.sin();
    if eps == 0.0 && pairing == 0.0 {
        return Err(Error::InvalidParameter(format!("gapless momentum φ = {phi}: Bogoliubov angle undefined")));
    }
    Ok(0.5 * pairing.atan2(eps))
}

/// `tanh(βΛ/2)/Λ`, continued to `β/2` at `Λ = 0`.
pub fn thermal_factor(lambda_k: f64, beta: f64) -> f64 {
    let x = 0.5 * beta * lambda_k;
    if x < 1e-6 {
        // tanh(x)/x = 1 - x²/3 + O(x⁴)
        0.5 * beta * (1.0 - x * x / 3.0)
    } else {
        (x.tanh()) / lambda_k
    }
}

/// Thermal two-point functions of neighbouring sites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjacentCorrelators {
    /// `⟨a_n† a_n⟩`.
    pub n_occ: f64,
    /// `⟨a_n† a_{n+1}⟩`.
    pub hop: C64,
    /// `⟨a_n a_{n+1}⟩`.
    pub pair: C64,
}

impl AdjacentCorrelators {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.n_occ - other.n_occ).abs().max((self.hop - other.hop).norm()).max((self.pair - other.pair).norm())
    }
}

fn integrands(phi: f64, p: &XYParams) -> [f64; 3] {
    let eps = phi.cos() - p.lambda;
    let g = thermal_factor(dispersion(phi, p), p.beta);
    let s = phi.sin();
    [0.5 - 0.5 * eps * g, -0.5 * phi.cos() * eps * g, p.gamma * s * s * g]
}

fn average_over(phis: impl Iterator<Item = f64>, count: usize, p: &XYParams) -> AdjacentCorrelators {
    let mut sums = [0.0; 3];
    for phi in phis {
        let v = integrands(phi, p);
        for k in 0..3 {
            sums[k] += v[k];
        }
    }
    let n = count as f64;
    AdjacentCorrelators { n_occ: sums[0] / n, hop: c(sums[1] / n, 0.0), pair: c(sums[2] / n, 0.0) }
}

fn trapezoid(p: &XYParams, points: usize) -> AdjacentCorrelators {
    let h = std::f64::consts::TAU / points as f64;
    average_over((0..points).map(|j| -std::f64::consts::PI + h * j as f64), points, p)
}

/// Correlators with their quadrature diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub correlators: AdjacentCorrelators,
    /// Nodes used for `correlators`.
    pub points: usize,
    /// Largest change against the rule with twice as many nodes.
    pub shift: f64,
    pub converged: bool,
}

/// Infinite-chain correlators by the periodic trapezoidal rule on
/// `quad_points` nodes. The result is compared against `2·quad_points`
/// nodes and flagged unconverged if any component moves by more than
/// [`CONVERGENCE_TOL`].
pub fn correlators_infinite(p: &XYParams, quad_points: usize) -> Result<Quadrature> {
    if quad_points < MIN_QUAD_POINTS {
        return Err(Error::InvalidParameter(format!("{quad_points} quadrature points, need at least {MIN_QUAD_POINTS}")));
    }
    let coarse = trapezoid(p, quad_points);
    let fine = trapezoid(p, 2 * quad_points);
    let shift = coarse.max_abs_diff(&fine);
    Ok(Quadrature { correlators: coarse, points: quad_points, shift, converged: shift <= CONVERGENCE_TOL })
}

/// Doubles the number of nodes from `start` until converged, up to `2^22`.
pub fn correlators_adaptive(p: &XYParams, start: usize) -> Result<Quadrature> {
    let mut points = start.max(MIN_QUAD_POINTS);
    loop {
        let q = correlators_infinite(p, points)?;
        if q.converged || points >= MAX_QUAD_POINTS {
            return Ok(q);
        }
        points *= 2;
    }
}

/// Correlators of a ring of `n` sites, as discrete sums over
/// `φ = 2πk/n` with `k = -(n-1)/2, …, (n-1)/2`. For odd `n` these are the
/// momenta of periodic boundary conditions, for even `n` the half-integer
/// momenta of antiperiodic ones.
pub fn correlators_finite(n: usize, p: &XYParams) -> Result<AdjacentCorrelators> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("a ring needs at least 2 sites, got {n}")));
    }
    let shift = -(n as f64 - 1.0) / 2.0;
    let step = std::f64::consts::TAU / n as f64;
    Ok(average_over((0..n).map(|j| (shift + j as f64) * step), n, p))
}

/// Even two-mode state `(x = y = n, s = h, r = -P*, z = n² + |P|² - |h|²)`
/// given by Wick's theorem from the correlators.
pub fn x_state_from_correlators(corr: &AdjacentCorrelators) -> XStateParams {
    let n = corr.n_occ;
    let z = n * n + corr.pair.norm_sqr() - corr.hop.norm_sqr();
    XStateParams::even(n, n, z, -corr.pair.conj(), corr.hop)
}

/// Gaussian state of two neighbouring modes, assembled from the Majorana
/// covariance of `G = ⟨a†a⟩` and `F = ⟨aa⟩`.
pub fn rdm_from_correlators(corr: &AdjacentCorrelators, tol: f64) -> Result<ComplexMatrix> {
    let g = ComplexMatrix::from_row_slice(2, 2, &[c(corr.n_occ, 0.0), corr.hop, corr.hop.conj(), c(corr.n_occ, 0.0)]);
    let f = ComplexMatrix::from_row_slice(2, 2, &[ZERO, corr.pair, -corr.pair, ZERO]);
    let cov = fermion::covariance_from_correlations(&g, &f, tol)?;
    fermion::gaussian_state_from_covariance(&cov, tol)
}

/// Reduced state of two adjacent sites of the infinite chain.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacentRdm {
    pub rho: ComplexMatrix,
    pub params: XStateParams,
    pub quadrature: Quadrature,
}

/// [`rdm_from_correlators`] on converged infinite-chain correlators.
pub fn rdm_two_adjacent(p: &XYParams, quad_points: usize) -> Result<AdjacentRdm> {
    let quadrature = correlators_adaptive(p, quad_points)?;
    let rho = rdm_from_correlators(&quadrature.correlators, 1e-9)?;
    let params = XStateParams::from_matrix(&rho)?;
    Ok(AdjacentRdm { rho, params, quadrature })
}

/// One `(γ, β)` point of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub lambda: f64,
    pub gamma: f64,
    pub beta: f64,
    pub x: f64,
    pub z: f64,
    pub s: C64,
    pub r: C64,
    pub ppt_witness: f64,
    pub s2prime: bool,
    pub s2: bool,
    pub ef: f64,
    pub ef_pi: f64,
    pub converged: bool,
}

impl ScanRow {
    pub const CSV_HEADER: [&'static str; 15] =
        ["lambda", "gamma", "beta", "x", "z", "re_s", "im_s", "re_r", "im_r", "ppt_witness", "s2prime", "s2", "ef", "ef_pi", "status"];

    pub fn csv_record(&self) -> Vec<String> {
        let flag = |b: bool| if b { "1".to_string() } else { "0".to_string() };
        let mut out: Vec<String> = [self.lambda, self.gamma, self.beta, self.x, self.z, self.s.re, self.s.im, self.r.re, self.r.im, self.ppt_witness]
            .iter()
            .map(|v| format_sig(*v))
            .collect();
        out.push(flag(self.s2prime));
        out.push(flag(self.s2));
        out.push(format_sig(self.ef));
        out.push(format_sig(self.ef_pi));
        out.push(if self.converged { "ok" } else { "unconverged" }.to_string());
        out
    }
}

/// Formats with 12 significant digits, `%.12g` style.
pub fn format_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let trim = |s: String| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        trim(format!("{v:.decimals$}"))
    } else {
        let formatted = format!("{v:.11e}");
        let (mantissa, exp) = formatted.split_once('e').unwrap_or((&formatted, "0"));
        let exp: i32 = exp.parse().unwrap_or(0);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim(mantissa.to_string()), sign, exp.abs())
    }
}

/// Evaluates one scan point.
pub fn scan_point(p: &XYParams, quad_points: usize, tols: Tolerances) -> Result<ScanRow> {
    let rdm = rdm_two_adjacent(p, quad_points)?;
    let split = ModeBipartition::one_by_one();
    let s2prime = classify::in_s2prime(&rdm.rho, split, tols)?;
    let s2 = classify::in_s2(&rdm.rho, split, tols)?;
    let params = rdm.params;
    Ok(ScanRow {
        lambda: p.lambda,
        gamma: p.gamma,
        beta: p.beta,
        x: params.x,
        z: params.z,
        s: params.s,
        r: params.r,
        ppt_witness: s2prime.witness,
        s2prime: s2prime.is_member(),
        s2: s2.is_member(),
        ef: measures::eof_x_params(&params),
        ef_pi: measures::eof_parity_params(&params),
        converged: rdm.quadrature.converged,
    })
}

/// `β` values where the partial-transpose witness changes sign along a
/// line of fixed `γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Boundary {
    pub gamma: f64,
    /// Sign changes of the witness, located by bisection, ascending in `β`.
    pub crossings: Vec<f64>,
}

impl Boundary {
    /// More than one crossing: separability is not monotone in `β`.
    pub fn non_monotone(&self) -> bool {
        self.crossings.len() > 1
    }
}

/// A scan over a `(γ, β)` grid at fixed `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable {
    /// Grid order: `γ` outer, `β` inner.
    pub rows: Vec<ScanRow>,
    pub boundaries: Vec<Boundary>,
}

/// Partial-transpose witness of the adjacent-site state.
pub fn witness_at(p: &XYParams, quad_points: usize) -> Result<f64> {
    let rdm = rdm_two_adjacent(p, quad_points)?;
    classify::ppt_witness(&rdm.rho, ModeBipartition::one_by_one())
}

fn bisect_crossing(lambda: f64, gamma: f64, mut lo: f64, mut hi: f64, quad_points: usize) -> Result<f64> {
    let f = |beta: f64| witness_at(&XYParams::new(lambda, gamma, beta)?, quad_points);
    let mut f_lo = f(lo)?;
    for _ in 0..60 {
        if hi - lo <= 1e-10 * hi.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if (f_mid >= 0.0) == (f_lo >= 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Scans the grid, in parallel over points, and locates the `S2'π`
/// boundary in `β` for every `γ`.
pub fn scan_regions(lambda: f64, gammas: &[f64], betas: &[f64], quad_points: usize, tols: Tolerances) -> Result<ScanTable> {
    let points: Vec<XYParams> =
        gammas.iter().flat_map(|&g| betas.iter().map(move |&b| (g, b))).map(|(g, b)| XYParams::new(lambda, g, b)).collect::<Result<_>>()?;
    let rows: Vec<ScanRow> = points.par_iter().map(|p| scan_point(p, quad_points, tols)).collect::<Result<_>>()?;
    let boundaries: Vec<Boundary> = gammas
        .par_iter()
        .enumerate()
        .map(|(gi, &gamma)| {
            let line = &rows[gi * betas.len()..(gi + 1) * betas.len()];
            let mut crossings = Vec::new();
            for pair in line.windows(2) {
                if (pair[0].ppt_witness >= 0.0) != (pair[1].ppt_witness >= 0.0) {
                    crossings.push(bisect_crossing(lambda, gamma, pair[0].beta, pair[1].beta, quad_points)?);
                }
            }
            Ok(Boundary { gamma, crossings })
        })
        .collect::<Result<_>>()?;
    Ok(ScanTable { rows, boundaries })
}

/// `(β, E_F, E_F^π)` along a temperature line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EofPoint {
    pub beta: f64,
    pub ef: f64,
    pub ef_pi: f64,
}

impl EofPoint {
    pub const CSV_HEADER: [&'static str; 3] = ["beta", "ef", "ef_pi"];

    pub fn csv_record(&self) -> Vec<String> {
        vec![format_sig(self.beta), format_sig(self.ef), format_sig(self.ef_pi)]
    }
}

pub fn eof_curve(lambda: f64, gamma: f64, betas: &[f64], quad_points: usize) -> Result<Vec<EofPoint>> {
    betas
        .par_iter()
        .map(|&beta| {
            let rdm = rdm_two_adjacent(&XYParams::new(lambda, gamma, beta)?, quad_points)?;
            Ok(EofPoint { beta, ef: measures::eof_x_params(&rdm.params), ef_pi: measures::eof_parity_params(&rdm.params) })
        })
        .collect()
}

/// Evenly spaced grid of `count` values from `start` to `stop` inclusive.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..count).map(|i| start + (stop - start) * i as f64 / (count - 1) as f64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs_diff, RealMatrix};

    fn params(lambda: f64, gamma: f64, beta: f64) -> XYParams {
        XYParams::new(lambda, gamma, beta).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(XYParams::new(0.5, 0.5, -1.0).is_err());
        assert!(XYParams::new(f64::NAN, 0.5, 1.0).is_err());
        assert!(correlators_infinite(&params(0.5, 0.5, 1.0), 32).is_err());
    }

    #[test]
    fn dispersion_examples() {
        for gamma in [0.0, 0.3, 1.0] {
            assert_eq!(dispersion(0.0, &params(1.0, gamma, 1.0)), 0.0);
        }
        for phi in [-2.0, 0.1, 1.3] {
            assert!((dispersion(phi, &params(0.0, 0.5, 1.0)) - 1.0).abs() < 1e-15);
        }
        let v = dispersion(std::f64::consts::FRAC_PI_2, &params(0.5, 0.3, 1.0));
        assert!((v - 0.61f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bogoliubov_angle_examples() {
        let theta = bogoliubov_angle(0.3, &params(0.2, 1e-12, 1.0)).unwrap();
        assert!(theta.abs() < 1e-10);
        let lambda = 0.4f64;
        let theta = bogoliubov_angle(lambda.acos(), &params(lambda, 0.5, 1.0)).unwrap();
        assert!((theta.abs() - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        assert!(bogoliubov_angle(0.0, &params(1.0, 0.5, 1.0)).is_err());
    }

    #[test]
    fn bogoliubov_modes_diagonalize_the_mode_pair() {
        // With b_k = cos θ a_k + i sin θ a_{-k}†, the 2x2 Bogoliubov–de Gennes
        // matrix [[ε, Δ], [Δ*, -ε]], Δ = 2iγ sin φ, has eigenvector
        // (cos θ, -i sin θ) for the eigenvalue +Λ.
        let p = params(0.3, 0.7, 1.0);
        for phi in [-2.5, -0.4, 0.9, 2.0] {
            let theta = bogoliubov_angle(phi, &p).unwrap();
            let eps = phi.cos() - p.lambda;
            let delta = c(0.0, 2.0 * p.gamma * phi.sin());
            let (u, v) = (c(theta.cos(), 0.0), c(0.0, -theta.sin()));
            let lam = dispersion(phi, &p);
            assert!((u * eps + delta * v - u * lam).norm() < 1e-12);
            assert!((u * delta.conj() - v * eps - v * lam).norm() < 1e-12);
        }
    }

    #[test]
    fn finite_ring_spectrum_matches_dispersion() {
        // Real-space Bogoliubov–de Gennes matrix of an 8-site ring with
        // antiperiodic closing bond.
        let n = 8;
        let p = params(0.35, 0.6, 1.0);
        let mut a = RealMatrix::zeros(n, n);
        let mut b = RealMatrix::zeros(n, n);
        for site in 0..n {
            a[(site, site)] = -p.lambda;
            let next = (site + 1) % n;
            let sign = if next == 0 { -1.0 } else { 1.0 };
            a[(site, next)] += 0.5 * sign;
            a[(next, site)] += 0.5 * sign;
            b[(site, next)] += p.gamma * sign;
            b[(next, site)] -= p.gamma * sign;
        }
        let mut bdg = RealMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                bdg[(i, j)] = a[(i, j)];
                bdg[(i + n, j + n)] = -a[(i, j)];
                bdg[(i, j + n)] = b[(i, j)];
                bdg[(i + n, j)] = -b[(i, j)];
            }
        }
        let mut numeric: Vec<f64> = bdg.symmetric_eigenvalues().iter().copied().filter(|v| *v > 0.0).collect();
        numeric.sort_by(f64::total_cmp);
        let mut expected: Vec<f64> =
            (0..n).map(|j| dispersion((j as f64 - 3.5) * std::f64::consts::TAU / n as f64, &p)).collect();
        expected.sort_by(f64::total_cmp);
        assert_eq!(numeric.len(), n);
        for (x, y) in numeric.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-12, "{numeric:?} vs {expected:?}");
        }
    }

    #[test]
    fn infinite_temperature_is_maximally_mixed() {
        for (lambda, gamma) in [(0.5, 0.4), (1.0, 0.0), (2.0, 1.0)] {
            let q = correlators_infinite(&params(lambda, gamma, 0.0), 64).unwrap();
            assert_eq!(q.correlators, AdjacentCorrelators { n_occ: 0.5, hop: ZERO, pair: ZERO });
            let rdm = rdm_two_adjacent(&params(lambda, gamma, 0.0), 64).unwrap();
            assert!(max_abs_diff(&rdm.rho, &(ComplexMatrix::identity(4, 4) / c(4.0, 0.0))) < 1e-15);
        }
        let three = correlators_finite(3, &params(0.5, 0.4, 0.0)).unwrap();
        assert_eq!(three.n_occ, 0.5);
    }

    #[test]
    fn filled_band_at_low_temperature() {
        // γ = 0 and λ > 1: every single-particle energy cos φ - λ is negative
        let corr = correlators_finite(201, &params(1.5, 0.0, 200.0)).unwrap();
        assert!((corr.n_occ - 1.0).abs() < 1e-12);
        let q = correlators_infinite(&params(1.5, 0.0, 200.0), 4096).unwrap();
        assert!((q.correlators.n_occ - 1.0).abs() < 1e-12);
    }

    #[test]
    fn finite_sums_converge() {
        let p = params(0.5, 0.4, 2.0);
        let a = correlators_finite(201, &p).unwrap();
        let b = correlators_finite(401, &p).unwrap();
        assert!(a.max_abs_diff(&b) <= 1e-5);
        let inf = correlators_infinite(&p, DEFAULT_QUAD_POINTS).unwrap();
        assert!(inf.converged);
        assert!(inf.correlators.max_abs_diff(&correlators_finite(500, &p).unwrap()) <= 1e-6);
    }

    #[test]
    fn rdm_routes_agree() {
        for (lambda, gamma, beta) in [(0.5, 0.4, 2.0), (0.95, 0.1, 7.0), (1.3, 1.0, 0.5)] {
            let corr = correlators_infinite(&params(lambda, gamma, beta), 4096).unwrap().correlators;
            let rho = rdm_from_correlators(&corr, 1e-9).unwrap();
            let wick = x_state_from_correlators(&corr).to_matrix();
            assert!(max_abs_diff(&rho, &wick) < 1e-12);
            let x = XStateParams::from_matrix(&rho).unwrap();
            assert!(x.is_even());
            assert!((x.z - (x.x * x.y - x.s.norm_sqr() + x.r.norm_sqr())).abs() < 1e-12);
        }
    }

    #[test]
    fn format_sig_matches_printf_g() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(0.5), "0.5");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_sig(-2.0), "-2");
        assert_eq!(format_sig(123456.0), "123456");
        assert_eq!(format_sig(1.5e-7), "1.5e-07");
        assert_eq!(format_sig(-0.000123456789012345), "-0.000123456789012");
        assert_eq!(format_sig(2.0e15), "2e+15");
    }

    #[test]
    fn linspace_endpoints() {
        assert_eq!(linspace(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        assert_eq!(linspace(2.0, 5.0, 1), vec![2.0]);
    }
}
