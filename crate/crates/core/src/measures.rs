//! Entanglement of formation of two-mode states.
//!
//! `E_F` follows from the Wootters concurrence. `E_F^π` restricts the
//! decompositions to pure states of definite parity; such states cannot mix
//! the two global-parity blocks, so the minimization splits into one
//! problem per block:
//!
//! ```text
//! E_F^π(ρ) = p_e E_F(ρ_e) + p_o E_F(ρ_o),   C(ρ_e) = 2|r|/p_e,  C(ρ_o) = 2|s|/p_o.
//! ```
//!
//! [`eof_oracle`] minimizes the ensemble average directly and serves as an
//! independent check of both closed forms.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fermion;
use crate::linalg::{self, ComplexMatrix, C64, I, ZERO};
use crate::random;
use crate::xstate::XStateParams;

/// Binary entropy in bits, `h(0) = h(1) = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    let term = |q: f64| if q <= 0.0 { 0.0 } else { -q * q.log2() };
    term(p) + term(1.0 - p)
}

/// `h((1 + √(1 - C²))/2)`.
pub fn eof_from_concurrence(concurrence: f64) -> f64 {
    let cc = concurrence.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - cc * cc).max(0.0).sqrt()))
}

fn check_two_qubit(rho: &ComplexMatrix, tol: f64) -> Result<()> {
    if rho.nrows() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.nrows() });
    }
    linalg::validate_density(rho, tol)
}

/// Wootters concurrence `max(0, l1 - l2 - l3 - l4)`, with `l_i` the
/// descending square roots of the eigenvalues of `√ρ ρ̃ √ρ` and
/// `ρ̃ = (σy ⊗ σy) ρ* (σy ⊗ σy)`.
pub fn concurrence(rho: &ComplexMatrix, tol: f64) -> Result<f64> {
    check_two_qubit(rho, tol)?;
    let sy = ComplexMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO]);
    let yy = linalg::kron(&sy, &sy);
    let flipped = &yy * rho.conjugate() * &yy;
    let sqrt_rho = linalg::herm_eig(rho, f64::INFINITY)?.map_spectrum(|v| v.max(0.0).sqrt());
    let product = &sqrt_rho * flipped * &sqrt_rho;
    let mut roots: Vec<f64> =
        linalg::eigenvalues(&linalg::hermitian_part(&product), f64::INFINITY)?.into_iter().map(|v| v.max(0.0).sqrt()).collect();
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).max(0.0))
}

/// Entanglement of formation in bits.
pub fn eof(rho: &ComplexMatrix, tol: f64) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence(rho, tol)?))
}

fn check_physical_x(rho: &ComplexMatrix, tol: f64) -> Result<XStateParams> {
    check_two_qubit(rho, tol)?;
    let deviation = fermion::parity_commutator_norm(rho);
    if deviation > tol {
        return Err(Error::NotPhysical { deviation });
    }
    XStateParams::from_matrix(rho)
}

/// Concurrences `(2|r|/p_e, 2|s|/p_o)` of the renormalized parity blocks,
/// zero for an empty block.
pub fn block_concurrences(params: &XStateParams) -> (f64, f64) {
    let ratio = |num: f64, den: f64| if den > 0.0 { (2.0 * num / den).min(1.0) } else { 0.0 };
    (ratio(params.r.norm(), params.even_weight()), ratio(params.s.norm(), params.odd_weight()))
}

/// Parity-constrained entanglement of formation of a physical `1x1` state.
pub fn eof_parity(rho: &ComplexMatrix, tol: f64) -> Result<f64> {
    let params = check_physical_x(rho, tol)?;
    Ok(eof_parity_params(&params))
}

/// [`eof_parity`] from X-state parameters.
pub fn eof_parity_params(params: &XStateParams) -> f64 {
    let (ce, co) = block_concurrences(params);
    params.even_weight().max(0.0) * eof_from_concurrence(ce) + params.odd_weight().max(0.0) * eof_from_concurrence(co)
}

/// [`eof`] of an even state from the X-state concurrence formula.
pub fn eof_x_params(params: &XStateParams) -> f64 {
    eof_from_concurrence(params.concurrence_closed_form())
}

/// Settings of the ensemble minimizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub parity_constrained: bool,
    pub restarts: usize,
    /// Number of pure states in the decomposition, at least 4.
    pub ensemble_size: usize,
    pub seed: u64,
    /// Stop a restart once a sweep improves the objective by less.
    pub sweep_tolerance: f64,
    pub max_sweeps: usize,
}

impl OracleConfig {
    pub fn new(parity_constrained: bool, seed: u64) -> Self {
        Self { parity_constrained, restarts: 8, ensemble_size: 8, seed, sweep_tolerance: 1e-10, max_sweeps: 200 }
    }
}

/// Entropy of entanglement of a (possibly unnormalized) two-qubit vector
/// `ψ = (ψ00, ψ01, ψ10, ψ11)`, weighted by its squared norm: the marginal
/// `M M†` of `M = [[ψ00, ψ01], [ψ10, ψ11]]` has eigenvalues fixed by its
/// trace and `|det M|²`.
fn weighted_entropy(v: &[C64; 4]) -> f64 {
    let weight: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    if weight <= 0.0 {
        return 0.0;
    }
    let det = (v[0] * v[3] - v[1] * v[2]).norm() / weight;
    let disc = (1.0 - 4.0 * det * det).max(0.0).sqrt();
    weight * binary_entropy(0.5 * (1.0 + disc))
}

/// Rows of `U · diag(√λ) · Vᵀ`: an ensemble realizing `ρ` for any `U`
/// with orthonormal columns.
struct Ensemble {
    members: Vec<[C64; 4]>,
    /// Members that may be mixed with each other.
    groups: Vec<Vec<usize>>,
}

impl Ensemble {
    fn objective(&self) -> f64 {
        self.members.iter().map(weighted_entropy).sum()
    }

    /// Mixes members `i` and `j` by the rotation `(cos θ, e^{iφ} sin θ)`.
    fn rotated(&self, i: usize, j: usize, theta: f64, phi: f64) -> ([C64; 4], [C64; 4]) {
        let (ct, st) = (theta.cos(), theta.sin());
        let e = C64::from_polar(1.0, phi);
        let (a, b) = (&self.members[i], &self.members[j]);
        let mut new_a = [ZERO; 4];
        let mut new_b = [ZERO; 4];
        for k in 0..4 {
            new_a[k] = a[k] * ct + b[k] * e * st;
            new_b[k] = b[k] * ct - a[k] * e.conj() * st;
        }
        (new_a, new_b)
    }

    fn pair_cost(&self, i: usize, j: usize, theta: f64, phi: f64) -> f64 {
        let (a, b) = self.rotated(i, j, theta, phi);
        weighted_entropy(&a) + weighted_entropy(&b)
    }

    /// One sweep over all admissible pairs. Returns the objective decrease.
    fn sweep(&mut self) -> f64 {
        let before = self.objective();
        let pairs: Vec<(usize, usize)> = self
            .groups
            .iter()
            .flat_map(|g| g.iter().enumerate().flat_map(move |(k, &i)| g[k + 1..].iter().map(move |&j| (i, j))))
            .collect();
        const PHASES: usize = 6;
        const GRID: usize = 8;
        for (i, j) in pairs {
            let current = self.pair_cost(i, j, 0.0, 0.0);
            let mut best = (current, 0.0, 0.0);
            for p in 0..PHASES {
                let phi = std::f64::consts::TAU * p as f64 / PHASES as f64;
                // coarse grid over θ ∈ [-π/2, π/2), then golden-section
                let step = std::f64::consts::PI / GRID as f64;
                let mut grid_best = (f64::INFINITY, 0.0);
                for g in 0..GRID {
                    let theta = -std::f64::consts::FRAC_PI_2 + g as f64 * step;
                    let v = self.pair_cost(i, j, theta, phi);
                    if v < grid_best.0 {
                        grid_best = (v, theta);
                    }
                }
                let (theta, value) = golden_section(|t| self.pair_cost(i, j, t, phi), grid_best.1 - step, grid_best.1 + step, 28);
                if value < best.0 {
                    best = (value, theta, phi);
                }
            }
            if best.0 < current {
                let (a, b) = self.rotated(i, j, best.1, best.2);
                self.members[i] = a;
                self.members[j] = b;
            }
        }
        before - self.objective()
    }
}

fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iterations: usize) -> (f64, f64) {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - ratio * (b - a);
    let mut x2 = a + ratio * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iterations {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Weighted eigenvectors `√λ_k v_k` of `rho` restricted to `support`.
fn weighted_eigenvectors(rho: &ComplexMatrix, support: &[usize]) -> Result<Vec<DVector<C64>>> {
    let n = support.len();
    let block = ComplexMatrix::from_fn(n, n, |a, b| rho[(support[a], support[b])]);
    let eig = linalg::herm_eig(&block, f64::INFINITY)?;
    let mut out = Vec::new();
    for k in 0..n {
        let lambda = eig.eigenvalues[k];
        if lambda <= 1e-15 {
            continue;
        }
        let mut v = DVector::zeros(4);
        for (a, &i) in support.iter().enumerate() {
            v[i] = eig.eigenvectors[(a, k)] * lambda.sqrt();
        }
        out.push(v);
    }
    Ok(out)
}

/// Random ensemble of `size` members from weighted eigenvectors: the rows of
/// `U (√λ v)ᵀ` for the first `k` columns `U` of a Haar unitary.
fn random_members(vectors: &[DVector<C64>], size: usize, rng: &mut ChaCha8Rng) -> Vec<[C64; 4]> {
    let u = random::haar_unitary(size, rng);
    (0..size)
        .map(|i| {
            let mut member = [ZERO; 4];
            for (k, v) in vectors.iter().enumerate() {
                for (slot, entry) in member.iter_mut().zip(v.iter()) {
                    *slot += u[(i, k)] * entry;
                }
            }
            member
        })
        .collect()
}

/// Numerical upper bound on `E_F` (or on `E_F^π` when
/// `parity_constrained`), by coordinate descent over pairwise unitary
/// mixings of an ensemble, best over random restarts.
pub fn eof_oracle(rho: &ComplexMatrix, config: &OracleConfig) -> Result<f64> {
    check_two_qubit(rho, linalg::DEFAULT_TOL)?;
    if config.ensemble_size < 4 {
        return Err(Error::InvalidParameter(format!("ensemble size {} is below 4", config.ensemble_size)));
    }
    let sectors: Vec<Vec<usize>> = if config.parity_constrained {
        let deviation = fermion::parity_commutator_norm(rho);
        if deviation > linalg::DEFAULT_TOL {
            return Err(Error::NotPhysical { deviation });
        }
        vec![vec![0, 3], vec![1, 2]]
    } else {
        vec![vec![0, 1, 2, 3]]
    };
    let per_sector = config.ensemble_size / sectors.len();
    let vectors: Vec<Vec<DVector<C64>>> = sectors.iter().map(|s| weighted_eigenvectors(rho, s)).collect::<Result<_>>()?;
    let mut seeder = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<u64> = (0..config.restarts.max(1)).map(|_| seeder.random()).collect();
    let run = |restart: usize, seed: u64| -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut members = Vec::new();
        let mut groups = Vec::new();
        for vs in &vectors {
            let start = members.len();
            if restart == 0 {
                // the eigen-decomposition itself, padded with zeros
                for v in vs {
                    members.push([v[0], v[1], v[2], v[3]]);
                }
                members.resize(start + per_sector, [ZERO; 4]);
            } else {
                members.extend(random_members(vs, per_sector, &mut rng));
            }
            groups.push((start..members.len()).collect());
        }
        let mut ensemble = Ensemble { members, groups };
        for _ in 0..config.max_sweeps {
            if ensemble.sweep() < config.sweep_tolerance {
                break;
            }
        }
        ensemble.objective()
    };
    let values: Vec<f64> = seeds.par_iter().enumerate().map(|(k, &s)| run(k, s)).collect();
    Ok(values.into_iter().fold(f64::INFINITY, f64::min))
}

/// Convenience wrapper returning `E_F^π` from a state via the oracle with
/// default settings.
pub fn eof_parity_oracle(rho: &ComplexMatrix, seed: u64) -> Result<f64> {
    eof_oracle(rho, &OracleConfig::new(true, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, DEFAULT_TOL};

    fn bell_even() -> ComplexMatrix {
        XStateParams::even(0.5, 0.5, 0.5, c(0.5, 0.0), ZERO).to_matrix()
    }

    fn werner(p: f64) -> ComplexMatrix {
        bell_even() * c(p, 0.0) + ComplexMatrix::identity(4, 4) * c((1.0 - p) / 4.0, 0.0)
    }

    #[test]
    fn entropy_endpoints() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
        assert_eq!(eof_from_concurrence(0.0), 0.0);
        assert!((eof_from_concurrence(1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn concurrence_examples() {
        assert!((concurrence(&bell_even(), DEFAULT_TOL).unwrap() - 1.0).abs() < 1e-10);
        let mixed = ComplexMatrix::identity(4, 4) / c(4.0, 0.0);
        assert!(concurrence(&mixed, DEFAULT_TOL).unwrap().abs() < 1e-10);
        for p in [0.1f64, 1.0 / 3.0, 0.5, 0.8, 1.0] {
            let expected = ((3.0 * p - 1.0) / 2.0).max(0.0);
            assert!((concurrence(&werner(p), DEFAULT_TOL).unwrap() - expected).abs() < 1e-7, "p={p}");
        }
    }

    #[test]
    fn x_state_closed_form_matches_wootters() {
        let params = XStateParams::even(0.45, 0.3, 0.1, c(0.12, -0.05), c(0.02, 0.01));
        let rho = params.to_matrix();
        assert!((concurrence(&rho, DEFAULT_TOL).unwrap() - params.concurrence_closed_form()).abs() < 1e-8);
    }

    #[test]
    fn parity_eof_examples() {
        let diagonal = XStateParams::diagonal(0.3, 0.4, 0.1).to_matrix();
        assert_eq!(eof_parity(&diagonal, DEFAULT_TOL).unwrap(), 0.0);
        assert!((eof_parity(&bell_even(), DEFAULT_TOL).unwrap() - 1.0).abs() < 1e-12);
        let mut broken = diagonal.clone();
        broken[(0, 1)] = c(0.01, 0.0);
        broken[(1, 0)] = c(0.01, 0.0);
        assert!(matches!(eof_parity(&broken, DEFAULT_TOL), Err(Error::NotPhysical { .. })));
    }

    #[test]
    fn oracle_examples() {
        let config = OracleConfig { restarts: 4, ..OracleConfig::new(false, 3) };
        assert!((eof_oracle(&bell_even(), &config).unwrap() - 1.0).abs() < 1e-4);
        let mixed = ComplexMatrix::identity(4, 4) / c(4.0, 0.0);
        assert!(eof_oracle(&mixed, &config).unwrap() < 1e-4);
    }

    #[test]
    fn oracle_rejects_small_ensembles() {
        let config = OracleConfig { ensemble_size: 3, ..OracleConfig::new(false, 0) };
        assert!(eof_oracle(&bell_even(), &config).is_err());
    }
}
