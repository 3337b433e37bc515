//! Fermionic modes in the Fock representation.
//!
//! Modes are mapped to qubits by the Jordan–Wigner transformation
//!
//! ```text
//! c_{2k-1} = σz ⊗ … ⊗ σz ⊗ σx^{(k)},    c_{2k} = σz ⊗ … ⊗ σz ⊗ σy^{(k)},
//! ```
//!
//! so the Majorana operators are Hermitian, square to `𝟙` and satisfy
//! `{c_j, c_k} = 2 δ_jk`. With the Fock basis `|n_1 … n_m⟩` ordered so that
//! `n_1` is the most significant bit, the creation operator is
//! `a_k† = (c_{2k-1} - i c_{2k}) / 2`, which acts as `|1⟩⟨0|` on mode `k`
//! times the string `(-1)^{n_1 + … + n_{k-1}}`.
//!
//! Majorana monomials are kept in a sparse form ([`Monomial`]): every
//! product of Majoranas maps a basis vector to a single basis vector times
//! a phase. Expectation values and Wick expansions use this form directly;
//! dense matrices are only built on request.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{self, c, ComplexMatrix, RealMatrix, C64, I, ONE, ZERO};
use crate::split::{ModeBipartition, MAX_MODES};

/// Product of Majorana operators stored as `|i⟩ ↦ phase[i] |i ⊕ flip⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    modes: usize,
    flip: usize,
    phase: Vec<C64>,
}

impl Monomial {
    pub fn identity(modes: usize) -> Self {
        Self { modes, flip: 0, phase: vec![ONE; 1 << modes] }
    }

    /// The single Majorana operator `c_k`, `k` in `1..=2m`.
    pub fn majorana(k: usize, modes: usize) -> Result<Self> {
        check_modes(modes)?;
        if k == 0 || k > 2 * modes {
            return Err(Error::IndexOutOfRange { index: k, max: 2 * modes });
        }
        let mode = (k - 1) / 2; // 0-based
        let bit = modes - 1 - mode;
        let string_mask = !((1usize << (bit + 1)) - 1) & ((1usize << modes) - 1);
        let phase = (0..1usize << modes)
            .map(|i| {
                let string = if (i & string_mask).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                if k % 2 == 1 {
                    c(string, 0.0)
                } else {
                    // σy|0⟩ = i|1⟩, σy|1⟩ = -i|0⟩
                    let occupied = (i >> bit) & 1 == 1;
                    c(0.0, if occupied { -string } else { string })
                }
            })
            .collect();
        Ok(Self { modes, flip: 1 << bit, phase })
    }

    /// Ordered product `c_{s_1} c_{s_2} …` of 1-based Majorana indices.
    pub fn product(indices: &[usize], modes: usize) -> Result<Self> {
        let mut acc = Self::identity(modes);
        for &k in indices {
            acc = acc.mul(&Self::majorana(k, modes)?);
        }
        Ok(acc)
    }

    /// Operator product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modes, other.modes);
        let phase = (0..self.phase.len()).map(|i| other.phase[i] * self.phase[i ^ other.flip]).collect();
        Self { modes: self.modes, flip: self.flip ^ other.flip, phase }
    }

    /// `tr(ρ · self)`.
    pub fn expectation(&self, rho: &ComplexMatrix) -> C64 {
        (0..self.phase.len()).map(|i| rho[(i, i ^ self.flip)] * self.phase[i]).sum()
    }

    /// Adds `weight · self` to `target`.
    pub fn add_to(&self, target: &mut ComplexMatrix, weight: C64) {
        for (i, p) in self.phase.iter().enumerate() {
            target[(i ^ self.flip, i)] += weight * p;
        }
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.phase.len(), self.phase.len());
        self.add_to(&mut out, ONE);
        out
    }

    /// Whether the monomial flips an odd number of occupations.
    pub fn is_odd(&self) -> bool {
        self.flip.count_ones() % 2 == 1
    }
}

fn check_modes(modes: usize) -> Result<()> {
    if modes == 0 || modes > MAX_MODES {
        return Err(Error::SizeLimit { modes, max: MAX_MODES });
    }
    Ok(())
}

/// Dense Majorana operator `c_k` on `m` modes.
pub fn majorana(k: usize, m: usize) -> Result<ComplexMatrix> {
    Ok(Monomial::majorana(k, m)?.to_dense())
}

/// Dense creation operator `a_k†` on `m` modes.
pub fn creation(k: usize, m: usize) -> Result<ComplexMatrix> {
    check_modes(m)?;
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, max: m });
    }
    let odd = majorana(2 * k - 1, m)?;
    let even = majorana(2 * k, m)?;
    Ok((odd - even * I) * c(0.5, 0.0))
}

/// Dense annihilation operator `a_k`.
pub fn annihilation(k: usize, m: usize) -> Result<ComplexMatrix> {
    Ok(creation(k, m)?.adjoint())
}

fn parity_diag(dim: usize, sign_of: impl Fn(usize) -> bool) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i != j {
            ZERO
        } else if sign_of(i) {
            c(-1.0, 0.0)
        } else {
            ONE
        }
    })
}

/// Total parity `(-1)^{Σ n_k}`, with the phase fixed by `⟨0|Π|0⟩ = +1`.
pub fn parity_operator(m: usize) -> Result<ComplexMatrix> {
    check_modes(m)?;
    Ok(parity_diag(1 << m, |i| i.count_ones() % 2 == 1))
}

/// Which parity operator a projector pair refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityScope {
    Global,
    A,
    B,
}

/// `P_even` and `P_odd` for one of the parity operators of a split.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityProjectors {
    pub even: ComplexMatrix,
    pub odd: ComplexMatrix,
}

/// Projectors onto the ±1 eigenspaces of the global or a local parity;
/// local projectors act as `𝟙` on the other factor.
pub fn parity_projectors(split: ModeBipartition, scope: ParityScope) -> ParityProjectors {
    let dim = split.dim();
    let odd_index = |i: usize| match scope {
        ParityScope::Global => i.count_ones() % 2 == 1,
        ParityScope::A => split.parity_a(i) == 1,
        ParityScope::B => split.parity_b(i) == 1,
    };
    let pick = |want_odd: bool| {
        ComplexMatrix::from_fn(dim, dim, |i, j| if i == j && odd_index(i) == want_odd { ONE } else { ZERO })
    };
    ParityProjectors { even: pick(false), odd: pick(true) }
}

/// Pinching `Σ_{α,β} (P_α^A ⊗ P_β^B) ρ (P_α^A ⊗ P_β^B)` onto the blocks of
/// definite local parities.
pub fn block_diagonal_part(rho: &ComplexMatrix, split: ModeBipartition) -> Result<ComplexMatrix> {
    split.check_dim(rho.nrows())?;
    let n = rho.nrows();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        if split.parity_a(i) == split.parity_a(j) && split.parity_b(i) == split.parity_b(j) {
            rho[(i, j)]
        } else {
            ZERO
        }
    }))
}

/// Restriction to the global parity sectors, `P_e ρ P_e + P_o ρ P_o`.
pub fn parity_preserving_part(rho: &ComplexMatrix) -> ComplexMatrix {
    let n = rho.nrows();
    ComplexMatrix::from_fn(n, n, |i, j| if (i ^ j).count_ones() % 2 == 0 { rho[(i, j)] } else { ZERO })
}

/// `P_e ρ P_e` (`odd = false`) or `P_o ρ P_o` (`odd = true`), unnormalized.
pub fn global_parity_block(rho: &ComplexMatrix, odd: bool) -> ComplexMatrix {
    let n = rho.nrows();
    let want = if odd { 1 } else { 0 };
    ComplexMatrix::from_fn(n, n, |i, j| {
        if (i.count_ones() % 2) as usize == want && (j.count_ones() % 2) as usize == want {
            rho[(i, j)]
        } else {
            ZERO
        }
    })
}

/// Largest entry of `[ρ, Π]`. In the Fock basis `Π` is diagonal, so the
/// commutator is `2ρ_ij` on entries connecting different parities.
pub fn parity_commutator_norm(rho: &ComplexMatrix) -> f64 {
    let n = rho.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if (i ^ j).count_ones() % 2 == 1 {
                worst = worst.max(2.0 * rho[(i, j)].norm());
            }
        }
    }
    worst
}

/// Whether `rho` commutes with the total parity (a physical state).
///
/// Fails with an error when `rho` is not a valid density matrix.
pub fn is_physical(rho: &ComplexMatrix, tol: f64) -> Result<bool> {
    linalg::validate_density(rho, tol)?;
    Ok(parity_commutator_norm(rho) <= tol)
}

fn modes_of(dim: usize) -> Result<usize> {
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::InvalidParameter(format!("dimension {dim} is not 2^m with m >= 1")));
    }
    let m = dim.trailing_zeros() as usize;
    check_modes(m)?;
    Ok(m)
}

/// Real antisymmetric `2m x 2m` covariance matrix
/// `Γ_kl = (i/2) tr(ρ [c_k, c_l])`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaCovariance {
    gamma: RealMatrix,
}

impl MajoranaCovariance {
    /// Validates antisymmetry and `iΓ ≤ 𝟙`.
    pub fn new(gamma: RealMatrix, tol: f64) -> Result<Self> {
        let n = gamma.nrows();
        if gamma.ncols() != n {
            return Err(Error::NotSquare { rows: n, cols: gamma.ncols() });
        }
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        let mut deviation: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                deviation = deviation.max((gamma[(i, j)] + gamma[(j, i)]).abs());
            }
        }
        if deviation > tol {
            return Err(Error::NotAntisymmetric { deviation });
        }
        let cov = Self { gamma };
        let max_eigenvalue = cov.max_abs_eigenvalue()?;
        if max_eigenvalue > 1.0 + tol {
            return Err(Error::InvalidCovariance { max_eigenvalue });
        }
        Ok(cov)
    }

    pub fn gamma(&self) -> &RealMatrix {
        &self.gamma
    }

    pub fn modes(&self) -> usize {
        self.gamma.nrows() / 2
    }

    /// Largest eigenvalue of the Hermitian matrix `iΓ` (its spectrum is
    /// symmetric, so this is also the largest modulus).
    pub fn max_abs_eigenvalue(&self) -> Result<f64> {
        let n = self.gamma.nrows();
        if n == 0 {
            return Ok(0.0);
        }
        let ig = ComplexMatrix::from_fn(n, n, |i, j| c(0.0, self.gamma[(i, j)]));
        let ev = linalg::eigenvalues(&ig, f64::INFINITY)?;
        Ok(ev[n - 1].max(-ev[0]))
    }

    /// `‖Γ² + 𝟙‖_max`; zero for pure Gaussian states.
    pub fn purity_defect(&self) -> f64 {
        let n = self.gamma.nrows();
        let sq = &self.gamma * &self.gamma + RealMatrix::identity(n, n);
        sq.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }
}

/// Covariance matrix of a physical state.
pub fn covariance_matrix(rho: &ComplexMatrix, tol: f64) -> Result<MajoranaCovariance> {
    let m = modes_of(rho.nrows())?;
    let n = 2 * m;
    let singles: Vec<Monomial> = (1..=n).map(|k| Monomial::majorana(k, m)).collect::<Result<_>>()?;
    let mut gamma = RealMatrix::zeros(n, n);
    let mut residue: f64 = 0.0;
    for k in 0..n {
        for l in k + 1..n {
            // For k ≠ l, [c_k, c_l] = 2 c_k c_l.
            let value = I * singles[k].mul(&singles[l]).expectation(rho);
            residue = residue.max(value.im.abs());
            gamma[(k, l)] = value.re;
            gamma[(l, k)] = -value.re;
        }
    }
    if residue > tol {
        return Err(Error::ComplexCovariance { residue });
    }
    MajoranaCovariance::new(gamma, tol)
}

/// Gaussian state with the given covariance, from the Wick expansion
///
/// ```text
/// ρ = 2^{-m} Σ_{S even} i^{|S|/2} Pf(Γ_S) c_S ,
/// ```
///
/// where `S = {s_1 < … < s_{2p}}` runs over even subsets of Majorana
/// indices and `c_S = c_{s_1} ⋯ c_{s_{2p}}`.
pub fn gaussian_state_from_covariance(cov: &MajoranaCovariance, tol: f64) -> Result<ComplexMatrix> {
    let m = cov.modes();
    if m == 0 || m > 4 {
        return Err(Error::SizeLimit { modes: m, max: 4 });
    }
    let max_eigenvalue = cov.max_abs_eigenvalue()?;
    if max_eigenvalue > 1.0 + tol {
        return Err(Error::InvalidCovariance { max_eigenvalue });
    }
    let n = 2 * m;
    let dim = 1usize << m;
    let singles: Vec<Monomial> = (1..=n).map(|k| Monomial::majorana(k, m)).collect::<Result<_>>()?;
    let mut rho = ComplexMatrix::zeros(dim, dim);
    let norm = 1.0 / dim as f64;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size % 2 == 1 {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
        let sub = DMatrix::from_fn(size, size, |a, b| cov.gamma[(subset[a], subset[b])]);
        let pf = linalg::pfaffian(&sub, f64::INFINITY)?;
        if pf == 0.0 {
            continue;
        }
        let mut mono = Monomial::identity(m);
        for &k in &subset {
            mono = mono.mul(&singles[k]);
        }
        let phase = I.powi((size / 2) as i32);
        mono.add_to(&mut rho, phase * pf * norm);
    }
    Ok(linalg::hermitian_part(&rho))
}

/// Covariance matrix of a Gaussian state given its two-point functions
/// `G_jl = ⟨a_j† a_l⟩` and `F_jl = ⟨a_j a_l⟩`.
pub fn covariance_from_correlations(g: &ComplexMatrix, f: &ComplexMatrix, tol: f64) -> Result<MajoranaCovariance> {
    let m = g.nrows();
    // ⟨x_j y_l⟩ for x, y ∈ {a, a†}.
    let cdag_c = |j: usize, l: usize| g[(j, l)];
    let c_cdag = |j: usize, l: usize| if j == l { ONE - g[(l, j)] } else { -g[(l, j)] };
    let c_c = |j: usize, l: usize| f[(j, l)];
    let cdag_cdag = |j: usize, l: usize| f[(l, j)].conj();
    // c_{2j-1} = a† + a, c_{2j} = i a† - i a, as (coef of a†, coef of a).
    let coeffs = |k: usize| if k % 2 == 0 { (ONE, ONE) } else { (I, -I) };
    let n = 2 * m;
    let mut gamma = RealMatrix::zeros(n, n);
    let mut residue: f64 = 0.0;
    for k in 0..n {
        for l in k + 1..n {
            let (jk, jl) = (k / 2, l / 2);
            let (uk, vk) = coeffs(k);
            let (ul, vl) = coeffs(l);
            let expect = uk * ul * cdag_cdag(jk, jl)
                + uk * vl * cdag_c(jk, jl)
                + vk * ul * c_cdag(jk, jl)
                + vk * vl * c_c(jk, jl);
            let value = I * expect;
            residue = residue.max(value.im.abs());
            gamma[(k, l)] = value.re;
            gamma[(l, k)] = -value.re;
        }
    }
    if residue > tol {
        return Err(Error::ComplexCovariance { residue });
    }
    MajoranaCovariance::new(gamma, tol)
}
