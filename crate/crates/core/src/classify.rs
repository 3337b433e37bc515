//! Membership tests for the product and separable sets.
//!
//! Product sets are decided exactly (up to a residual tolerance). The
//! separable sets are decided by partial transposition, which is exact only
//! for a `1x1` split; for larger splits a passing test is reported as
//! [`Verdict::NecessaryTestOnly`] while a failing one still excludes the
//! state.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::fermion::{self, Monomial};
use crate::linalg::{self, c, kron, max_abs_diff, ComplexMatrix, C64};
use crate::split::{ModeBipartition, Subsystem};

/// Outcome of a single membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Member,
    NonMember,
    /// A necessary condition holds but is not known to be sufficient.
    NecessaryTestOnly,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::NecessaryTestOnly => "necessary-test-only",
        }
    }

    /// `true` unless the state was shown to lie outside the set.
    pub fn passed(&self) -> bool {
        *self != Verdict::NonMember
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether the criterion behind a verdict is exact or only necessary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    Exact,
    Necessary,
}

impl Strength {
    pub fn as_str(&self) -> &'static str {
        match self {
            Strength::Exact => "exact",
            Strength::Necessary => "necessary",
        }
    }
}

/// Verdict with its numeric evidence. `witness` is a residual for product
/// tests and a minimum eigenvalue for partial-transpose tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SetTest {
    pub verdict: Verdict,
    pub witness: f64,
    pub tolerance: f64,
    pub strength: Strength,
}

impl SetTest {
    fn exact(pass: bool, witness: f64, tolerance: f64) -> Self {
        let verdict = if pass { Verdict::Member } else { Verdict::NonMember };
        Self { verdict, witness, tolerance, strength: Strength::Exact }
    }

    fn with_strength(pass: bool, witness: f64, tolerance: f64, strength: Strength) -> Self {
        match strength {
            Strength::Exact => Self::exact(pass, witness, tolerance),
            Strength::Necessary => {
                let verdict = if pass { Verdict::NecessaryTestOnly } else { Verdict::NonMember };
                Self { verdict, witness, tolerance, strength }
            }
        }
    }

    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

/// Tolerances for state validation and for membership residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Hermiticity, positivity and parity-commutation checks.
    pub psd: f64,
    /// Factorization residuals and partial-transpose eigenvalues.
    pub membership: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { psd: 1e-9, membership: 1e-8 }
    }
}

impl Tolerances {
    pub fn uniform(tol: f64) -> Self {
        Self { psd: tol, membership: tol }
    }
}

/// Labels of the sets reported by [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetLabel {
    P1,
    P2,
    P3,
    P1Pi,
    P2Pi,
    S1Pi,
    S2PrimePi,
    S2Pi,
    Z1,
}

impl SetLabel {
    pub const ALL: [SetLabel; 9] = [
        SetLabel::P1,
        SetLabel::P2,
        SetLabel::P3,
        SetLabel::P1Pi,
        SetLabel::P2Pi,
        SetLabel::S1Pi,
        SetLabel::S2PrimePi,
        SetLabel::S2Pi,
        SetLabel::Z1,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SetLabel::P1 => "P1",
            SetLabel::P2 => "P2",
            SetLabel::P3 => "P3",
            SetLabel::P1Pi => "P1pi",
            SetLabel::P2Pi => "P2pi",
            SetLabel::S1Pi => "S1pi",
            SetLabel::S2PrimePi => "S2prime",
            SetLabel::S2Pi => "S2",
            SetLabel::Z1 => "Z1",
        }
    }
}

/// `‖ρ - tr_B ρ ⊗ tr_A ρ‖_max ≤ tol`.
pub fn is_product_p2(rho: &ComplexMatrix, split: ModeBipartition, tol: f64) -> Result<SetTest> {
    split.check_dim(rho.nrows())?;
    let residual = factorization_residual(rho, split)?;
    Ok(SetTest::exact(residual <= tol, residual, tol))
}

fn factorization_residual(rho: &ComplexMatrix, split: ModeBipartition) -> Result<f64> {
    let ra = linalg::partial_trace(rho, split, Subsystem::A)?;
    let rb = linalg::partial_trace(rho, split, Subsystem::B)?;
    Ok(max_abs_diff(rho, &kron(&ra, &rb)))
}

/// The `P2` test applied to the local-parity pinching of `rho`. The
/// marginals of the pinched state commute with their local parities, so a
/// factorization automatically has parity-commuting factors.
pub fn is_product_p1(rho: &ComplexMatrix, split: ModeBipartition, tol: f64) -> Result<SetTest> {
    let pinched = fermion::block_diagonal_part(rho, split)?;
    let residual = factorization_residual(&pinched, split)?;
    Ok(SetTest::exact(residual <= tol, residual, tol))
}

/// Largest total mode count accepted by [`is_product_p3`].
pub const P3_MAX_MODES: usize = 4;

/// `⟨M_A M_B⟩ = ⟨M_A⟩⟨M_B⟩` for every pair of Majorana monomials, odd ones
/// included.
pub fn is_product_p3(rho: &ComplexMatrix, split: ModeBipartition, tol: f64) -> Result<SetTest> {
    split.check_dim(rho.nrows())?;
    let m = split.modes();
    if m > P3_MAX_MODES {
        return Err(Error::SizeLimit { modes: m, max: P3_MAX_MODES });
    }
    let monomials = |first: usize, count: usize| -> Result<Vec<Monomial>> {
        (0u32..1 << count)
            .map(|mask| {
                let indices: Vec<usize> = (0..count).filter(|k| mask & (1 << k) != 0).map(|k| first + k).collect();
                Monomial::product(&indices, m)
            })
            .collect()
    };
    let side_a = monomials(1, 2 * split.m_a())?;
    let side_b = monomials(2 * split.m_a() + 1, 2 * split.m_b())?;
    let mean_a: Vec<C64> = side_a.iter().map(|mono| mono.expectation(rho)).collect();
    let mean_b: Vec<C64> = side_b.iter().map(|mono| mono.expectation(rho)).collect();
    let mut residual: f64 = 0.0;
    for (ma, ea) in side_a.iter().zip(&mean_a) {
        for (mb, eb) in side_b.iter().zip(&mean_b) {
            let joint = ma.mul(mb).expectation(rho);
            residual = residual.max((joint - ea * eb).norm());
        }
    }
    Ok(SetTest::exact(residual <= tol, residual, tol))
}

/// Schmidt coefficients (singular values of `ψ` reshaped to
/// `dim_A x dim_B`), descending.
pub fn schmidt_coefficients(psi: &DVector<C64>, split: ModeBipartition) -> Result<Vec<f64>> {
    split.check_dim(psi.len())?;
    let (da, db) = (split.dim_a(), split.dim_b());
    let reshaped = ComplexMatrix::from_fn(da, db, |a, b| psi[a * db + b]);
    let mut values: Vec<f64> = reshaped.singular_values().iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Product test for a pure state of definite global parity: a single
/// nonzero Schmidt coefficient. The witness is the second coefficient.
pub fn is_product_pure(psi: &DVector<C64>, split: ModeBipartition, tol: f64) -> Result<SetTest> {
    split.check_dim(psi.len())?;
    let norm = psi.norm();
    let odd_weight: f64 = psi.iter().enumerate().filter(|(i, _)| i.count_ones() % 2 == 1).map(|(_, v)| v.norm_sqr()).sum();
    let weight = (odd_weight / (norm * norm)).min(1.0 - odd_weight / (norm * norm));
    if weight > tol {
        return Err(Error::IndefiniteParity { weight });
    }
    let coefficients = schmidt_coefficients(&(psi / c(norm, 0.0)), split)?;
    let second = coefficients.get(1).copied().unwrap_or(0.0);
    Ok(SetTest::exact(second <= tol, second, tol))
}

/// `min eig(ρ^{T_B}) ≥ -tol`, witness being that eigenvalue.
pub fn is_ppt(rho: &ComplexMatrix, split: ModeBipartition, tol: f64) -> Result<SetTest> {
    let witness = ppt_witness(rho, split)?;
    Ok(SetTest::exact(witness >= -tol, witness, tol))
}

/// [`is_ppt`] on an arbitrary `dim_a x dim_b` factorization.
pub fn is_ppt_dims(rho: &ComplexMatrix, dim_a: usize, dim_b: usize, tol: f64) -> Result<SetTest> {
    let pt = linalg::partial_transpose_dims(rho, dim_a, dim_b)?;
    let witness = linalg::min_eigenvalue(&pt, f64::INFINITY)?;
    Ok(SetTest::exact(witness >= -tol, witness, tol))
}

/// Smallest eigenvalue of the partial transpose.
pub fn ppt_witness(rho: &ComplexMatrix, split: ModeBipartition) -> Result<f64> {
    let pt = linalg::partial_transpose(rho, split)?;
    linalg::min_eigenvalue(&pt, f64::INFINITY)
}

fn separability_strength(split: ModeBipartition) -> Strength {
    if split.is_one_by_one() {
        Strength::Exact
    } else {
        Strength::Necessary
    }
}

fn require_physical(rho: &ComplexMatrix, split: ModeBipartition, tols: Tolerances) -> Result<()> {
    split.check_dim(rho.nrows())?;
    linalg::validate_density(rho, tols.psd)?;
    let deviation = fermion::parity_commutator_norm(rho);
    if deviation > tols.psd {
        return Err(Error::NotPhysical { deviation });
    }
    Ok(())
}

/// `S2'π`: partial transposition of `rho` itself.
pub fn in_s2prime(rho: &ComplexMatrix, split: ModeBipartition, tols: Tolerances) -> Result<SetTest> {
    require_physical(rho, split, tols)?;
    let witness = ppt_witness(rho, split)?;
    Ok(SetTest::with_strength(witness >= -tols.membership, witness, tols.membership, separability_strength(split)))
}

/// `S2π`: partial transposition of each renormalized global-parity block.
/// Blocks of vanishing weight are skipped.
pub fn in_s2(rho: &ComplexMatrix, split: ModeBipartition, tols: Tolerances) -> Result<SetTest> {
    require_physical(rho, split, tols)?;
    let mut witness = f64::INFINITY;
    for odd in [false, true] {
        let block = fermion::global_parity_block(rho, odd);
        let weight = block.trace().re;
        if weight <= tols.psd {
            continue;
        }
        let normalized = block / c(weight, 0.0);
        witness = witness.min(ppt_witness(&normalized, split)?);
    }
    Ok(SetTest::with_strength(witness >= -tols.membership, witness, tols.membership, separability_strength(split)))
}

/// `Z1`: partial transposition of the local-parity pinching. Defined for
/// any state, physical or not.
pub fn in_z1(rho: &ComplexMatrix, split: ModeBipartition, tols: Tolerances) -> Result<SetTest> {
    split.check_dim(rho.nrows())?;
    linalg::validate_density(rho, tols.psd)?;
    let pinched = fermion::block_diagonal_part(rho, split)?;
    let witness = ppt_witness(&pinched, split)?;
    Ok(SetTest::with_strength(witness >= -tols.membership, witness, tols.membership, separability_strength(split)))
}

/// `S1π`. For `1x1` it coincides with `S2'π` and is decided exactly by
/// partial transposition. For larger splits only the `Z1` test (a
/// necessary condition, as `S1π ⊂ Z1`) is applied.
pub fn in_s1(rho: &ComplexMatrix, split: ModeBipartition, tols: Tolerances) -> Result<SetTest> {
    if split.is_one_by_one() {
        return in_s2prime(rho, split, tols);
    }
    require_physical(rho, split, tols)?;
    let z1 = in_z1(rho, split, tols)?;
    Ok(SetTest::with_strength(z1.passed(), z1.witness, z1.tolerance, Strength::Necessary))
}

/// Verdicts for every set, with the evidence behind them.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub split: ModeBipartition,
    pub tolerances: Tolerances,
    pub physical: bool,
    /// `‖[ρ, Π]‖_max`.
    pub parity_deviation: f64,
    /// Smallest eigenvalue of `ρ^{T_B}`.
    pub ppt_witness: f64,
    /// `None` for `P3` above [`P3_MAX_MODES`].
    pub entries: Vec<(SetLabel, Option<SetTest>)>,
}

impl ClassificationReport {
    pub fn get(&self, label: SetLabel) -> Option<&SetTest> {
        self.entries.iter().find(|(l, _)| *l == label).and_then(|(_, t)| t.as_ref())
    }

    pub fn verdict(&self, label: SetLabel) -> Option<Verdict> {
        self.get(label).map(|t| t.verdict)
    }

    /// Pairs `(inner, outer)` of the chain `S2π ⊂ S2'π ⊂ S1π ⊂ Z1` where the
    /// inner set passed and the outer one was excluded.
    pub fn chain_violations(&self) -> Vec<(SetLabel, SetLabel)> {
        let chain = [SetLabel::S2Pi, SetLabel::S2PrimePi, SetLabel::S1Pi, SetLabel::Z1];
        let mut out = Vec::new();
        for (i, inner) in chain.iter().enumerate() {
            for outer in &chain[i + 1..] {
                if let (Some(a), Some(b)) = (self.get(*inner), self.get(*outer)) {
                    if a.passed() && !b.passed() {
                        out.push((*inner, *outer));
                    }
                }
            }
        }
        out
    }
}

/// Runs every membership test. Non-physical states are reported outside
/// all the physical sets, with the parity deviation as witness.
pub fn classify(rho: &ComplexMatrix, split: ModeBipartition, tols: Tolerances) -> Result<ClassificationReport> {
    split.check_dim(rho.nrows())?;
    linalg::validate_density(rho, tols.psd)?;
    let parity_deviation = fermion::parity_commutator_norm(rho);
    let physical = parity_deviation <= tols.psd;
    let p1 = is_product_p1(rho, split, tols.membership)?;
    let p2 = is_product_p2(rho, split, tols.membership)?;
    let p3 = if split.modes() <= P3_MAX_MODES { Some(is_product_p3(rho, split, tols.membership)?) } else { None };
    let unphysical = SetTest::exact(false, parity_deviation, tols.psd);
    let physical_only = |test: SetTest| if physical { test } else { unphysical };
    let (s1, s2p, s2) = if physical {
        (in_s1(rho, split, tols)?, in_s2prime(rho, split, tols)?, in_s2(rho, split, tols)?)
    } else {
        (unphysical, unphysical, unphysical)
    };
    let z1 = in_z1(rho, split, tols)?;
    let entries = vec![
        (SetLabel::P1, Some(p1)),
        (SetLabel::P2, Some(p2)),
        (SetLabel::P3, p3),
        (SetLabel::P1Pi, Some(physical_only(p1))),
        (SetLabel::P2Pi, Some(physical_only(p2))),
        (SetLabel::S1Pi, Some(s1)),
        (SetLabel::S2PrimePi, Some(s2p)),
        (SetLabel::S2Pi, Some(s2)),
        (SetLabel::Z1, Some(z1)),
    ];
    Ok(ClassificationReport { split, tolerances: tols, physical, parity_deviation, ppt_witness: ppt_witness(rho, split)?, entries })
}
