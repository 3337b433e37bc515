//! Two copies of a bipartite state.
//!
//! `ρ ⊗ ρ` lives on modes `A1 B1 A2 B2`. Regrouping them as
//! `Ã = A1 A2`, `B̃ = B1 B2` (a plain reordering of tensor factors) gives a
//! bipartite state of split `(2 m_A, 2 m_B)`. Its block on the even local
//! parities of `Ã` and `B̃` has the structure
//!
//! ```text
//! ⎛ ρ_ee⊗ρ_ee      0          0       C⊗C   ⎞
//! ⎜    0       ρ_eo⊗ρ_eo    D⊗D        0    ⎟
//! ⎜    0       D†⊗D†     ρ_oe⊗ρ_oe     0    ⎟
//! ⎝  C†⊗C†        0          0     ρ_oo⊗ρ_oo⎠
//! ```

use crate::classify::{self, SetTest, Tolerances};
use crate::error::{Error, Result};
use crate::fermion;
use crate::linalg::{self, ComplexMatrix, ZERO};
use crate::split::ModeBipartition;

fn require_physical(rho: &ComplexMatrix, split: ModeBipartition, tol: f64) -> Result<()> {
    split.check_dim(rho.nrows())?;
    linalg::validate_density(rho, tol)?;
    let deviation = fermion::parity_commutator_norm(rho);
    if deviation > tol {
        return Err(Error::NotPhysical { deviation });
    }
    Ok(())
}

/// Local basis states of `modes` modes with the given parity.
fn states_of_parity(modes: usize, parity: usize) -> Vec<usize> {
    (0..1usize << modes).filter(|i| (i.count_ones() as usize) % 2 == parity).collect()
}

/// Basis of the even subspace of two copies of a `modes`-mode factor: pairs
/// `(i1, i2)` of equal local parity, even pairs first.
fn doubled_even_basis(modes: usize) -> Vec<(usize, usize)> {
    let mut basis = Vec::new();
    for parity in 0..2 {
        let states = states_of_parity(modes, parity);
        for &i1 in &states {
            for &i2 in &states {
                basis.push((i1, i2));
            }
        }
    }
    basis
}

/// The even-even block `P_e^Ã ⊗ P_e^B̃ (ρ⊗ρ) P_e^Ã ⊗ P_e^B̃`, unnormalized,
/// restricted to its support. The result is a state on
/// `(dim_A²/2) x (dim_B²/2)` in product order, so [`ee_block_dims`] gives
/// the factor dimensions for a partial transpose. For a `1x1` split it is
/// the `4x4` matrix with entries `(1-x-y+z)², r², s², …`.
pub fn two_copy_ee_block(rho: &ComplexMatrix, split: ModeBipartition, tol: f64) -> Result<ComplexMatrix> {
    require_physical(rho, split, tol)?;
    let basis_a = doubled_even_basis(split.m_a());
    let basis_b = doubled_even_basis(split.m_b());
    let db = split.dim_b();
    let nb = basis_b.len();
    let n = basis_a.len() * nb;
    Ok(ComplexMatrix::from_fn(n, n, |row, col| {
        let ((a1, a2), (b1, b2)) = (basis_a[row / nb], basis_b[row % nb]);
        let ((a1p, a2p), (b1p, b2p)) = (basis_a[col / nb], basis_b[col % nb]);
        rho[(a1 * db + b1, a1p * db + b1p)] * rho[(a2 * db + b2, a2p * db + b2p)]
    }))
}

/// Factor dimensions `(dim_A²/2, dim_B²/2)` of [`two_copy_ee_block`].
pub fn ee_block_dims(split: ModeBipartition) -> (usize, usize) {
    (split.dim_a() * split.dim_a() / 2, split.dim_b() * split.dim_b() / 2)
}

/// `ρ ⊗ ρ` with its modes regrouped as `A1 A2 B1 B2`, a state of split
/// [`ModeBipartition::doubled`].
pub fn two_copies_regrouped(rho: &ComplexMatrix, split: ModeBipartition) -> Result<ComplexMatrix> {
    split.check_dim(rho.nrows())?;
    let doubled = split.doubled()?;
    let ma = split.m_a();
    let m = split.modes();
    // input modes: A1 = 0..ma, B1 = ma..m, A2 = m..m+ma, B2 = m+ma..2m
    let mut perm: Vec<usize> = Vec::with_capacity(2 * m);
    perm.extend(0..ma);
    perm.extend(m..m + ma);
    perm.extend(ma..m);
    perm.extend(m + ma..2 * m);
    debug_assert_eq!(perm.len(), doubled.modes());
    Ok(linalg::permute_modes(&linalg::kron(rho, rho), &perm))
}

/// [`two_copy_ee_block`] computed by sandwiching the full regrouped
/// two-copy state with `P_e^Ã ⊗ P_e^B̃`; same dimension as `ρ ⊗ ρ`.
pub fn two_copy_ee_projected(rho: &ComplexMatrix, split: ModeBipartition) -> Result<ComplexMatrix> {
    let doubled = split.doubled()?;
    let full = two_copies_regrouped(rho, split)?;
    let n = full.nrows();
    let keep = |i: usize| doubled.parity_a(i) == 0 && doubled.parity_b(i) == 0;
    Ok(ComplexMatrix::from_fn(n, n, |i, j| if keep(i) && keep(j) { full[(i, j)] } else { ZERO }))
}

/// Both sides of `ρ^{⊗2} ∈ Z1 ⟺ ρ ∈ S2'π` and the intermediate
/// `PPT(ee-block) ⟺ PPT(ρ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MulticopyReport {
    pub ppt_single: SetTest,
    pub ppt_ee_block: SetTest,
    pub two_copies_in_z1: SetTest,
}

impl MulticopyReport {
    /// All three tests pass or all three fail.
    pub fn consistent(&self) -> bool {
        let single = self.ppt_single.passed();
        single == self.ppt_ee_block.passed() && single == self.two_copies_in_z1.passed()
    }
}

/// Evaluates the two-copy equivalences for a physical `1x1` state.
pub fn check_multicopy(rho: &ComplexMatrix, tols: Tolerances) -> Result<MulticopyReport> {
    let split = ModeBipartition::one_by_one();
    require_physical(rho, split, tols.psd)?;
    let ppt_single = classify::is_ppt(rho, split, tols.membership)?;
    let block = two_copy_ee_block(rho, split, tols.psd)?;
    let (da, db) = ee_block_dims(split);
    let ppt_ee_block = classify::is_ppt_dims(&block, da, db, tols.membership)?;
    let doubled = split.doubled()?;
    let two = two_copies_regrouped(rho, split)?;
    let two_copies_in_z1 = classify::in_z1(&two, doubled, tols)?;
    Ok(MulticopyReport { ppt_single, ppt_ee_block, two_copies_in_z1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, diag, max_abs_diff, DEFAULT_TOL};
    use crate::xstate::XStateParams;

    fn one() -> ModeBipartition {
        ModeBipartition::one_by_one()
    }

    #[test]
    fn bell_even_block() {
        let bell = XStateParams::even(0.5, 0.5, 0.5, c(0.5, 0.0), ZERO).to_matrix();
        let block = two_copy_ee_block(&bell, one(), DEFAULT_TOL).unwrap();
        let mut expected = ComplexMatrix::zeros(4, 4);
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            expected[(i, j)] = c(0.25, 0.0);
        }
        assert!(max_abs_diff(&block, &expected) < 1e-15);
        assert!((block.trace().re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn diagonal_input_squares_populations() {
        let rho = diag(&[0.1, 0.2, 0.3, 0.4]);
        let block = two_copy_ee_block(&rho, one(), DEFAULT_TOL).unwrap();
        assert!(max_abs_diff(&block, &diag(&[0.01, 0.04, 0.09, 0.16])) < 1e-15);
    }

    #[test]
    fn block_entries_are_squares_of_the_x_parameters() {
        let params = XStateParams::even(0.4, 0.35, 0.1, c(0.08, 0.03), c(-0.02, 0.1));
        let block = two_copy_ee_block(&params.to_matrix(), one(), DEFAULT_TOL).unwrap();
        let (x, y, z) = (params.x, params.y, params.z);
        let sq = |v: f64| c(v * v, 0.0);
        #[rustfmt::skip]
        let expected = ComplexMatrix::from_row_slice(
            4,
            4,
            &[
                sq(1.0 - x - y + z), ZERO, ZERO, params.r * params.r,
                ZERO, sq(x - z), params.s * params.s, ZERO,
                ZERO, (params.s * params.s).conj(), sq(y - z), ZERO,
                (params.r * params.r).conj(), ZERO, ZERO, sq(z),
            ],
        );
        assert!(max_abs_diff(&block, &expected) < 1e-15);
    }

    #[test]
    fn compressed_block_matches_projected_two_copy_state() {
        let params = XStateParams::even(0.4, 0.35, 0.1, c(0.08, 0.03), c(-0.02, 0.1));
        let rho = params.to_matrix();
        let block = two_copy_ee_block(&rho, one(), DEFAULT_TOL).unwrap();
        let projected = two_copy_ee_projected(&rho, one()).unwrap();
        let doubled = one().doubled().unwrap();
        let support: Vec<usize> = (0..16).filter(|&i| doubled.parity_a(i) == 0 && doubled.parity_b(i) == 0).collect();
        let restricted = ComplexMatrix::from_fn(4, 4, |i, j| projected[(support[i], support[j])]);
        assert!(max_abs_diff(&block, &restricted) < 1e-15);
    }

    #[test]
    fn rejects_unphysical_input() {
        let mut rho = ComplexMatrix::identity(4, 4) * c(0.25, 0.0);
        rho[(0, 1)] = c(0.1, 0.0);
        rho[(1, 0)] = c(0.1, 0.0);
        assert!(matches!(two_copy_ee_block(&rho, one(), DEFAULT_TOL), Err(Error::NotPhysical { .. })));
    }

    #[test]
    fn multicopy_report_for_entangled_and_separable_states() {
        let tols = Tolerances::default();
        let bell = XStateParams::even(0.5, 0.5, 0.5, c(0.5, 0.0), ZERO).to_matrix();
        let report = check_multicopy(&bell, tols).unwrap();
        assert!(!report.ppt_single.passed() && !report.two_copies_in_z1.passed());
        assert!(report.consistent());
        let separable = XStateParams::even(0.5, 0.6, 0.2, ZERO, c(0.1, 0.0)).to_matrix();
        let report = check_multicopy(&separable, tols).unwrap();
        assert!(report.ppt_single.passed() && report.two_copies_in_z1.passed());
        assert!(report.consistent());
    }
}
