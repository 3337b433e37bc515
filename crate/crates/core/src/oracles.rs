//! Brute-force references for the chain engine.
//!
//! A ring of at most [`MAX_MODES`](crate::split::MAX_MODES) sites is small
//! enough to build the Hamiltonian as a dense `2^N x 2^N` matrix from the
//! Jordan–Wigner creation operators and exponentiate it.

use crate::error::{Error, Result};
use crate::fermion;
use crate::linalg::{self, c, ComplexMatrix, DEFAULT_TOL};
use crate::split::{ModeBipartition, Subsystem, MAX_MODES};
use crate::xychain::{AdjacentCorrelators, XYParams};

/// Sign of the bond closing the ring that matches the momentum grid of
/// [`correlators_finite`](crate::xychain::correlators_finite): periodic for
/// odd `n`, antiperiodic for even `n`.
pub fn boundary_sign(n: usize) -> f64 {
    if n % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

/// Dense Hamiltonian of an `n`-site ring.
pub fn chain_hamiltonian(n: usize, p: &XYParams) -> Result<ComplexMatrix> {
    if !(3..=MAX_MODES).contains(&n) {
        return Err(Error::SizeLimit { modes: n, max: MAX_MODES });
    }
    let create: Vec<ComplexMatrix> = (1..=n).map(|k| fermion::creation(k, n)).collect::<Result<_>>()?;
    let annihilate: Vec<ComplexMatrix> = create.iter().map(|a| a.adjoint()).collect();
    let dim = 1 << n;
    let mut h = ComplexMatrix::zeros(dim, dim);
    for site in 0..n {
        h -= &create[site] * &annihilate[site] * c(p.lambda, 0.0);
        let next = (site + 1) % n;
        let sign = if next == 0 { boundary_sign(n) } else { 1.0 };
        let hop = &create[site] * &annihilate[next] * c(0.5 * sign, 0.0);
        let pair = &create[site] * &create[next] * c(p.gamma * sign, 0.0);
        h += &hop + hop.adjoint() + &pair + pair.adjoint();
    }
    Ok(linalg::hermitian_part(&h))
}

/// `e^{-βH}/Z` of the ring.
pub fn thermal_state(n: usize, p: &XYParams) -> Result<ComplexMatrix> {
    let h = chain_hamiltonian(n, p)?;
    let eig = linalg::herm_eig(&h, DEFAULT_TOL)?;
    let ground = eig.eigenvalues[0];
    let z: f64 = eig.eigenvalues.iter().map(|e| (-p.beta * (e - ground)).exp()).sum();
    Ok(eig.map_spectrum(|e| (-p.beta * (e - ground)).exp() / z))
}

/// Reduced state of sites 1 and 2 of the thermal ring.
pub fn brute_force_rdm(n: usize, p: &XYParams) -> Result<ComplexMatrix> {
    let rho = thermal_state(n, p)?;
    let split = ModeBipartition::new(2, n - 2)?;
    linalg::partial_trace(&rho, split, Subsystem::A)
}

/// `⟨a_1†a_1⟩`, `⟨a_1†a_2⟩` and `⟨a_1 a_2⟩` of the thermal ring.
pub fn brute_force_correlators(n: usize, p: &XYParams) -> Result<AdjacentCorrelators> {
    let rdm = brute_force_rdm(n, p)?;
    let (a1, a2) = (fermion::annihilation(1, 2)?, fermion::annihilation(2, 2)?);
    let expect = |op: ComplexMatrix| (&rdm * op).trace();
    Ok(AdjacentCorrelators {
        n_occ: expect(a1.adjoint() * &a1).re,
        hop: expect(a1.adjoint() * &a2),
        pair: expect(&a1 * &a2),
    })
}
