//! Random states for the property suites and the counterexample search.
//!
//! All samplers take an explicit RNG so that every run is reproducible from
//! a seed.

use nalgebra::DVector;
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{c, ComplexMatrix, C64, ZERO};
use crate::split::ModeBipartition;
use crate::xstate::XStateParams;

pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// `diag(R)` moved into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let qr = ginibre(n, n, rng).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Flat Dirichlet weights, from normalized `Exp(1)` draws.
pub fn dirichlet<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let draws: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|v| v / total).collect()
}

/// Uniform random unit vector.
pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DVector<C64> {
    let v = DVector::from_fn(n, |_, _| complex_normal(rng));
    let norm = v.norm();
    v / c(norm, 0.0)
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(n, n, rng);
    (&g + g.adjoint()) * c(0.5, 0.0)
}

/// Random state on `m` modes commuting with the total parity: Haar
/// eigenvectors inside each parity sector and Dirichlet eigenvalues.
pub fn random_even_state<R: Rng + ?Sized>(m: usize, rng: &mut R) -> ComplexMatrix {
    let dim = 1usize << m;
    let sectors: [Vec<usize>; 2] = [
        (0..dim).filter(|i| i.count_ones() % 2 == 0).collect(),
        (0..dim).filter(|i| i.count_ones() % 2 == 1).collect(),
    ];
    let weights = dirichlet(dim, rng);
    let mut rho = ComplexMatrix::zeros(dim, dim);
    let mut next_weight = weights.into_iter();
    for sector in &sectors {
        let u = haar_unitary(sector.len(), rng);
        for k in 0..sector.len() {
            let lambda = next_weight.next().unwrap_or(0.0);
            for (a, &i) in sector.iter().enumerate() {
                for (b, &j) in sector.iter().enumerate() {
                    rho[(i, j)] += u[(a, k)] * u[(b, k)].conj() * lambda;
                }
            }
        }
    }
    rho
}

/// Shapes of random even two-mode states, to cover the boundary cases of
/// the closed-form characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XFamily {
    /// Both coherences generic.
    Generic,
    /// `r = 0`.
    NoR,
    /// `s = 0`.
    NoS,
    /// `r = s = 0`.
    Diagonal,
    /// Rank-one parity blocks (maximal coherences).
    PureBlocks,
}

impl XFamily {
    pub const ALL: [XFamily; 5] = [XFamily::Generic, XFamily::NoR, XFamily::NoS, XFamily::Diagonal, XFamily::PureBlocks];
}

fn random_block<R: Rng + ?Sized>(weight: f64, coherent: bool, pure: bool, rng: &mut R) -> [C64; 3] {
    if !coherent {
        let split: f64 = rng.random();
        return [c(weight * split, 0.0), ZERO, c(weight * (1.0 - split), 0.0)];
    }
    let u = haar_unitary(2, rng);
    let lambda = if pure { vec![1.0, 0.0] } else { dirichlet(2, rng) };
    let entry = |i: usize, j: usize| (u[(i, 0)] * u[(j, 0)].conj() * lambda[0] + u[(i, 1)] * u[(j, 1)].conj() * lambda[1]) * weight;
    [entry(0, 0), entry(0, 1), entry(1, 1)]
}

/// Random even `1x1` state of the given family.
pub fn random_x_state<R: Rng + ?Sized>(family: XFamily, rng: &mut R) -> XStateParams {
    let weights = dirichlet(2, rng);
    let (coherent_even, coherent_odd) = match family {
        XFamily::Generic | XFamily::PureBlocks => (true, true),
        XFamily::NoR => (false, true),
        XFamily::NoS => (true, false),
        XFamily::Diagonal => (false, false),
    };
    let pure = family == XFamily::PureBlocks;
    let [_, r, e11] = random_block(weights[0], coherent_even, pure, rng);
    let [o00, s, o11] = random_block(weights[1], coherent_odd, pure, rng);
    let z = e11.re;
    XStateParams::even(o00.re + z, o11.re + z, z, r, s)
}

/// Random even `1x1` state with the family drawn uniformly.
pub fn random_x_state_any<R: Rng + ?Sized>(rng: &mut R) -> XStateParams {
    let family = XFamily::ALL[rng.random_range(0..XFamily::ALL.len())];
    random_x_state(family, rng)
}

/// Shapes of random pure states with definite global parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PureFamily {
    /// Tensor product of local states with definite local parity.
    Product,
    /// Generic vector inside one global-parity sector.
    Generic,
    /// `α|e⟩|ε⟩ + β|o⟩|θ⟩` with both terms present.
    Straddling,
}

impl PureFamily {
    pub const ALL: [PureFamily; 3] = [PureFamily::Product, PureFamily::Generic, PureFamily::Straddling];
}

fn local_vector<R: Rng + ?Sized>(modes: usize, odd: bool, rng: &mut R) -> DVector<C64> {
    let dim = 1usize << modes;
    let v = DVector::from_fn(dim, |i, _| if (i.count_ones() % 2 == 1) == odd { complex_normal(rng) } else { ZERO });
    let norm = v.norm();
    v / c(norm, 0.0)
}

/// Random pure state with definite global parity `odd`.
pub fn random_parity_pure<R: Rng + ?Sized>(
    split: ModeBipartition,
    family: PureFamily,
    odd: bool,
    rng: &mut R,
) -> DVector<C64> {
    let (ma, mb) = (split.m_a(), split.m_b());
    let tensor = |a: &DVector<C64>, b: &DVector<C64>| a.kronecker(b);
    match family {
        PureFamily::Product => {
            let pa: bool = rng.random();
            tensor(&local_vector(ma, pa, rng), &local_vector(mb, pa ^ odd, rng))
        }
        PureFamily::Generic => {
            let dim = split.dim();
            let v = DVector::from_fn(dim, |i, _| if (i.count_ones() % 2 == 1) == odd { complex_normal(rng) } else { ZERO });
            let norm = v.norm();
            v / c(norm, 0.0)
        }
        PureFamily::Straddling => {
            let angle = rng.random_range(0.2..1.37);
            let phase = rng.random_range(0.0..std::f64::consts::TAU);
            let first = tensor(&local_vector(ma, false, rng), &local_vector(mb, odd, rng));
            let second = tensor(&local_vector(ma, true, rng), &local_vector(mb, !odd, rng));
            first * c(f64::cos(angle), 0.0) + second * C64::from_polar(f64::sin(angle), phase)
        }
    }
}

/// The projector `|ψ⟩⟨ψ|`.
pub fn pure_density(psi: &DVector<C64>) -> ComplexMatrix {
    psi * psi.adjoint()
}

/// Random product of even local states, `ρ_A ⊗ ρ_B`.
pub fn random_even_product<R: Rng + ?Sized>(split: ModeBipartition, rng: &mut R) -> ComplexMatrix {
    let ra = random_even_state(split.m_a(), rng);
    let rb = random_even_state(split.m_b(), rng);
    ra.kronecker(&rb)
}

/// Random Hermitian matrix supported only on the blocks coupling
/// `(α, β)` to `(ᾱ, β̄)`, normalized to unit largest entry. Such a matrix
/// commutes with the total parity and vanishes under the local-parity
/// pinching.
pub fn random_cross_block_hermitian<R: Rng + ?Sized>(split: ModeBipartition, rng: &mut R) -> Result<ComplexMatrix> {
    let dim = split.dim();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            if split.parity_a(i) != split.parity_a(j) && split.parity_b(i) != split.parity_b(j) {
                let v = complex_normal(rng);
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
        }
    }
    let scale = out.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::InvalidParameter("cross-block support is empty".into()));
    }
    Ok(out / c(scale, 0.0))
}
