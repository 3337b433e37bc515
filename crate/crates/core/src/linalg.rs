//! Dense complex matrix kernel.
//!
//! Everything here works on [`ComplexMatrix`], a dense `nalgebra` matrix of
//! `Complex<f64>`. Dimensions stay at or below `2^8`, so nothing is sparse
//! and nothing is blocked.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::split::{ModeBipartition, Subsystem};

pub use nalgebra::Complex;

pub type C64 = Complex<f64>;
pub type ComplexMatrix = DMatrix<C64>;
pub type RealMatrix = DMatrix<f64>;
/// A density matrix on the `2^m`-dimensional Fock space.
pub type DensityMatrix = ComplexMatrix;

/// Default absolute tolerance for Hermiticity and positivity checks.
pub const DEFAULT_TOL: f64 = 1e-9;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Builds a complex matrix from real entries given row by row.
pub fn from_real_rows(rows: &[&[f64]]) -> ComplexMatrix {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    ComplexMatrix::from_fn(n, m, |i, j| c(rows[i][j], 0.0))
}

pub fn diag(values: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&DVector::from_iterator(values.len(), values.iter().map(|&v| c(v, 0.0))))
}

/// Outer product `|v><v|`.
pub fn projector(v: &DVector<C64>) -> ComplexMatrix {
    v * v.adjoint()
}

/// Standard Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

pub fn max_abs(a: &ComplexMatrix) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Largest entry of the anti-Hermitian part `|a - a†|`.
pub fn hermitian_deviation(a: &ComplexMatrix) -> f64 {
    let n = a.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    dev
}

fn check_square(a: &ComplexMatrix) -> Result<()> {
    if a.nrows() != a.ncols() || a.nrows() == 0 {
        return Err(Error::NotSquare { rows: a.nrows(), cols: a.ncols() });
    }
    Ok(())
}

pub fn check_hermitian(a: &ComplexMatrix, tol: f64) -> Result<()> {
    check_square(a)?;
    let deviation = hermitian_deviation(a);
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// Hermitian part `(a + a†)/2`, used to strip rounding noise before
/// handing a matrix to the symmetric eigensolver.
pub fn hermitian_part(a: &ComplexMatrix) -> ComplexMatrix {
    (a + a.adjoint()) * c(0.5, 0.0)
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermEigResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `i` is the unit eigenvector for `eigenvalues[i]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermEigResult {
    /// Rebuilds `V diag(f(λ)) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let mut scaled = self.eigenvectors.clone();
        for (j, &lam) in self.eigenvalues.iter().enumerate() {
            let w = f(lam);
            for i in 0..n {
                scaled[(i, j)] *= w;
            }
        }
        scaled * self.eigenvectors.adjoint()
    }
}

/// Hermitian eigendecomposition with eigenvalues sorted ascending.
pub fn herm_eig(a: &ComplexMatrix, tol: f64) -> Result<HermEigResult> {
    check_hermitian(a, tol)?;
    let eig = hermitian_part(a).symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let eigenvalues = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(a.nrows(), a.ncols(), |r, k| eig.eigenvectors[(r, order[k])]);
    Ok(HermEigResult { eigenvalues, eigenvectors })
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn eigenvalues(a: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    check_hermitian(a, tol)?;
    let mut ev: Vec<f64> = hermitian_part(a).symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

pub fn min_eigenvalue(a: &ComplexMatrix, tol: f64) -> Result<f64> {
    Ok(eigenvalues(a, tol)?[0])
}

/// Cheap positivity test: `a + tol·𝟙` admits a Cholesky factorization.
pub fn is_psd(a: &ComplexMatrix, tol: f64) -> bool {
    if hermitian_deviation(a) > tol {
        return false;
    }
    cholesky_succeeds(a, tol)
}

/// In-place Cholesky of `a + shift·𝟙` that stops at the first non-positive
/// pivot. nalgebra's complex Cholesky takes complex square roots and so
/// never reports indefiniteness.
fn cholesky_succeeds(a: &ComplexMatrix, shift: f64) -> bool {
    let n = a.nrows();
    let mut l = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)].re + shift;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if !(d > 0.0) {
            return false;
        }
        let d = d.sqrt();
        l[(j, j)] = c(d, 0.0);
        for i in j + 1..n {
            let mut s = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / d;
        }
    }
    true
}

/// Verifies Hermiticity, positivity and unit trace.
pub fn validate_density(rho: &ComplexMatrix, tol: f64) -> Result<()> {
    check_hermitian(rho, tol)?;
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > tol.max(1e-12) * rho.nrows() as f64 {
        return Err(Error::NotNormalized { trace });
    }
    let min_eigenvalue = min_eigenvalue(rho, tol)?;
    if min_eigenvalue < -tol {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(())
}

/// Partial transpose over the second factor of a `dim_a·dim_b` space.
pub fn partial_transpose_dims(rho: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<ComplexMatrix> {
    check_square(rho)?;
    if rho.nrows() != dim_a * dim_b {
        return Err(Error::DimensionMismatch { expected: dim_a * dim_b, found: rho.nrows() });
    }
    let n = rho.nrows();
    Ok(ComplexMatrix::from_fn(n, n, |row, col| {
        let (ia, ib) = (row / dim_b, row % dim_b);
        let (ja, jb) = (col / dim_b, col % dim_b);
        rho[(ia * dim_b + jb, ja * dim_b + ib)]
    }))
}

/// Transposes the B indices of `rho` only.
pub fn partial_transpose(rho: &ComplexMatrix, split: ModeBipartition) -> Result<ComplexMatrix> {
    partial_transpose_dims(rho, split.dim_a(), split.dim_b())
}

/// Reduced state on `keep`, tracing out the other subsystem.
pub fn partial_trace(rho: &ComplexMatrix, split: ModeBipartition, keep: Subsystem) -> Result<ComplexMatrix> {
    check_square(rho)?;
    split.check_dim(rho.nrows())?;
    let (da, db) = (split.dim_a(), split.dim_b());
    Ok(match keep {
        Subsystem::A => ComplexMatrix::from_fn(da, da, |i, j| (0..db).map(|k| rho[(i * db + k, j * db + k)]).sum()),
        Subsystem::B => ComplexMatrix::from_fn(db, db, |i, j| (0..da).map(|k| rho[(k * db + i, k * db + j)]).sum()),
    })
}

/// Reorders qubit (mode) factors: output mode `q` is input mode `perm[q]`.
///
/// This is a plain tensor-factor permutation; no fermionic exchange signs.
pub fn permute_modes(rho: &ComplexMatrix, perm: &[usize]) -> ComplexMatrix {
    let m = perm.len();
    let n = 1usize << m;
    assert_eq!(rho.nrows(), n, "matrix dimension does not match permutation length");
    let map = |out: usize| -> usize {
        let mut idx = 0;
        for (q, &src) in perm.iter().enumerate() {
            let bit = (out >> (m - 1 - q)) & 1;
            idx |= bit << (m - 1 - src);
        }
        idx
    };
    let index: Vec<usize> = (0..n).map(map).collect();
    ComplexMatrix::from_fn(n, n, |i, j| rho[(index[i], index[j])])
}

/// Pfaffian of a real antisymmetric matrix.
///
/// Dimensions up to 6 use the cofactor expansion along the first row,
/// larger ones a Householder tridiagonalization.
pub fn pfaffian(a: &RealMatrix, tol: f64) -> Result<f64> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::NotSquare { rows: n, cols: a.ncols() });
    }
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut deviation: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            deviation = deviation.max((a[(i, j)] + a[(j, i)]).abs());
        }
    }
    if deviation > tol {
        return Err(Error::NotAntisymmetric { deviation });
    }
    if n == 0 {
        return Ok(1.0);
    }
    if n <= 6 {
        let idx: Vec<usize> = (0..n).collect();
        Ok(pfaffian_expand(a, &idx))
    } else {
        Ok(pfaffian_householder(a.clone()))
    }
}

fn pfaffian_expand(a: &RealMatrix, idx: &[usize]) -> f64 {
    match idx.len() {
        0 => 1.0,
        2 => a[(idx[0], idx[1])],
        _ => {
            let first = idx[0];
            let mut total = 0.0;
            let mut sign = 1.0;
            for k in 1..idx.len() {
                let entry = a[(first, idx[k])];
                if entry != 0.0 {
                    let rest: Vec<usize> = idx[1..].iter().copied().filter(|&i| i != idx[k]).collect();
                    total += sign * entry * pfaffian_expand(a, &rest);
                }
                sign = -sign;
            }
            total
        }
    }
}

/// Reduces `a` to tridiagonal form by Householder reflections `P = 𝟙 - 2vvᵀ`
/// applied as `P a P`; each reflection contributes `det P = -1`.
fn pfaffian_householder(mut a: RealMatrix) -> f64 {
    let n = a.nrows();
    let mut pf = 1.0;
    for i in 0..n - 2 {
        let x: Vec<f64> = (i + 1..n).map(|r| a[(r, i)]).collect();
        let sigma: f64 = x[1..].iter().map(|v| v * v).sum();
        let alpha;
        if sigma == 0.0 {
            alpha = x[0];
        } else {
            let norm_x = (x[0] * x[0] + sigma).sqrt();
            let mut v = x.clone();
            if x[0] <= 0.0 {
                v[0] -= norm_x;
                alpha = norm_x;
            } else {
                v[0] += norm_x;
                alpha = -norm_x;
            }
            let vnorm = v.iter().map(|t| t * t).sum::<f64>().sqrt();
            v.iter_mut().for_each(|t| *t /= vnorm);

            // Trailing block update: A' = A + v wᵀ - w vᵀ with w = 2 A v.
            let m = n - i - 1;
            let mut w = vec![0.0; m];
            for r in 0..m {
                w[r] = 2.0 * (0..m).map(|s| a[(i + 1 + r, i + 1 + s)] * v[s]).sum::<f64>();
            }
            for r in 0..m {
                for s in 0..m {
                    a[(i + 1 + r, i + 1 + s)] += v[r] * w[s] - w[r] * v[s];
                }
            }
            pf = -pf;
        }
        a[(i + 1, i)] = alpha;
        a[(i, i + 1)] = -alpha;
        for r in i + 2..n {
            a[(r, i)] = 0.0;
            a[(i, r)] = 0.0;
        }
        if i % 2 == 0 {
            pf *= -alpha;
        }
    }
    pf * a[(n - 2, n - 1)]
}
