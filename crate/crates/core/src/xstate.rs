//! The generic two-mode (`1x1`) state and its closed-form characterizations.
//!
//! In the basis `|00⟩, |01⟩, |10⟩, |11⟩` (mode A on the left)
//!
//! ```text
//!     ⎛ 1-x-y+z   p     q     r ⎞
//! ρ = ⎜   p*     x-z    s     t ⎟
//!     ⎜   q*     s*    y-z    w ⎟
//!     ⎝   r*     t*     w*    z ⎠
//! ```
//!
//! so `x = ⟨n_B⟩`, `y = ⟨n_A⟩` and `z = ⟨n_A n_B⟩`. Physical states have
//! `p = q = t = w = 0` (an X-state).

use crate::error::{Error, Result};
use crate::linalg::{c, ComplexMatrix, C64, ZERO};

/// Parameters `(x, y, z, p, q, r, s, t, w)` of a `4x4` two-mode state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateParams {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub p: C64,
    pub q: C64,
    pub r: C64,
    pub s: C64,
    pub t: C64,
    pub w: C64,
}

impl XStateParams {
    /// Physical (even) state with coherences `r` (`|00⟩↔|11⟩`) and
    /// `s` (`|01⟩↔|10⟩`).
    pub fn even(x: f64, y: f64, z: f64, r: C64, s: C64) -> Self {
        Self { x, y, z, p: ZERO, q: ZERO, r, s, t: ZERO, w: ZERO }
    }

    pub fn diagonal(x: f64, y: f64, z: f64) -> Self {
        Self::even(x, y, z, ZERO, ZERO)
    }

    /// Hermitian by construction; positivity is not checked.
    #[rustfmt::skip]
    pub fn to_matrix(&self) -> ComplexMatrix {
        let Self { x, y, z, p, q, r, s, t, w } = *self;
        ComplexMatrix::from_row_slice(
            4,
            4,
            &[
                c(1.0 - x - y + z, 0.0), p, q, r,
                p.conj(), c(x - z, 0.0), s, t,
                q.conj(), s.conj(), c(y - z, 0.0), w,
                r.conj(), t.conj(), w.conj(), c(z, 0.0),
            ],
        )
    }

    /// Reads the parameters off the upper triangle of a `4x4` matrix.
    pub fn from_matrix(rho: &ComplexMatrix) -> Result<Self> {
        if rho.nrows() != 4 || rho.ncols() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: rho.nrows() });
        }
        let z = rho[(3, 3)].re;
        Ok(Self {
            x: rho[(1, 1)].re + z,
            y: rho[(2, 2)].re + z,
            z,
            p: rho[(0, 1)],
            q: rho[(0, 2)],
            r: rho[(0, 3)],
            s: rho[(1, 2)],
            t: rho[(1, 3)],
            w: rho[(2, 3)],
        })
    }

    pub fn is_even(&self) -> bool {
        [self.p, self.q, self.t, self.w].iter().all(|v| *v == ZERO)
    }

    /// Weight of the even global-parity block, `1 - x - y + 2z`.
    pub fn even_weight(&self) -> f64 {
        1.0 - self.x - self.y + 2.0 * self.z
    }

    /// Weight of the odd global-parity block, `x + y - 2z`.
    pub fn odd_weight(&self) -> f64 {
        self.x + self.y - 2.0 * self.z
    }

    /// `|r|² ≤ (x-z)(y-z)` and `|s|² ≤ z(1-x-y+z)`: the PPT condition for
    /// an even state, shared by `S1π` and `S2'π`.
    pub fn ppt_closed_form(&self) -> bool {
        let (x, y, z) = (self.x, self.y, self.z);
        self.r.norm_sqr() <= (x - z) * (y - z) && self.s.norm_sqr() <= z * (1.0 - x - y + z)
    }

    /// `r = s = 0` within `tol`: the `S2π` condition.
    pub fn s2_closed_form(&self, tol: f64) -> bool {
        self.r.norm().max(self.s.norm()) <= tol
    }

    /// `z = xy`: the `P1` condition.
    pub fn p1_closed_form(&self, tol: f64) -> bool {
        (self.z - self.x * self.y).abs() <= tol
    }

    /// The five `P2` relations: `z = xy`, `yp = (1-y)w`, `xq = (1-x)t`,
    /// `xyr = tw`, `xys = tw*`.
    pub fn p2_closed_form(&self, tol: f64) -> bool {
        let (x, y) = (self.x, self.y);
        self.p1_closed_form(tol)
            && (self.p * y - self.w * (1.0 - y)).norm() <= tol
            && (self.q * x - self.t * (1.0 - x)).norm() <= tol
            && (self.r * (x * y) - self.t * self.w).norm() <= tol
            && (self.s * (x * y) - self.t * self.w.conj()).norm() <= tol
    }

    /// The two `P3` families: `r = s = 0`, `z = xy` and either
    /// `q = t = 0, (1-y)w = -yp` or `p = w = 0, (1-x)t = xq`.
    pub fn p3_closed_form(&self, tol: f64) -> bool {
        let (x, y) = (self.x, self.y);
        let small = |v: C64| v.norm() <= tol;
        let first = small(self.q) && small(self.t) && small(self.w * (1.0 - y) + self.p * y);
        let second = small(self.p) && small(self.w) && small(self.t * (1.0 - x) - self.q * x);
        small(self.r) && small(self.s) && self.p1_closed_form(tol) && (first || second)
    }

    /// Wootters concurrence of an even state,
    /// `2 max(0, |r| - √((x-z)(y-z)), |s| - √(z(1-x-y+z)))`.
    pub fn concurrence_closed_form(&self) -> f64 {
        let (x, y, z) = (self.x, self.y, self.z);
        let a = self.r.norm() - ((x - z) * (y - z)).max(0.0).sqrt();
        let b = self.s.norm() - (z * (1.0 - x - y + z)).max(0.0).sqrt();
        2.0 * a.max(b).max(0.0)
    }
}
