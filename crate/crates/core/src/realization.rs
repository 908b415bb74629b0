//! The matrix image `[[a, t b], [conj(b), conj(a)]]` of `(a, b)`.
//!
//! The map is an injective ring homomorphism into 2x2 complex matrices, so
//! every closed form elsewhere in the crate can be checked by plain matrix
//! arithmetic on [`Realization2`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ring::Hypercomplex;
use crate::scale::Scale;

/// Entrywise tolerance (relative to the largest entry, floored at 1) for
/// accepting a matrix as the image of some element.
pub const SHAPE_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Realization2 {
    pub entries: [[Complex64; 2]; 2],
}

impl Realization2 {
    pub const fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Realization2 { entries }
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn diag(d0: Complex64, d1: Complex64) -> Self {
        Self::new([[d0, ZERO], [ZERO, d1]])
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// Ordinary matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Self) -> Self {
        let m = &self.entries;
        let n = &rhs.entries;
        let mut out = [[ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = m[i][0] * n[0][j] + m[i][1] * n[1][j];
            }
        }
        Self::new(out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.entries;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell += rhs.entries[i][j];
            }
        }
        Self::new(out)
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    /// `[[d, -b], [-c, a]]` for `[[a, b], [c, d]]`.
    ///
    /// On images this is the conjugation `J`: `adjugate([h]) = [conj(h)]`.
    pub fn adjugate(&self) -> Self {
        let m = &self.entries;
        Self::new([[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]])
    }

    /// `None` when the determinant is exactly zero.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == ZERO {
            return None;
        }
        let adj = self.adjugate();
        let mut out = adj.entries;
        for row in out.iter_mut() {
            for cell in row.iter_mut() {
                *cell /= d;
            }
        }
        Some(Self::new(out))
    }

    /// `q^{-1} * self * q`, or `None` if `q` has zero determinant.
    pub fn conjugated_by(&self, q: &Self) -> Option<Self> {
        Some(q.inverse()?.matmul(self).matmul(q))
    }

    /// Both roots of `z^2 - tr(m) z + det(m)`.
    ///
    /// Uses `tr/2 +- sqrt(((m00 - m11)/2)^2 + m01 m10)`, which is the
    /// quadratic formula with the discriminant `(tr/2)^2 - det` expanded so
    /// that the `(Re a)^2` terms cancel symbolically rather than numerically.
    /// The square root is the principal branch; the pair is unordered.
    pub fn eigenvalues(&self) -> (Complex64, Complex64) {
        let m = &self.entries;
        let half_trace = (m[0][0] + m[1][1]) * 0.5;
        let half_diff = (m[0][0] - m[1][1]) * 0.5;
        let root = (half_diff * half_diff + m[0][1] * m[1][0]).sqrt();
        (half_trace + root, half_trace - root)
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(p, q)| (p - q).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Mul for Realization2 {
    type Output = Realization2;

    fn mul(self, rhs: Realization2) -> Realization2 {
        self.matmul(&rhs)
    }
}

/// `[[a, t b], [conj(b), conj(a)]]`.
pub fn realize(h: &Hypercomplex) -> Realization2 {
    let (a, b) = (h.a(), h.b());
    Realization2::new([[a, b * h.t()], [b.conj(), a.conj()]])
}

/// Pulls a matrix back to `(m00, conj(m10))` at scale `t`.
///
/// Fails with [`Error::NotInRealization`] unless `m11 = conj(m00)` and
/// `m01 = t conj(m10)` within [`SHAPE_TOL`].
pub fn unrealize(m: &Realization2, scale: Scale) -> Result<Hypercomplex> {
    let a = m.get(0, 0);
    let b = m.get(1, 0).conj();
    let tol = SHAPE_TOL * m.max_abs_entry().max(1.0);
    let shape_ok =
        (m.get(1, 1) - a.conj()).norm() <= tol && (m.get(0, 1) - b * scale.value()).norm() <= tol;
    if !shape_ok {
        return Err(Error::NotInRealization {
            scale: scale.value(),
        });
    }
    Hypercomplex::try_new(a, b, scale)
}

impl Hypercomplex {
    pub fn realize(&self) -> Realization2 {
        realize(self)
    }
}
