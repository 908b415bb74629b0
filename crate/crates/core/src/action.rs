//! Left action of real 2x2 matrices on `D_t`.
//!
//! `A = [[a11, a12], [a21, a22]]` sends `x + y j` to
//! `(a11 x + a12 y) + (a21 x + a22 y) j`. The image is singular exactly when
//! `(a11 x + a12 y)^2 = t (a21 x + a22 y)^2`. For `t >= 0` this factors as
//!
//! ```text
//! ((a11 - s sqrt(t) a21) x + (a12 - s sqrt(t) a22) y) = 0,   s = +1 or -1,
//! ```
//!
//! so the singular points form at most two lines through the origin. For
//! `t < 0` only the zero vector is singular in `D_t`, and the image of a
//! nonzero point is singular only if `A` itself is.
//!
//! The spectral value of an image `(X, Y)` is `X + i sqrt(-t Y^2)` (or
//! `X - sqrt(t) |Y|` when `t > 0`), which is the general spectral value
//! restricted to real pairs. A squared first term `X^2` also appears in
//! print for this deformation formula; it is inconsistent with the general
//! definition and with the eigenvalues of the image's matrix, so it is not
//! used here.

use crate::error::{Error, Result};
use crate::hyperbolic::Hyperbolic;
use crate::ring::SINGULAR_EPS;
use crate::scale::{Regime, Scale};
use crate::spectral::{spectralize, SpectralValue};

/// Relative tolerance for degenerate coefficients in [`singular_directions`].
pub const LINE_EPS: f64 = 1e-12;

/// Real 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealMatrix2 {
    pub entries: [[f64; 2]; 2],
}

impl RealMatrix2 {
    pub fn new(entries: [[f64; 2]; 2]) -> Result<Self> {
        if entries.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("matrix entry"));
        }
        Ok(RealMatrix2 { entries })
    }

    pub fn from_rows(a11: f64, a12: f64, a21: f64, a22: f64) -> Result<Self> {
        Self::new([[a11, a12], [a21, a22]])
    }

    pub const fn identity() -> Self {
        RealMatrix2 {
            entries: [[1.0, 0.0], [0.0, 1.0]],
        }
    }

    pub fn det(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        let m = &self.entries;
        let n = &rhs.entries;
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = m[i][0] * n[0][j] + m[i][1] * n[1][j];
            }
        }
        RealMatrix2 { entries: out }
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|v| v.abs())
            .fold(0.0, f64::max)
    }

    /// A nonzero vector `v` with `A v = 0` when `A` is singular within
    /// `LINE_EPS`, taken orthogonal to the larger row. The zero matrix gives `(1, 0)`.
    pub fn kernel_vector(&self) -> Option<(f64, f64)> {
        let m = &self.entries;
        let scale = self.max_abs_entry();
        if scale == 0.0 {
            return Some((1.0, 0.0));
        }
        if self.det().abs() > LINE_EPS * scale * scale {
            return None;
        }
        let r0 = m[0][0].hypot(m[0][1]);
        let r1 = m[1][0].hypot(m[1][1]);
        let (p, q) = if r0 >= r1 {
            (m[0][0], m[0][1])
        } else {
            (m[1][0], m[1][1])
        };
        Some((-q, p))
    }
}

/// One line of singular directions through the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SingularLine {
    /// `y = s x`.
    SlopeThroughOrigin(f64),
    /// `x = 0`.
    VerticalAxis,
}

impl std::fmt::Display for SingularLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularLine::SlopeThroughOrigin(s) => write!(f, "y={s}x"),
            SingularLine::VerticalAxis => f.write_str("x=0"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DirectionRegime {
    /// Every image is singular, or (for `t < 0`) the answer depends only on
    /// whether `A` is singular.
    WholeSpaceIfSingularMatrix,
    /// The singular set is the union of `lines`.
    LinePair,
}

impl DirectionRegime {
    pub fn as_str(self) -> &'static str {
        match self {
            DirectionRegime::WholeSpaceIfSingularMatrix => "WholeSpaceIfSingularMatrix",
            DirectionRegime::LinePair => "LinePair",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularDirections {
    pub lines: Vec<SingularLine>,
    pub regime: DirectionRegime,
    pub matrix_det: f64,
}

/// `(a11 x + a12 y, a21 x + a22 y)` at the scale of `w`.
pub fn act(a: &RealMatrix2, w: &Hyperbolic) -> Hyperbolic {
    let m = &a.entries;
    Hyperbolic::new(
        m[0][0] * w.x + m[0][1] * w.y,
        m[1][0] * w.x + m[1][1] * w.y,
        w.scale(),
    )
}

pub fn image_invertible(a: &RealMatrix2, w: &Hyperbolic) -> bool {
    image_invertible_with(a, w, SINGULAR_EPS)
}

pub fn image_invertible_with(a: &RealMatrix2, w: &Hyperbolic, eps: f64) -> bool {
    !act(a, w).embed().is_singular_with(eps)
}

fn same_line(p: &SingularLine, q: &SingularLine, tol: f64) -> bool {
    match (p, q) {
        (SingularLine::VerticalAxis, SingularLine::VerticalAxis) => true,
        (SingularLine::SlopeThroughOrigin(s1), SingularLine::SlopeThroughOrigin(s2)) => {
            (s1 - s2).abs() <= tol * (1.0 + s1.abs().max(s2.abs()))
        }
        _ => false,
    }
}

/// Lines through the origin whose image lands on the null cone.
///
/// For `t < 0` the regime is always `WholeSpaceIfSingularMatrix`, with the
/// kernel line of `A` listed when `A` is singular.
pub fn singular_directions(a: &RealMatrix2, scale: Scale) -> SingularDirections {
    let m = &a.entries;
    let matrix_det = a.det();

    if scale.regime() == Regime::Negative {
        let lines = a
            .kernel_vector()
            .map(|(kx, ky)| {
                if kx == 0.0 {
                    SingularLine::VerticalAxis
                } else {
                    SingularLine::SlopeThroughOrigin(ky / kx)
                }
            })
            .into_iter()
            .collect();
        return SingularDirections {
            lines,
            regime: DirectionRegime::WholeSpaceIfSingularMatrix,
            matrix_det,
        };
    }

    let r = scale.sqrt_abs();
    let tol = LINE_EPS * a.max_abs_entry() * (1.0 + r);
    let mut regime = DirectionRegime::LinePair;
    let mut lines: Vec<SingularLine> = Vec::with_capacity(2);
    for sign in [1.0, -1.0] {
        let p = m[0][0] - sign * r * m[1][0];
        let q = m[0][1] - sign * r * m[1][1];
        let line = if q.abs() > tol {
            SingularLine::SlopeThroughOrigin(-p / q)
        } else if p.abs() > tol {
            SingularLine::VerticalAxis
        } else {
            regime = DirectionRegime::WholeSpaceIfSingularMatrix;
            continue;
        };
        if !lines.iter().any(|l| same_line(l, &line, LINE_EPS)) {
            lines.push(line);
        }
    }
    SingularDirections {
        lines,
        regime,
        matrix_det,
    }
}

/// Spectral value of the image `act(a, w)`.
pub fn image_spectral_value(a: &RealMatrix2, w: &Hyperbolic) -> SpectralValue {
    spectralize(&act(a, w).embed())
}
