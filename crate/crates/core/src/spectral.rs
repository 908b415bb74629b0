//! Spectral values, spectral forms and similarity witnesses.
//!
//! For `h = (x + y i, u + v i)` put `R = y^2 - t (u^2 + v^2)`. The spectral
//! value of `h` is
//!
//! * `a` itself when `b = 0`,
//! * `x + i sqrt(R)` when `R >= 0` (a complex eigenvalue of `[h]` with
//!   non-negative imaginary part),
//! * `x - sqrt(-R)` when `R < 0` (the smaller real eigenvalue).
//!
//! The spectral form is the diagonal matrix `diag(s, s*)` where `s*` is the
//! ordinary conjugate on the complex branch and `x + sqrt(-R)` on the real
//! branch.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::realization::{realize, Realization2};
use crate::ring::Hypercomplex;
use crate::scale::Regime;

/// `b` counts as zero when `|b| <= B_ZERO_EPS * (1 + |a|)`.
pub const B_ZERO_EPS: f64 = 1e-12;

/// Relative tolerance for comparing spectral values.
pub const RELATED_EPS: f64 = 1e-10;

/// Residual bound (relative to `1 + |h|`) a similarity witness must meet.
pub const WITNESS_EPS: f64 = 1e-9;

/// Which formula produced a spectral value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `R >= 0` (or `b = 0`): the value has non-negative imaginary part, or is `a`.
    ComplexBranch,
    /// `R < 0`: the value is the real number `x - sqrt(-R)`.
    RealMinusBranch,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralValue {
    pub value: Complex64,
    pub branch: Branch,
}

/// The diagonal pair `(s, s*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralForm {
    pub diag: (Complex64, Complex64),
}

impl SpectralForm {
    pub fn to_realization(&self) -> Realization2 {
        Realization2::diag(self.diag.0, self.diag.1)
    }
}

#[inline]
fn b_is_zero(h: &Hypercomplex) -> bool {
    h.b().norm() <= B_ZERO_EPS * (1.0 + h.a().norm())
}

/// `y^2 - t |b|^2`.
#[inline]
pub fn discriminant(h: &Hypercomplex) -> f64 {
    let y = h.a().im;
    y * y - h.t() * h.b().norm_sqr()
}

pub fn spectralize(h: &Hypercomplex) -> SpectralValue {
    if b_is_zero(h) {
        return SpectralValue {
            value: h.a(),
            branch: Branch::ComplexBranch,
        };
    }
    let x = h.a().re;
    let r = discriminant(h);
    if r >= 0.0 {
        SpectralValue {
            value: Complex64::new(x, r.sqrt()),
            branch: Branch::ComplexBranch,
        }
    } else {
        SpectralValue {
            value: Complex64::new(x - (-r).sqrt(), 0.0),
            branch: Branch::RealMinusBranch,
        }
    }
}

pub fn spectral_form(h: &Hypercomplex) -> SpectralForm {
    let sv = spectralize(h);
    let second = match sv.branch {
        Branch::ComplexBranch => sv.value.conj(),
        // x + sqrt(-R) = 2x - (x - sqrt(-R))
        Branch::RealMinusBranch => Complex64::new(2.0 * h.a().re - sv.value.re, 0.0),
    };
    SpectralForm {
        diag: (sv.value, second),
    }
}

/// The unordered eigenvalue pair `{x + i sqrt(R), x - i sqrt(R)}` of `[h]`,
/// with `sqrt(R) = i sqrt(-R)` when `R < 0`.
pub fn spectrum(h: &Hypercomplex) -> (Complex64, Complex64) {
    let x = h.a().re;
    let r = discriminant(h);
    if r >= 0.0 {
        let s = r.sqrt();
        (Complex64::new(x, s), Complex64::new(x, -s))
    } else {
        let s = (-r).sqrt();
        (Complex64::new(x - s, 0.0), Complex64::new(x + s, 0.0))
    }
}

/// Whether `h1` and `h2` share a spectral value.
pub fn spectral_related(h1: &Hypercomplex, h2: &Hypercomplex) -> Result<bool> {
    h1.scale().ensure_same(h2.scale())?;
    let s1 = spectralize(h1).value;
    let s2 = spectralize(h2).value;
    let tol = RELATED_EPS * (1.0 + s1.norm().max(s2.norm()));
    Ok((s1 - s2).norm() <= tol)
}

/// Candidate `q` with `[q]^{-1} [h] [q] = diag(s, s*)`, from the closed form
/// `q = (1, conj((s - a) / (t b)))`.
///
/// Returns `Ok(Some(q))` only after checking the conjugation numerically.
/// `Ok(None)` means the formula produced a singular `q` or the check failed;
/// this is expected on parts of `t >= 0` where `[h]` is not diagonalizable to
/// its spectral form. For `b = 0` the witness is the unit.
pub fn similarity_witness(h: &Hypercomplex) -> Result<Option<Hypercomplex>> {
    let scale = h.scale();
    if b_is_zero(h) {
        return Ok(Some(Hypercomplex::one(scale)));
    }
    if scale.regime() == Regime::Zero {
        return Err(Error::ZeroDivisor);
    }

    // For R < 0 the principal sqrt makes x + i sqrt(R) real, equal to the
    // spectral value itself.
    let x = h.a().re;
    let w = Complex64::new(x, 0.0) + Complex64::i() * Complex64::new(discriminant(h), 0.0).sqrt();
    let c = ((w - h.a()) / (h.b() * h.t())).conj();
    let q = Hypercomplex::new(Complex64::new(1.0, 0.0), c, scale);

    if !c.re.is_finite() || !c.im.is_finite() || q.is_singular() {
        return Ok(None);
    }
    let Some(conjugated) = realize(h).conjugated_by(&realize(&q)) else {
        return Ok(None);
    };
    let target = spectral_form(h).to_realization();
    let tol = WITNESS_EPS * (1.0 + h.frobenius_sq().sqrt());
    if conjugated.max_abs_diff(&target) <= tol {
        Ok(Some(q))
    } else {
        Ok(None)
    }
}

impl Hypercomplex {
    pub fn spectral_value(&self) -> SpectralValue {
        spectralize(self)
    }
}
