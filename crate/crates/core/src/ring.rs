//! Arithmetic in the scaled hypercomplex ring `H_t`.
//!
//! An element is a pair `(a, b)` of complex numbers tagged with its scale.
//! Binary operations require both operands to carry bitwise-equal scales and
//! report [`Error::ScaleMismatch`] otherwise.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scale::Scale;

/// Relative threshold below which `|det|` counts as zero.
///
/// An element is singular when `|det(h)| <= SINGULAR_EPS * (1 + |a|^2 + |b|^2)`.
pub const SINGULAR_EPS: f64 = 1e-10;

/// Invertible (group part) or singular (semigroup part plus zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    Invertible,
    Singular,
}

/// Which side of the `Im(a)^2` vs `t |b|^2` split an element falls on.
///
/// `Plus` elements have a non-real spectrum; `MinusZero` elements have a real one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectralSide {
    Plus,
    MinusZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub part: Part,
    pub spectral_side: SpectralSide,
}

/// An element `(a, b)` of `H_t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hypercomplex {
    a: Complex64,
    b: Complex64,
    scale: Scale,
}

impl Hypercomplex {
    /// Builds `(a, b)` at scale `t`. Components are taken as given; use
    /// [`Hypercomplex::try_new`] for untrusted input.
    pub const fn new(a: Complex64, b: Complex64, scale: Scale) -> Self {
        Hypercomplex { a, b, scale }
    }

    /// Like [`Hypercomplex::new`] but rejects NaN and infinite components.
    pub fn try_new(a: Complex64, b: Complex64, scale: Scale) -> Result<Self> {
        if [a.re, a.im, b.re, b.im].iter().all(|v| v.is_finite()) {
            Ok(Self::new(a, b, scale))
        } else {
            Err(Error::NonFinite("hypercomplex component"))
        }
    }

    /// `(x + y i, u + v i)`.
    pub const fn from_reals(x: f64, y: f64, u: f64, v: f64, scale: Scale) -> Self {
        Self::new(Complex64::new(x, y), Complex64::new(u, v), scale)
    }

    /// Inverse of [`Hypercomplex::coords`].
    pub const fn from_coords(c: [f64; 4], scale: Scale) -> Self {
        Self::from_reals(c[0], c[1], c[2], c[3], scale)
    }

    pub const fn zero(scale: Scale) -> Self {
        Self::from_reals(0.0, 0.0, 0.0, 0.0, scale)
    }

    pub const fn one(scale: Scale) -> Self {
        Self::from_reals(1.0, 0.0, 0.0, 0.0, scale)
    }

    /// The element `(0, 1)`, whose square is `(t, 0)`.
    pub const fn j(scale: Scale) -> Self {
        Self::from_reals(0.0, 0.0, 1.0, 0.0, scale)
    }

    /// A real number `r` embedded as `(r, 0)`.
    pub const fn real(r: f64, scale: Scale) -> Self {
        Self::from_reals(r, 0.0, 0.0, 0.0, scale)
    }

    #[inline]
    pub fn a(&self) -> Complex64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> Complex64 {
        self.b
    }

    #[inline]
    pub fn scale(&self) -> Scale {
        self.scale
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.scale.value()
    }

    /// Real coordinates `[x, y, u, v]` with `a = x + y i`, `b = u + v i`.
    #[inline]
    pub fn coords(&self) -> [f64; 4] {
        [self.a.re, self.a.im, self.b.re, self.b.im]
    }

    /// `|a|^2 + |b|^2`.
    #[inline]
    pub fn frobenius_sq(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn is_finite(&self) -> bool {
        self.coords().iter().all(|v| v.is_finite())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.scale.ensure_same(other.scale)?;
        Ok(Self::new(self.a + other.a, self.b + other.b, self.scale))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.scale.ensure_same(other.scale)?;
        Ok(Self::new(self.a - other.a, self.b - other.b, self.scale))
    }

    /// `(a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.scale.ensure_same(other.scale)?;
        let t = self.t();
        let a = self.a * other.a + self.b * other.b.conj() * t;
        let b = self.a * other.b + self.b * other.a.conj();
        Ok(Self::new(a, b, self.scale))
    }

    /// Multiplication by a real scalar.
    pub fn scale_by(&self, r: f64) -> Self {
        Self::new(self.a * r, self.b * r, self.scale)
    }

    /// The hypercomplex conjugate `(conj(a), -b)`.
    ///
    /// An involutive anti-automorphism: `conj(h1 h2) = conj(h2) conj(h1)`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.conj(), -self.b, self.scale)
    }

    /// `|a|^2 - t |b|^2`, the determinant of the matrix image.
    pub fn det(&self) -> f64 {
        self.a.norm_sqr() - self.t() * self.b.norm_sqr()
    }

    pub fn is_singular_with(&self, eps: f64) -> bool {
        self.det().abs() <= eps * (1.0 + self.frobenius_sq())
    }

    pub fn is_singular(&self) -> bool {
        self.is_singular_with(SINGULAR_EPS)
    }

    /// `(conj(a) / d, -b / d)` with `d = det(h)`.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with(SINGULAR_EPS)
    }

    pub fn inverse_with(&self, eps: f64) -> Result<Self> {
        let d = self.det();
        if self.is_singular_with(eps) {
            return Err(Error::SingularElement { det: d });
        }
        Ok(Self::new(self.a.conj() / d, -self.b / d, self.scale))
    }

    pub fn classify(&self) -> Classification {
        self.classify_with(SINGULAR_EPS)
    }

    pub fn classify_with(&self, eps: f64) -> Classification {
        let part = if self.is_singular_with(eps) {
            Part::Singular
        } else {
            Part::Invertible
        };
        let spectral_side = if self.a.im * self.a.im > self.t() * self.b.norm_sqr() {
            SpectralSide::Plus
        } else {
            SpectralSide::MinusZero
        };
        Classification {
            part,
            spectral_side,
        }
    }

    /// The trace functional `Re(a)`.
    #[inline]
    pub fn trace_tau(&self) -> f64 {
        self.a.re
    }

    /// `tau(h1 * conj(h2)) = Re(a1 conj(a2) - t b1 conj(b2))`.
    ///
    /// Symmetric and real-bilinear; definite for `t < 0`, indefinite otherwise.
    pub fn form(&self, other: &Self) -> Result<f64> {
        self.scale.ensure_same(other.scale)?;
        Ok((self.a * other.a.conj()).re - self.t() * (self.b * other.b.conj()).re)
    }

    /// `sqrt(|form(h, h)|) = sqrt(|det(h)|)`. Vanishes on the null cone.
    pub fn seminorm(&self) -> f64 {
        self.det().abs().sqrt()
    }
}

impl std::ops::Neg for Hypercomplex {
    type Output = Hypercomplex;

    fn neg(self) -> Hypercomplex {
        Hypercomplex::new(-self.a, -self.b, self.scale)
    }
}
