//! The hyperbolic subring `D_t = { x + y j : x, y real }` with `j^2 = t`.
//!
//! `D_{-1}` is the complex numbers, `D_0` the dual numbers and `D_1` the
//! classical hyperbolic (split-complex) numbers. Inside `H_t` the element
//! `x + y j` is `(x, y)` with both components real, and its matrix image is
//! `[[x, t y], [y, x]]`.
//!
//! The exponential `e^{j theta}` is `(cosh(sqrt(t) theta), sinh(sqrt(t) theta) / sqrt(t))`
//! for `t > 0`, `(cos(sqrt(|t|) theta), sin(sqrt(|t|) theta) / sqrt(|t|))` for
//! `t < 0`, and `(1, theta)` for `t = 0`. Each has semi-norm one.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ring::Hypercomplex;
use crate::scale::{Regime, Scale};

/// Relative tolerance for unit-set membership.
pub const UNIT_EPS: f64 = 1e-12;

/// Imaginary parts up to this size (relative to `1 + |h|`) are dropped when
/// projecting an element of `H_t` into `D_t`.
pub const PROJECT_EPS: f64 = 1e-12;

/// `x + y j` at scale `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyperbolic {
    pub x: f64,
    pub y: f64,
    scale: Scale,
}

impl Hyperbolic {
    pub const fn new(x: f64, y: f64, scale: Scale) -> Self {
        Hyperbolic { x, y, scale }
    }

    pub const fn one(scale: Scale) -> Self {
        Self::new(1.0, 0.0, scale)
    }

    /// `j` itself.
    pub const fn j(scale: Scale) -> Self {
        Self::new(0.0, 1.0, scale)
    }

    #[inline]
    pub fn scale(&self) -> Scale {
        self.scale
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.scale.value()
    }

    /// `(x + 0i, y + 0i)` in `H_t`.
    pub fn embed(&self) -> Hypercomplex {
        Hypercomplex::from_reals(self.x, 0.0, self.y, 0.0, self.scale)
    }

    /// `Some` when both components of `h` are real within [`PROJECT_EPS`].
    pub fn project(h: &Hypercomplex) -> Option<Self> {
        let [x, y, u, v] = h.coords();
        let tol = PROJECT_EPS * (1.0 + h.frobenius_sq().sqrt());
        (y.abs() <= tol && v.abs() <= tol).then(|| Self::new(x, u, h.scale()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.scale.ensure_same(other.scale)?;
        Ok(Self::new(self.x + other.x, self.y + other.y, self.scale))
    }

    /// `(x1 x2 + t y1 y2, x1 y2 + y1 x2)`; commutative.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.scale.ensure_same(other.scale)?;
        Ok(Self::new(
            self.x * other.x + self.t() * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.scale,
        ))
    }

    pub fn scale_by(&self, r: f64) -> Self {
        Self::new(self.x * r, self.y * r, self.scale)
    }

    /// `x^2 - t y^2`.
    pub fn det(&self) -> f64 {
        self.x * self.x - self.t() * self.y * self.y
    }

    pub fn seminorm(&self) -> f64 {
        self.det().abs().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

/// Product in `D_t`.
pub fn hmul(w1: &Hyperbolic, w2: &Hyperbolic) -> Result<Hyperbolic> {
    w1.mul(w2)
}

/// `j^n`: `(t^{n/2}, 0)` for even `n`, `(0, t^{(n-1)/2})` for odd `n`.
pub fn jt_power(n: u32, scale: Scale) -> Result<Hyperbolic> {
    if n == 0 {
        return Err(Error::InvalidArgument("j power needs n >= 1".into()));
    }
    Ok(j_power_unchecked(n, scale))
}

fn j_power_unchecked(n: u32, scale: Scale) -> Hyperbolic {
    let t = scale.value();
    let half = (n / 2) as i32;
    if n.is_multiple_of(2) {
        Hyperbolic::new(t.powi(half), 0.0, scale)
    } else {
        Hyperbolic::new(0.0, t.powi(half), scale)
    }
}

/// Partial sum `sum_{n < terms} (j theta)^n / n!`.
///
/// The even terms build `sum t^k theta^{2k} / (2k)!` and the odd terms
/// `sum_{k >= 1} t^{k-1} theta^{2k-1} / (2k-1)!`.
pub fn exp_jt_series(theta: f64, scale: Scale, terms: u32) -> Result<Hyperbolic> {
    if terms == 0 {
        return Err(Error::InvalidArgument(
            "series needs at least one term".into(),
        ));
    }
    let mut x = 0.0;
    let mut y = 0.0;
    // theta^n / n!
    let mut coeff = 1.0;
    for n in 0..terms {
        if n > 0 {
            coeff *= theta / f64::from(n);
        }
        let p = j_power_unchecked(n, scale);
        x += coeff * p.x;
        y += coeff * p.y;
    }
    Ok(Hyperbolic::new(x, y, scale))
}

/// Closed form of `e^{j theta}`.
pub fn exp_jt(theta: f64, scale: Scale) -> Hyperbolic {
    let r = scale.sqrt_abs();
    match scale.regime() {
        Regime::Positive => {
            let arg = r * theta;
            Hyperbolic::new(arg.cosh(), arg.sinh() / r, scale)
        }
        Regime::Negative => {
            let arg = r * theta;
            Hyperbolic::new(arg.cos(), arg.sin() / r, scale)
        }
        Regime::Zero => Hyperbolic::new(1.0, theta, scale),
    }
}

/// `| |x^2 - t y^2| - 1 |` within [`UNIT_EPS`] (relative to `x^2 + |t| y^2`).
pub fn unit_set_membership(w: &Hyperbolic) -> bool {
    unit_set_membership_with(w, UNIT_EPS)
}

pub fn unit_set_membership_with(w: &Hyperbolic, eps: f64) -> bool {
    let magnitude = w.x * w.x + w.t().abs() * w.y * w.y;
    (w.det().abs() - 1.0).abs() <= eps * magnitude.max(1.0)
}

/// Which piece of the unit set a sample lies on.
///
/// `Upper`/`Lower` are the `y >= 0` / `y <= 0` halves of the curve
/// parameterized by `x` (`x^2 - t y^2 = 1` for `t < 0`, `= -1` for `t > 0`).
/// `Right`/`Left` are the `x > 0` / `x < 0` pieces parameterized by `y`
/// (the lines `x = +-1` for `t = 0`, the branches of `x^2 - t y^2 = 1` for
/// `t > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitBranch {
    Upper,
    Lower,
    Right,
    Left,
}

impl UnitBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            UnitBranch::Upper => "upper",
            UnitBranch::Lower => "lower",
            UnitBranch::Right => "right",
            UnitBranch::Left => "left",
        }
    }

    /// Branches present for a regime, in emission order.
    pub fn for_regime(regime: Regime) -> &'static [UnitBranch] {
        match regime {
            Regime::Negative => &[UnitBranch::Upper, UnitBranch::Lower],
            Regime::Zero => &[UnitBranch::Right, UnitBranch::Left],
            Regime::Positive => &[
                UnitBranch::Upper,
                UnitBranch::Lower,
                UnitBranch::Right,
                UnitBranch::Left,
            ],
        }
    }
}

impl std::fmt::Display for UnitBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSample {
    pub point: Hyperbolic,
    pub branch: UnitBranch,
}

fn linspace(lo: f64, hi: f64, k: usize) -> impl Iterator<Item = f64> {
    (0..k).map(move |i| {
        if k == 1 {
            0.5 * (lo + hi)
        } else if i == k - 1 {
            hi
        } else {
            lo + (hi - lo) * (i as f64) / ((k - 1) as f64)
        }
    })
}

/// Deterministic samples of the unit set, `count` points in total, split
/// as evenly as possible across the branches of the regime.
///
/// The free parameter runs over `[lo, hi]`: `x` on `Upper`/`Lower` (clipped
/// to `[-1, 1]` when `t < 0`) and `y` on `Right`/`Left`.
pub fn sample_unit_set(scale: Scale, count: usize, lo: f64, hi: f64) -> Result<Vec<UnitSample>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let (lo, hi) = if scale.regime() == Regime::Negative {
        (lo.max(-1.0), hi.min(1.0))
    } else {
        (lo, hi)
    };
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::EmptyRange { lo, hi });
    }

    let t = scale.value();
    let branches = UnitBranch::for_regime(scale.regime());
    let per = count / branches.len();
    let extra = count % branches.len();
    let mut out = Vec::with_capacity(count);
    for (k, &branch) in branches.iter().enumerate() {
        let n = per + usize::from(k < extra);
        for p in linspace(lo, hi, n) {
            let (x, y) = match (scale.regime(), branch) {
                (Regime::Negative, UnitBranch::Upper) => (p, ((1.0 - p * p) / t.abs()).sqrt()),
                (Regime::Negative, UnitBranch::Lower) => (p, -((1.0 - p * p) / t.abs()).sqrt()),
                (Regime::Zero, UnitBranch::Right) => (1.0, p),
                (Regime::Zero, UnitBranch::Left) => (-1.0, p),
                (Regime::Positive, UnitBranch::Upper) => (p, ((p * p + 1.0) / t).sqrt()),
                (Regime::Positive, UnitBranch::Lower) => (p, -((p * p + 1.0) / t).sqrt()),
                (Regime::Positive, UnitBranch::Right) => ((1.0 + t * p * p).sqrt(), p),
                (Regime::Positive, UnitBranch::Left) => (-(1.0 + t * p * p).sqrt(), p),
                _ => unreachable!("branch not emitted for this regime"),
            };
            out.push(UnitSample {
                point: Hyperbolic::new(x, y, scale),
                branch,
            });
        }
    }
    Ok(out)
}

/// Unit factor in front of `radius * e^{j angle}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    /// `1`
    PosReal,
    /// `-1`
    NegReal,
    /// `j / sqrt(t)`
    PosImag,
    /// `-j / sqrt(t)`
    NegImag,
}

impl Sector {
    pub fn as_str(self) -> &'static str {
        match self {
            Sector::PosReal => "pos_real",
            Sector::NegReal => "neg_real",
            Sector::PosImag => "pos_imag",
            Sector::NegImag => "neg_imag",
        }
    }

    pub fn unit(self, scale: Scale) -> Hyperbolic {
        match self {
            Sector::PosReal => Hyperbolic::new(1.0, 0.0, scale),
            Sector::NegReal => Hyperbolic::new(-1.0, 0.0, scale),
            Sector::PosImag => Hyperbolic::new(0.0, 1.0 / scale.sqrt_abs(), scale),
            Sector::NegImag => Hyperbolic::new(0.0, -1.0 / scale.sqrt_abs(), scale),
        }
    }
}

/// `w = unit(sector) * radius * e^{j angle}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarDecomposition {
    pub radius: f64,
    pub angle: f64,
    pub sector: Sector,
    pub scale: Scale,
}

impl PolarDecomposition {
    pub fn recompose(&self) -> Hyperbolic {
        let e = exp_jt(self.angle, self.scale).scale_by(self.radius);
        self.sector
            .unit(self.scale)
            .mul(&e)
            .expect("components share one scale")
    }
}

/// Splits an off-cone element into sector unit, semi-norm and angle.
///
/// * `t < 0`: circular angle in `[0, 2 pi / sqrt(|t|))`, sector `PosReal`.
/// * `t = 0`: `radius = |x|`, `angle = y / x`, sector by the sign of `x`.
/// * `t > 0`: hyperbolic angle; the sector is picked by whether `x^2` or
///   `t y^2` dominates and by the sign of the dominant coordinate.
///
/// Fails with [`Error::NullCone`] on singular elements (including zero).
pub fn polar_decompose(w: &Hyperbolic) -> Result<PolarDecomposition> {
    let scale = w.scale();
    if w.embed().is_singular() {
        return Err(Error::NullCone);
    }
    let radius = w.seminorm();
    let (angle, sector) = match scale.regime() {
        Regime::Negative => {
            let r = scale.sqrt_abs();
            let mut phi = (r * w.y).atan2(w.x);
            if phi < 0.0 {
                phi += TAU;
            }
            if phi >= TAU {
                phi -= TAU;
            }
            (phi / r, Sector::PosReal)
        }
        Regime::Zero => {
            let sector = if w.x > 0.0 {
                Sector::PosReal
            } else {
                Sector::NegReal
            };
            (w.y / w.x, sector)
        }
        Regime::Positive => {
            let r = scale.sqrt_abs();
            if w.det() > 0.0 {
                let sector = if w.x > 0.0 {
                    Sector::PosReal
                } else {
                    Sector::NegReal
                };
                ((r * w.y / w.x).atanh() / r, sector)
            } else {
                let sector = if w.y > 0.0 {
                    Sector::PosImag
                } else {
                    Sector::NegImag
                };
                ((w.x / (r * w.y)).atanh() / r, sector)
            }
        }
    };
    Ok(PolarDecomposition {
        radius,
        angle,
        sector,
        scale,
    })
}

impl Hyperbolic {
    /// The spectral value `x + i sqrt(-t y^2)` (or `x - sqrt(t) |y|` for `t > 0`).
    pub fn spectral_value(&self) -> Complex64 {
        crate::spectral::spectralize(&self.embed()).value
    }
}
