//! The real scale parameter selecting a ring.

use crate::error::{Error, Result};

/// Sign class of a scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Negative,
    Zero,
    Positive,
}

/// A finite real scale `t`.
///
/// `-0.0` is normalized to `0.0`, so equality of two scales is equality of
/// their bit patterns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scale(f64);

impl Scale {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::InvalidScale(t));
        }
        Ok(Scale(if t == 0.0 { 0.0 } else { t }))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Determined by the sign of `t`, with no tolerance.
    pub fn regime(self) -> Regime {
        if self.0 < 0.0 {
            Regime::Negative
        } else if self.0 > 0.0 {
            Regime::Positive
        } else {
            Regime::Zero
        }
    }

    /// `sqrt(|t|)`.
    #[inline]
    pub fn sqrt_abs(self) -> f64 {
        self.0.abs().sqrt()
    }

    pub(crate) fn ensure_same(self, other: Scale) -> Result<()> {
        if self.0.to_bits() == other.0.to_bits() {
            Ok(())
        } else {
            Err(Error::ScaleMismatch {
                left: self.0,
                right: other.0,
            })
        }
    }
}

impl TryFrom<f64> for Scale {
    type Error = Error;

    fn try_from(t: f64) -> Result<Self> {
        Scale::new(t)
    }
}

impl std::fmt::Display for Scale {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
