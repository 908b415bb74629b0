//! Scale-parameterized hypercomplex rings.
//!
//! For a real scale `t`, the ring `H_t` is the set of complex pairs `(a, b)`
//! with componentwise addition and the product
//!
//! ```text
//! (a1, b1) * (a2, b2) = (a1 a2 + t b1 conj(b2),  a1 b2 + b1 conj(a2))
//! ```
//!
//! `t = -1` gives the quaternions, `t = 1` the split-quaternions and `t = 0`
//! a degenerate ring with a nilpotent direction. Every element has a faithful
//! 2x2 complex matrix image `[[a, t b], [conj(b), conj(a)]]`, and the
//! [`realization`] module uses that image as a brute-force oracle for the
//! closed forms implemented elsewhere in the crate.
//!
//! Module map:
//!
//! * [`scale`] and [`ring`]: the scale parameter, arithmetic, conjugation,
//!   determinant, inverse, trace, the indefinite bilinear form and semi-norm.
//! * [`realization`]: the 2x2 complex matrix representation.
//! * [`spectral`]: spectral values, spectral forms and similarity witnesses.
//! * [`operators`]: left multiplication operators as 4x4 real matrices.
//! * [`freeprob`]: trace moments of words in an operator and its adjoint.
//! * [`hyperbolic`]: the real subring `x + y j` with `j^2 = t`, its unit
//!   sets, exponentials and polar decompositions.
//! * [`action`]: the linear action of real 2x2 matrices on the hyperbolic
//!   plane.
//!
//! ```
//! use num_complex::Complex64;
//! use scaled_hypercomplex::{Hypercomplex, Scale};
//!
//! let t = Scale::new(-1.0).unwrap();
//! let i = Hypercomplex::new(Complex64::i(), Complex64::new(0.0, 0.0), t);
//! let j = Hypercomplex::j(t);
//! let k = i.mul(&j).unwrap();
//! assert_eq!(k.b(), Complex64::i());
//! ```

pub mod action;
mod error;
pub mod freeprob;
pub mod hyperbolic;
pub mod operators;
pub mod realization;
pub mod ring;
pub mod scale;
pub mod spectral;

pub use error::{Error, Result};
pub use hyperbolic::Hyperbolic;
pub use realization::Realization2;
pub use ring::{Classification, Hypercomplex, Part, SpectralSide};
pub use scale::{Regime, Scale};
