//! Left multiplication operators `M_eta(h) = eta * h`.
//!
//! `H_t` is a 4-dimensional real vector space in the coordinates
//! `(x, y, u, v)` of [`Hypercomplex::coords`], so each operator is stored as
//! the 4x4 real matrix of its action. The adjoint is `M_{conj(eta)}`.

use nalgebra::{Matrix4, Vector4};

use crate::error::Result;
use crate::ring::Hypercomplex;
use crate::scale::Scale;

/// Absolute tolerance for the operator predicates.
pub const PREDICATE_EPS: f64 = 1e-10;

/// `M_eta` together with its coordinate matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MulOperator {
    symbol: Hypercomplex,
    matrix4: Matrix4<f64>,
}

fn basis(scale: Scale) -> [Hypercomplex; 4] {
    [
        Hypercomplex::from_reals(1.0, 0.0, 0.0, 0.0, scale),
        Hypercomplex::from_reals(0.0, 1.0, 0.0, 0.0, scale),
        Hypercomplex::from_reals(0.0, 0.0, 1.0, 0.0, scale),
        Hypercomplex::from_reals(0.0, 0.0, 0.0, 1.0, scale),
    ]
}

impl MulOperator {
    /// Column `k` is `coords(eta * e_k)` for the basis
    /// `(1,0), (i,0), (0,1), (0,i)`.
    pub fn new(eta: Hypercomplex) -> Self {
        let mut matrix4 = Matrix4::zeros();
        for (k, e) in basis(eta.scale()).iter().enumerate() {
            // Same scale by construction.
            let col = eta.mul(e).expect("basis shares the symbol's scale");
            matrix4.set_column(k, &Vector4::from(col.coords()));
        }
        MulOperator {
            symbol: eta,
            matrix4,
        }
    }

    pub fn symbol(&self) -> &Hypercomplex {
        &self.symbol
    }

    pub fn matrix4(&self) -> &Matrix4<f64> {
        &self.matrix4
    }

    pub fn apply(&self, h: &Hypercomplex) -> Result<Hypercomplex> {
        self.symbol.scale().ensure_same(h.scale())?;
        let out = self.matrix4 * Vector4::from(h.coords());
        Ok(Hypercomplex::from_coords(out.into(), h.scale()))
    }

    /// `M_{conj(eta)}`.
    pub fn adjoint(&self) -> Self {
        MulOperator::new(self.symbol.conjugate())
    }

    /// `M_{eta1} M_{eta2} = M_{eta1 * eta2}`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(MulOperator::new(self.symbol.mul(&rhs.symbol)?))
    }

    pub fn sum(&self, rhs: &Self) -> Result<Self> {
        Ok(MulOperator::new(self.symbol.add(&rhs.symbol)?))
    }

    /// The semi-norm of the symbol.
    ///
    /// The product rule `||eta h|| = ||eta|| ||h||` makes this the supremum
    /// of `||M h||` over `||h|| = 1`. Symbols on the null cone give 0.
    pub fn norm(&self) -> f64 {
        self.symbol.seminorm()
    }

    /// Symbol is `(real, 0)`.
    pub fn is_self_adjoint(&self) -> bool {
        self.is_self_adjoint_with(PREDICATE_EPS)
    }

    pub fn is_self_adjoint_with(&self, eps: f64) -> bool {
        self.symbol.a().im.abs() <= eps && self.symbol.b().norm() <= eps
    }

    /// Symbol is `(0, 0)` or `(1, 0)`.
    pub fn is_projection(&self) -> bool {
        self.is_projection_with(PREDICATE_EPS)
    }

    pub fn is_projection_with(&self, eps: f64) -> bool {
        let [x, y, u, v] = self.symbol.coords();
        let rest = y.abs().max(u.abs()).max(v.abs());
        rest <= eps && (x.abs() <= eps || (x - 1.0).abs() <= eps)
    }

    /// Frobenius norm of `M* M - M M*` computed on the 4x4 matrices.
    pub fn commutator_norm(&self) -> f64 {
        let a = &self.matrix4;
        let a_star = self.adjoint().matrix4;
        (a_star * a - a * a_star).norm()
    }

    /// Checks `M* M = M M*` on the matrices rather than assuming it.
    pub fn is_normal(&self) -> bool {
        self.is_normal_with(PREDICATE_EPS)
    }

    pub fn is_normal_with(&self, eps: f64) -> bool {
        self.commutator_norm() <= eps * self.matrix4.norm_squared().max(1.0)
    }

    /// `|det(eta) - 1| <= eps`. On these operators unitarity and isometry coincide.
    pub fn is_unitary(&self) -> bool {
        self.is_unitary_with(PREDICATE_EPS)
    }

    pub fn is_unitary_with(&self, eps: f64) -> bool {
        (self.symbol.det() - 1.0).abs() <= eps
    }

    pub fn is_isometry(&self) -> bool {
        self.is_unitary()
    }
}
