//! Exact computation of the center of Kostant's strongly commuting algebra
//! `R^μ(g)` as an affine scheme, together with its graded degeneration, its
//! symmetries and the linkage structure of `M_λ ⊗ V^μ`.
//!
//! The polynomial and matrix layers are generic over a [`Scalar`]; every
//! Lie-theoretic computation runs over exact rationals ([`Rational`]).

pub mod error;
pub mod exactalg;
pub mod hccenter;
pub mod kostant;
pub mod liecore;
pub mod sampling;
pub mod scalar;
pub mod verma;

pub use error::{Error, Result};
pub use scalar::{Domain, Scalar};

/// Arbitrary-precision rational; always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;
/// Multivariate polynomial with exact rational coefficients.
pub type Poly = exactalg::MPoly<Rational>;
/// Dense matrix of exact rationals.
pub type QMatrix = exactalg::Matrix<Rational>;
/// Floating-point polynomial, used only for rendering.
pub type PolyF64 = exactalg::MPoly<f64>;

/// Integer-to-rational shorthand.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
