//! Exact scalars and dense univariate polynomials.
//!
//! Everything downstream is written against the [`Ring`] trait so that the
//! same code runs with λ fixed to a rational ([`Rational`]), with λ as an
//! indeterminate (`Poly<Rational>`), or with an extra indeterminate `x` on
//! top (`Poly<Poly<Rational>>`, x outer and λ inner).

mod poly;
mod rational;
mod ring;
mod wire;

pub use poly::Poly;
pub use rational::{binomial, factorial, generalized_binomial, parse_rational, rational, Rational};
pub use ring::Ring;
pub use wire::{Pretty, Wire};

/// Polynomial in x whose coefficients are polynomials in λ.
pub type BiPoly = Poly<Poly<Rational>>;

/// The indeterminate λ as an element of ℚ[λ].
pub fn lambda_var() -> Poly<Rational> {
    Poly::var()
}

/// The indeterminate x as an element of (ℚ[λ])[x].
pub fn x_var() -> BiPoly {
    Poly::var()
}

/// The indeterminate λ embedded in (ℚ[λ])[x].
pub fn lambda_in_x() -> BiPoly {
    Poly::constant(Poly::var())
}
