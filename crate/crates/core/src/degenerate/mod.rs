//! Degenerate families and the alternative routes to them.
//!
//! Every function is generic over the ring `R` that carries λ: `Rational`
//! when λ is fixed, `Poly<Rational>` when λ is an indeterminate. Values that
//! also depend on `x` come back as `Poly<R>` in x; a concrete `x` is applied
//! afterwards by evaluation ([`XMode::apply`]).
//!
//! [`families`] holds the generating-function definitions, which are the
//! primary computation path. [`routes`] holds the independent formulas
//! (convolution, recursion, explicit sums, δ-expansion, Euler expansion and
//! the even-index double sum) used to cross-check them.

mod families;
mod routes;

use std::fmt;
use std::str::FromStr;

use crate::arith::{lambda_var, parse_rational, BiPoly, Poly, Pretty, Rational, Ring, Wire};
use crate::error::Error;

pub use families::*;
pub use routes::*;

pub(crate) use families::egf_power_columns;
pub(crate) use routes::{
    euler_via_t2_from, t2_even_convolution_from, t2_explicit_with, t2_poly_convolution_from,
    t2_poly_recursive_table_with, t2_via_delta_table_with,
};

/// How λ is treated: as an indeterminate, or fixed to a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LambdaMode {
    Symbolic,
    Concrete(Rational),
}

/// How x is treated in the polynomial families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XMode {
    Symbolic,
    Concrete(Rational),
}

fn parse_mode(s: &str) -> Result<Option<Rational>, Error> {
    if s == "symbolic" {
        Ok(None)
    } else {
        parse_rational(s).map(Some)
    }
}

impl FromStr for LambdaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(parse_mode(s)?.map_or(LambdaMode::Symbolic, LambdaMode::Concrete))
    }
}

impl FromStr for XMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(parse_mode(s)?.map_or(XMode::Symbolic, XMode::Concrete))
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Symbolic => f.write_str("symbolic"),
            LambdaMode::Concrete(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for XMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XMode::Symbolic => f.write_str("symbolic"),
            XMode::Concrete(v) => write!(f, "{v}"),
        }
    }
}

/// A ring that can stand in for λ.
pub trait LambdaRing: Ring + Pretty + Wire {
    /// Names of the indeterminates for `Poly<Self>` in x.
    const VARS: &'static [&'static str];

    fn into_lambda_poly(self) -> Poly<Rational>;

    /// Value at λ = 0. For `Rational` this is the value itself, so it is only
    /// meaningful when the fixed λ already is zero.
    fn at_lambda_zero(&self) -> Rational;
}

impl LambdaRing for Rational {
    const VARS: &'static [&'static str] = &["x"];

    fn into_lambda_poly(self) -> Poly<Rational> {
        Poly::constant(self)
    }

    fn at_lambda_zero(&self) -> Rational {
        self.clone()
    }
}

impl LambdaRing for Poly<Rational> {
    const VARS: &'static [&'static str] = &["x", "λ"];

    fn into_lambda_poly(self) -> Poly<Rational> {
        self
    }

    fn at_lambda_zero(&self) -> Rational {
        self.coeff(0)
    }
}

/// Work that is written once, generically, and run in whichever ring the
/// [`LambdaMode`] selects.
pub trait LambdaTask {
    type Output;
    fn run<R: LambdaRing>(self, lambda: &R) -> Self::Output;
}

impl LambdaMode {
    pub fn dispatch<T: LambdaTask>(&self, task: T) -> T::Output {
        match self {
            LambdaMode::Symbolic => task.run(&lambda_var()),
            LambdaMode::Concrete(v) => task.run(v),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LambdaMode::Concrete(v) if Ring::is_zero(v))
    }
}

impl XMode {
    /// Turns a polynomial in x into the canonical `(ℚ[λ])[x]` value,
    /// evaluating first when x is fixed.
    pub fn apply<R: LambdaRing>(&self, p: &Poly<R>) -> BiPoly {
        match self {
            XMode::Symbolic => p.map(|c| c.clone().into_lambda_poly()),
            XMode::Concrete(v) => Poly::constant(p.eval(&R::from_rational(v)).into_lambda_poly()),
        }
    }

    /// The same, staying in `R`.
    pub fn specialize<R: LambdaRing>(&self, p: &Poly<R>) -> Poly<R> {
        match self {
            XMode::Symbolic => p.clone(),
            XMode::Concrete(v) => Poly::constant(p.eval(&R::from_rational(v))),
        }
    }
}

#[cfg(test)]
mod tests;
