//! Wire and display formats.
//!
//! A rational travels as the string `"p/q"` (`"p"` when `q = 1`); a polynomial
//! as a JSON array of its coefficients, index = power, so `(ℚ[λ])[x]` values
//! become nested arrays.

use serde_json::Value;

use super::{parse_rational, Poly, Rational, Ring};
use crate::error::{Error, Result};

pub trait Wire: Sized {
    fn to_wire(&self) -> Value;
    fn from_wire(v: &Value) -> Result<Self>;

    fn to_wire_string(&self) -> String {
        self.to_wire().to_string()
    }

    fn from_wire_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Wire(e.to_string()))?;
        Self::from_wire(&v)
    }
}

impl Wire for Rational {
    fn to_wire(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_wire(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            other => Err(Error::Wire(format!(
                "expected rational string, got {other}"
            ))),
        }
    }
}

impl<R: Ring + Wire> Wire for Poly<R> {
    fn to_wire(&self) -> Value {
        Value::Array(self.coeffs().iter().map(Wire::to_wire).collect())
    }

    fn from_wire(v: &Value) -> Result<Self> {
        match v {
            Value::Array(items) => Ok(Poly::from_coeffs(
                items.iter().map(R::from_wire).collect::<Result<_>>()?,
            )),
            other => Err(Error::Wire(format!(
                "expected coefficient array, got {other}"
            ))),
        }
    }
}

/// Human-readable rendering; `vars[0]` names the outermost indeterminate.
pub trait Pretty {
    fn pretty(&self, vars: &[&str]) -> String;

    /// Whether the rendering is a single product and needs no parentheses.
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Pretty for Rational {
    fn pretty(&self, _vars: &[&str]) -> String {
        self.to_string()
    }
}

impl<R: Ring + Pretty> Pretty for Poly<R> {
    fn pretty(&self, vars: &[&str]) -> String {
        let (var, rest) = match vars.split_first() {
            Some((v, rest)) => (*v, rest),
            None => ("?", &[][..]),
        };
        let mut terms = Vec::new();
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coeff = c.pretty(rest);
            let coeff = if c.is_atomic() {
                coeff
            } else {
                format!("({coeff})")
            };
            terms.push(match (i, coeff.as_str()) {
                (0, _) => coeff,
                (_, "1") => power,
                (_, "-1") => format!("-{power}"),
                _ => format!("{coeff}*{power}"),
            });
        }
        if terms.is_empty() {
            return "0".to_string();
        }
        terms.join(" + ").replace("+ -", "- ")
    }

    fn is_atomic(&self) -> bool {
        self.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && self.coeffs().last().is_none_or(Pretty::is_atomic)
    }
}
