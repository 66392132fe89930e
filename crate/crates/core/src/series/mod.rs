//! Truncated formal power series.
//!
//! A [`Series`] keeps the coefficients of `t^0 .. t^(order-1)` as plain power
//! series coefficients; exponential generating function bookkeeping (the
//! `n!`) happens only in [`Egf::coefficient`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{factorial, generalized_binomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Pads with zeros or truncates so that exactly `order` coefficients remain.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `t`.
    pub fn var(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    /// Cauchy product truncated to the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    /// `self^k` by repeated squaring; `self^0` is the unit series.
    pub fn int_pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Generalized binomial series `Σ_j C(e, j) (self − 1)^j`.
    pub fn rat_pow(&self, e: &Rational) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = R::zero();
        let mut power = Self::one(n);
        let mut out = Self::zero(n);
        // u^j vanishes once j reaches the order
        for j in 0..n {
            out = &out + &power.scale(&generalized_binomial(e, j));
            power = &power * &u;
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let c0_inv = self
            .coeff(0)
            .inverse()
            .ok_or(Error::ConstantTermNotInvertible)?;
        let mut out = Vec::with_capacity(n);
        for m in 0..n {
            if m == 0 {
                out.push(c0_inv.clone());
                continue;
            }
            let mut acc = R::zero();
            for i in 1..=m {
                acc.add_assign(&self.coeffs[i].mul(&out[m - i]));
            }
            out.push(acc.neg().mul(&c0_inv));
        }
        Ok(Series { coeffs: out })
    }

    /// `self ∘ inner`, by Horner in `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeff(0).is_zero() {
            return Err(Error::ConstantTermNotZero);
        }
        let n = self.order();
        let mut out = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            out = &out * inner;
            if n > 0 {
                out.coeffs[0].add_assign(c);
            }
        }
        Ok(out)
    }

    /// Compositional inverse `h` with `self(h(t)) = h(self(t)) = t`.
    ///
    /// Solves for `h_m` one coefficient at a time from
    /// `g_1 h + Σ_{j≥2} g_j h^j = t`, keeping a table of the coefficients
    /// of `h^j` already determined.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if !self.coeff(0).is_zero() {
            return Err(Error::ConstantTermNotZero);
        }
        if n < 2 {
            return Ok(Self::zero(n));
        }
        let g1_inv = self.coeffs[1]
            .inverse()
            .ok_or(Error::LinearTermNotInvertible)?;
        // powers[j][m] = [t^m] h^j
        let mut powers = vec![vec![R::zero(); n]; n];
        let mut h = vec![R::zero(); n];
        for m in 1..n {
            for j in 2..=m {
                let mut acc = R::zero();
                for i in 1..=(m + 1 - j) {
                    acc.add_assign(&h[i].mul(&powers[j - 1][m - i]));
                }
                powers[j][m] = acc;
            }
            let mut rhs = if m == 1 { R::one() } else { R::zero() };
            for j in 2..=m {
                rhs = rhs.sub(&self.coeffs[j].mul(&powers[j][m]));
            }
            h[m] = rhs.mul(&g1_inv);
            powers[1][m] = h[m].clone();
        }
        Ok(Series { coeffs: h })
    }

    pub fn as_egf(&self) -> Egf<'_, R> {
        Egf { series: self }
    }
}

/// Reads a series as an exponential generating function.
pub struct Egf<'a, R> {
    series: &'a Series<R>,
}

impl<R: Ring> Egf<'_, R> {
    /// `n! · [t^n]`.
    pub fn coefficient(&self, n: usize) -> R {
        self.series.coeff(n).scale(&factorial(n))
    }
}

/// `(1 + λt)^{a/λ} = Σ_l (a)_{l,λ} t^l / l!`, with `(a)_{l,λ}` the λ-falling
/// factorial; at `λ = 0` this is `e^{at}`.
pub fn deformed_exp<R: Ring>(a: &R, lambda: &R, order: usize) -> Series<R> {
    let mut coeffs = Vec::with_capacity(order);
    let mut falling = R::one();
    for l in 0..order {
        coeffs.push(falling.scale(&factorial(l).recip()));
        let step = a.sub(&lambda.mul(&R::from_int(l as i64)));
        falling = falling.mul(&step);
    }
    Series { coeffs }
}

/// `e^{at}` over the rationals.
pub fn exp_series(a: &Rational, order: usize) -> Series<Rational> {
    let mut coeffs = Vec::with_capacity(order);
    let mut term = Rational::from_integer(1.into());
    for l in 0..order {
        coeffs.push(term.clone());
        term = term * a / Rational::from_integer((l + 1).into());
    }
    Series { coeffs }
}

/// `log(1 + t)` over the rationals.
pub fn log1p_series(order: usize) -> Series<Rational> {
    let coeffs = (0..order)
        .map(|i| match i {
            0 => Rational::from_integer(0.into()),
            _ => {
                let sign: i64 = if i % 2 == 1 { 1 } else { -1 };
                Rational::new(sign.into(), (i as i64).into())
            }
        })
        .collect();
    Series { coeffs }
}

macro_rules! forward_series_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics when the orders differ; use the `checked_*` form to get an error.
        impl<'a, 'b, R: Ring> $trait<&'b Series<R>> for &'a Series<R> {
            type Output = Series<R>;
            fn $method(self, rhs: &'b Series<R>) -> Series<R> {
                self.$checked(rhs).expect("series order mismatch")
            }
        }
        impl<R: Ring> $trait<Series<R>> for Series<R> {
            type Output = Series<R>;
            fn $method(self, rhs: Series<R>) -> Series<R> {
                (&self).$checked(&rhs).expect("series order mismatch")
            }
        }
    };
}

forward_series_op!(Add, add, checked_add);
forward_series_op!(Sub, sub, checked_sub);
forward_series_op!(Mul, mul, checked_mul);

impl<R: Ring> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.map(Ring::neg)
    }
}
