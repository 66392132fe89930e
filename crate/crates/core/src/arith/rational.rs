use num::{BigInt, BigRational, One, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Builds the reduced fraction `p/q`.
pub fn rational(p: i64, q: i64) -> Result<Rational> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// Parses `"p/q"` or `"p"`. Non-reduced input is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    BigRational::from_integer(acc)
}

/// Ordinary binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return <Rational as Zero>::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    BigRational::from_integer(acc)
}

/// e(e−1)⋯(e−j+1)/j! for rational `e`.
pub fn generalized_binomial(e: &Rational, j: usize) -> Rational {
    let mut acc = <Rational as One>::one();
    for i in 0..j {
        acc = acc * (e - Rational::from_integer(i.into())) / Rational::from_integer((i + 1).into());
    }
    acc
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}
