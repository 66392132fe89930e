use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Ring};

/// Dense univariate polynomial; `coeffs[i]` multiplies `var^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn var() -> Self {
        Poly {
            coeffs: vec![R::zero(), R::one()],
        }
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, v: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(v).add(c))
    }

    pub fn mul_scalar(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// p(v + c), by Horner in the shifted variable.
    pub fn shift(&self, c: &R) -> Self {
        let step = Poly {
            coeffs: vec![c.clone(), R::one()],
        };
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            Ring::add(&Ring::mul(&acc, &step), &Self::constant(a.clone()))
        })
    }

    /// p(−v).
    pub fn negate_var(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { a.neg() } else { a.clone() })
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Embeds a rational polynomial coefficient-wise.
    pub fn lift(p: &Poly<Rational>) -> Self {
        p.map(R::from_rational)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Poly {
            coeffs: vec![R::one()],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    fn add_assign(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign(b);
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    fn from_rational(c: &Rational) -> Self {
        Self::constant(R::from_rational(c))
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.inverse().map(Self::constant),
            _ => None,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<R: Ring> $trait<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                Ring::$method(&self, &rhs)
            }
        }
        impl<'a, R: Ring> $trait<&'a Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &'a Poly<R>) -> Poly<R> {
                Ring::$method(&self, rhs)
            }
        }
        impl<'a, 'b, R: Ring> $trait<&'b Poly<R>> for &'a Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &'b Poly<R>) -> Poly<R> {
                Ring::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Ring::neg(&self)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Ring::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, BiPoly};
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Rational {
        rational(p, d).unwrap()
    }

    fn qp(cs: &[(i64, i64)]) -> Poly<Rational> {
        Poly::from_coeffs(cs.iter().map(|&(p, d)| q(p, d)).collect())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(qp(&[(1, 1), (2, 1)]).eval(&q(0, 1)), q(1, 1));
        assert_eq!(qp(&[(0, 1), (0, 1), (1, 1)]).eval(&q(1, 2)), q(1, 4));
        assert_eq!(qp(&[(1, 4), (0, 1), (2, 1)]).eval(&q(0, 1)), q(1, 4));
    }

    #[test]
    fn mul_examples() {
        let lam = Poly::<Rational>::var();
        let one = Poly::<Rational>::one();
        assert_eq!(
            &(&one + &lam) * &(&one - &lam),
            qp(&[(1, 1), (0, 1), (-1, 1)])
        );
        assert!((Poly::zero() * &lam).is_zero());

        let x = BiPoly::var();
        let lam_x = BiPoly::constant(lam.clone());
        let expected = BiPoly::from_coeffs(vec![Poly::zero(), -lam, Poly::one()]);
        assert_eq!(&x * &(&x - &lam_x), expected);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = qp(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(qp(&[(0, 1)]).degree(), None);
        let a = qp(&[(1, 1), (1, 1)]);
        assert!((&a - &a).coeffs().is_empty());
    }

    #[test]
    fn shift_and_negate() {
        // (v+1)^2 = v^2 + 2v + 1
        let sq = qp(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(sq.shift(&q(1, 1)), qp(&[(1, 1), (2, 1), (1, 1)]));
        let p = qp(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(p.negate_var(), qp(&[(1, 1), (-2, 1), (3, 1)]));
    }

    #[test]
    fn inverse_only_for_nonzero_constants() {
        assert_eq!(qp(&[(2, 1)]).inverse(), Some(qp(&[(1, 2)])));
        assert_eq!(qp(&[(0, 1), (1, 1)]).inverse(), None);
        assert_eq!(Poly::<Rational>::zero().inverse(), None);
    }

    fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..6)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(p, d)| q(p, d)).collect()))
    }

    fn small_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(small_poly(), 0..4).prop_map(Poly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn nested_ring_axioms(a in small_bipoly(), b in small_bipoly(), c in small_bipoly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn eval_is_homomorphism(a in small_poly(), b in small_poly(), p in -9i64..9, d in 1i64..5) {
            let v = q(p, d);
            prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
            prop_assert_eq!((&a + &b).eval(&v), a.eval(&v) + b.eval(&v));
        }

        #[test]
        fn shift_matches_evaluation(a in small_poly(), c in -5i64..5, v in -5i64..5) {
            let c = q(c, 2);
            let v = q(v, 3);
            prop_assert_eq!(a.shift(&c).eval(&v), a.eval(&(&v + &c)));
        }
    }
}
