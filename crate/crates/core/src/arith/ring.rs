use std::fmt;

use super::Rational;

/// Commutative ring containing ℚ.
///
/// Methods take references so that nested coefficient types avoid needless
/// clones; the operator impls on [`super::Poly`] are thin wrappers over these.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_rational(c: &Rational) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    /// Multiplicative inverse when it exists in this ring.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(&*self, rhs);
    }

    fn pow(&self, exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
