use crate::arith::{Rational, Ring};

/// Scales one named coefficient inside an identity's formula.
///
/// Identity routes thread a `Tweak` through so negative controls can perturb
/// exactly one constant (for example the `k/2` in a recurrence) and confirm
/// that the corresponding check goes red.
#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct Tweak {
    factor: Option<Rational>,
}

impl Tweak {
    pub(crate) fn none() -> Self {
        Tweak { factor: None }
    }

    pub(crate) fn scaling(factor: Rational) -> Self {
        Tweak {
            factor: Some(factor),
        }
    }

    pub(crate) fn apply(&self, c: Rational) -> Rational {
        match &self.factor {
            Some(f) => c * f,
            None => c,
        }
    }

    pub(crate) fn apply_ring<R: Ring>(&self, c: R) -> R {
        match &self.factor {
            Some(f) => c.scale(f),
            None => c,
        }
    }
}
