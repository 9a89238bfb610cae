//! Minimal ring/field abstraction shared by the rational and polynomial
//! continued-fraction engines.
//!
//! Everything works over exact commutative rings; the only two rings in play
//! are `Rational` (= `BigRational`) and `Polynomial`, whose fraction fields
//! are `Rational` itself and `RationalFunction`.

use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Exact commutative ring with unit.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Exact division; `None` when `other` is zero.
    fn div(&self, other: &Self) -> Option<Self>;

    fn inv(&self) -> Option<Self> {
        Self::one().div(self)
    }
}

/// Ring together with its field of fractions, used to evaluate continued
/// fractions whose partial quotients live in the ring.
pub trait FractionRing: Ring {
    type Frac: Field;

    fn to_frac(&self) -> Self::Frac;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for Rational {
    fn div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl FractionRing for Rational {
    type Frac = Rational;

    fn to_frac(&self) -> Rational {
        self.clone()
    }
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}
