//! Reduced rational functions over Q(x).
//!
//! Canonical form: the denominator is monic and coprime to the numerator;
//! zero is 0/1. Equality is therefore plain field equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::{Field, FractionRing, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: Polynomial,
    denom: Polynomial,
}

impl RationalFunction {
    /// Builds and reduces; errors on a zero denominator.
    pub fn new(numer: Polynomial, denom: Polynomial) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rf = RationalFunction { numer, denom };
        rf.reduce()?;
        Ok(rf)
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            numer: p,
            denom: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.is_polynomial() {
            Some(&self.numer)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.denom.clone(), self.numer.clone())
    }

    /// Degree of numerator minus degree of denominator; the valuation
    /// |a/b| = 2^(deg a - deg b) orders by this quantity. Zero maps to
    /// i64::MIN.
    pub fn valuation_degree(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.numer.degree_i64() - self.denom.degree_i64()
        }
    }

    /// Evaluates at a rational point; errors when the denominator vanishes.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.denom.eval(at);
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.numer.eval(at) / d)
    }

    fn reduce(&mut self) -> Result<()> {
        if self.numer.is_zero() {
            self.denom = Polynomial::one();
            return Ok(());
        }
        let g = self.numer.gcd(&self.denom)?;
        if !g.is_one() {
            let (qn, rn) = self.numer.divmod(&g)?;
            let (qd, rd) = self.denom.divmod(&g)?;
            debug_assert!(rn.is_zero() && rd.is_zero());
            self.numer = qn;
            self.denom = qd;
        }
        let lead = self.denom.leading_coeff().unwrap().clone();
        if !num_traits::One::is_one(&lead) {
            let inv = lead.recip();
            self.numer = self.numer.scale(&inv);
            self.denom = self.denom.scale(&inv);
        }
        Ok(())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, other: &RationalFunction) -> RationalFunction {
        let numer = &(&self.numer * &other.denom) + &(&other.numer * &self.denom);
        let denom = &self.denom * &other.denom;
        RationalFunction::new(numer, denom).expect("nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, other: &RationalFunction) -> RationalFunction {
        let numer = &(&self.numer * &other.denom) - &(&other.numer * &self.denom);
        let denom = &self.denom * &other.denom;
        RationalFunction::new(numer, denom).expect("nonzero denominators")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, other: &RationalFunction) -> RationalFunction {
        let numer = &self.numer * &other.numer;
        let denom = &self.denom * &other.denom;
        RationalFunction::new(numer, denom).expect("nonzero denominators")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;

    /// Panics on division by zero; use `Field::div` for the checked form.
    fn div(self, other: &RationalFunction) -> RationalFunction {
        let numer = &self.numer * &other.denom;
        let denom = &self.denom * &other.numer;
        RationalFunction::new(numer, denom).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }

    fn one() -> Self {
        RationalFunction::one()
    }

    fn from_int(n: i64) -> Self {
        RationalFunction::from_poly(Polynomial::from_int(n))
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
        RationalFunction::is_zero(self)
    }
}

impl Field for RationalFunction {
    fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }
}

impl FractionRing for Polynomial {
    type Frac = RationalFunction;

    fn to_frac(&self) -> RationalFunction {
        RationalFunction::from_poly(self.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
