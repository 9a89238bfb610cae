//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical reduced form (coprime numerator/denominator, denominator >= 1,
//! zero as 0/1). This module adds the parsing and floor helpers the
//! continued-fraction layer needs.

use num_bigint::BigInt;
use num_traits::Signed;

pub use num_rational::BigRational as Rational;

use crate::error::{Error, Result};

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational p/q from machine integers. Panics if q = 0.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Floor of a rational as a big integer.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Parses "p/q" or "n" (decimal, arbitrary length, optional sign).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Precondition(format!("cannot parse rational '{text}'"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero_denominator() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

trait ZeroDenominator {
    fn is_zero_denominator(&self) -> bool;
}

impl ZeroDenominator for BigInt {
    fn is_zero_denominator(&self) -> bool {
        use num_traits::Zero;
        self.is_zero()
    }
}

/// Denominator of the reduced fraction, always positive.
pub fn denominator(r: &Rational) -> BigInt {
    r.denom().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("10/7").unwrap(), ratio(10, 7));
        assert_eq!(parse_rational("-5/3").unwrap(), ratio(-5, 3));
        assert_eq!(parse_rational("42").unwrap(), rat(42));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn floor_negative() {
        assert_eq!(floor_int(&ratio(-5, 3)), BigInt::from(-2));
        assert_eq!(floor_int(&ratio(5, 3)), BigInt::from(1));
    }
}
