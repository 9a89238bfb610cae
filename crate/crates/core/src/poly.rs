//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored constant-term first with no trailing zero; the
//! empty vector is the zero polynomial. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, rat, Rational};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from constant-first coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The variable x.
    pub fn x() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    /// Monomial c * x^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if Zero::is_zero(&c) {
            return Polynomial::zero();
        }
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; None for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree treating zero as -1 (handy for Euclid loops).
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn into_monic(self) -> Polynomial {
        match self.leading_coeff() {
            None => self,
            Some(lead) => {
                let inv = lead.recip();
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        if at.is_integer() && self.is_integral() {
            let point = at.numer();
            let mut acc = BigInt::zero();
            for c in self.coeffs.iter().rev() {
                acc = acc * point + c.numer();
            }
            return Rational::from_integer(acc);
        }
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Euclidean division: self = divisor * quotient + remainder with
    /// deg remainder < deg divisor.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lead_inv = divisor.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat(0); self.coeffs.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dlen - 1] * &lead_inv;
            if !Zero::is_zero(&c) {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let t = &c * d;
                    rem[k + i] = &rem[k + i] - t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dlen - 1);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor. Errors when both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Precondition("gcd of two zero polynomials".into()));
        }
        // Primitive PRS over the integers keeps coefficient growth tame.
        let mut a = self.primitive_integer_part();
        let mut b = other.primitive_integer_part();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = make_primitive(r);
        }
        let g = Polynomial::new(a.into_iter().map(Rational::from_integer).collect());
        Ok(g.into_monic())
    }

    /// Composition self(inner).
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
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

    /// Clears denominators and the integer content; returns integer
    /// coefficients of the primitive part (trailing zeros trimmed, leading
    /// coefficient made positive).
    fn primitive_integer_part(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        make_primitive(ints)
    }

    /// Parses the text form "c0,c1,..." with rational entries "p/q" or "n".
    pub fn parse(text: &str) -> Result<Polynomial> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Precondition("empty polynomial text".into()));
        }
        let coeffs = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }

    /// The text form "c0,c1,..."; zero renders as "0".
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn make_primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    if ints.is_empty() {
        return ints;
    }
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.clone());
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    ints
}

/// Pseudo-remainder of integer-coefficient polynomials (b nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = rem.last().unwrap().clone();
        for x in rem.iter_mut() {
            *x = &*x * &lead;
        }
        for i in 0..=db {
            rem[da - db + i] -= &c * &b[i];
        }
        while rem.last().is_some_and(|x| x.is_zero()) {
            rem.pop();
        }
        if rem.is_empty() {
            break;
        }
    }
    rem
}

/// Euclidean division as a free function, matching the library surface.
pub fn poly_divmod(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    a.divmod(b)
}

/// Monic gcd as a free function.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.gcd(b)
}

/// Composition outer(inner) as a free function.
pub fn poly_compose(outer: &Polynomial, inner: &Polynomial) -> Polynomial {
    outer.compose(inner)
}

/// Divisibility in Z[x] for a monic integer divisor: true iff
/// dividend = divisor * c with c having integer coefficients.
pub fn divides_in_integer_ring(divisor: &Polynomial, dividend: &Polynomial) -> Result<bool> {
    if !divisor.is_monic() || !divisor.is_integral() {
        return Err(Error::Precondition(
            "divisor must be monic with integer coefficients".into(),
        ));
    }
    if !dividend.is_integral() {
        return Err(Error::Precondition(
            "dividend must have integer coefficients".into(),
        ));
    }
    let (_, rem) = dividend.divmod(divisor)?;
    // A monic integer divisor keeps the quotient integral, so the zero
    // remainder is the whole check.
    Ok(rem.is_zero())
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        // Rational coefficient ops pay a gcd on every step; integer
        // polynomials multiply over BigInt instead.
        if self.is_integral() && other.is_integral() {
            let a: Vec<&BigInt> = self.coeffs.iter().map(|c| c.numer()).collect();
            let b: Vec<&BigInt> = other.coeffs.iter().map(|c| c.numer()).collect();
            let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    acc[i + j] += *x * *y;
                }
            }
            return Polynomial::new(acc.into_iter().map(Rational::from_integer).collect());
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn one() -> Self {
        Polynomial::one()
    }

    fn from_int(n: i64) -> Self {
        Polynomial::constant(rat(n))
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
        Polynomial::is_zero(self)
    }
}

impl fmt::Display for Polynomial {
    /// Human form, highest degree first: "8x^4 - 8x^2 + 1", "x - 1/3".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if k >= 1 {
                write!(f, "x")?;
                if k >= 2 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
