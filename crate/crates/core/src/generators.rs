//! Series and product generators over iterated polynomials: partial sums
//! of 1/f^n, partial products of (1 + 1/f^n), reciprocal-power sums,
//! Chebyshev polynomials, and the explicit specializable constructions.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cf::{convergents, eval_quotients, CfValue};
use crate::continuants::SignEpsilon;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};
use crate::ratfunc::RationalFunction;
use crate::ring::Ring;

/// Symbolic iteration refuses to build polynomials beyond this degree.
pub const MAX_ITERATED_DEGREE: usize = 4096;

/// A sum or product over iterates of f, optionally specialized at an
/// integer point.
#[derive(Clone, Debug)]
pub struct IterationSpec {
    pub f: Polynomial,
    pub count: usize,
    pub specialization: Option<BigInt>,
}

impl IterationSpec {
    pub fn symbolic(f: Polynomial, count: usize) -> Self {
        IterationSpec {
            f,
            count,
            specialization: None,
        }
    }

    pub fn at(f: Polynomial, count: usize, m: i64) -> Self {
        IterationSpec {
            f,
            count,
            specialization: Some(m.into()),
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.f.is_integral() {
            return Err(Error::Precondition(
                "f must have integer coefficients".into(),
            ));
        }
        if self.f.degree_i64() < 2 {
            return Err(Error::Precondition("f must have degree > 1".into()));
        }
        Ok(())
    }
}

/// Exponent sequences for reciprocal-power sums.
#[derive(Clone, Debug)]
pub enum ExponentSpec {
    /// l^n
    Geometric { ratio: u64 },
    /// n!
    Factorial,
    /// c * l^n
    ScaledGeometric { scale: u64, ratio: u64 },
}

impl ExponentSpec {
    pub fn exponent(&self, n: u32) -> Result<u64> {
        let overflow = || Error::Precondition(format!("exponent overflow at n = {n}"));
        match self {
            ExponentSpec::Geometric { ratio } => ratio.checked_pow(n).ok_or_else(overflow),
            ExponentSpec::Factorial => {
                let mut acc: u64 = 1;
                for k in 2..=(n as u64) {
                    acc = acc.checked_mul(k).ok_or_else(overflow)?;
                }
                Ok(acc)
            }
            ExponentSpec::ScaledGeometric { scale, ratio } => ratio
                .checked_pow(n)
                .and_then(|p| p.checked_mul(*scale))
                .ok_or_else(overflow),
        }
    }
}

/// n-fold composition f^n, f^0 = x. Refuses degrees beyond
/// `MAX_ITERATED_DEGREE`.
pub fn iterate_poly(f: &Polynomial, n: usize) -> Result<Polynomial> {
    let mut acc = Polynomial::x();
    for _ in 0..n {
        acc = f.compose(&acc);
        if acc.degree_i64() > MAX_ITERATED_DEGREE as i64 {
            return Err(Error::Precondition(format!(
                "iterated degree exceeds {MAX_ITERATED_DEGREE}"
            )));
        }
    }
    Ok(acc)
}

/// f^n(m) by value, never building the composed polynomial.
pub fn iterate_at(f: &Polynomial, n: usize, m: &Rational) -> Rational {
    let mut acc = m.clone();
    for _ in 0..n {
        acc = f.eval(&acc);
    }
    acc
}

/// Chebyshev polynomial T_l by the recurrence T_{n+1} = 2x T_n - T_{n-1}.
pub fn chebyshev(l: usize) -> Polynomial {
    let mut prev = Polynomial::one();
    if l == 0 {
        return prev;
    }
    let mut curr = Polynomial::x();
    let two_x = Polynomial::from_ints(&[0, 2]);
    for _ in 1..l {
        let next = &(&two_x * &curr) - &prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Sum 1/x + 1/f(x) + ... + 1/f^N(x), symbolic.
pub fn sum_partial_symbolic(f: &Polynomial, n: usize) -> Result<RationalFunction> {
    let mut acc = RationalFunction::zero();
    let mut iterate = Polynomial::x();
    for k in 0..=n {
        if k > 0 {
            iterate = f.compose(&iterate);
            if iterate.degree_i64() > MAX_ITERATED_DEGREE as i64 {
                return Err(Error::Precondition(format!(
                    "iterated degree exceeds {MAX_ITERATED_DEGREE}"
                )));
            }
        }
        if iterate.is_zero() {
            return Err(Error::ZeroTerm(k));
        }
        acc = acc.add(&RationalFunction::new(Polynomial::one(), iterate.clone())?);
    }
    Ok(acc)
}

/// Sum 1/m + 1/f(m) + ... + 1/f^N(m), exact.
pub fn sum_partial_at(f: &Polynomial, n: usize, m: &Rational) -> Result<Rational> {
    let mut acc = rat(0);
    let mut term = m.clone();
    for k in 0..=n {
        if k > 0 {
            term = f.eval(&term);
        }
        if Zero::is_zero(&term) {
            return Err(Error::ZeroTerm(k));
        }
        acc += term.recip();
    }
    Ok(acc)
}

/// Product (1 + 1/x)(1 + 1/f(x))...(1 + 1/f^N(x)), symbolic.
pub fn product_partial_symbolic(f: &Polynomial, n: usize) -> Result<RationalFunction> {
    let mut acc = RationalFunction::one();
    let mut iterate = Polynomial::x();
    for k in 0..=n {
        if k > 0 {
            iterate = f.compose(&iterate);
            if iterate.degree_i64() > MAX_ITERATED_DEGREE as i64 {
                return Err(Error::Precondition(format!(
                    "iterated degree exceeds {MAX_ITERATED_DEGREE}"
                )));
            }
        }
        if iterate.is_zero() {
            return Err(Error::ZeroTerm(k));
        }
        let factor =
            RationalFunction::one().add(&RationalFunction::new(Polynomial::one(), iterate.clone())?);
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Product (1 + 1/m)(1 + 1/f(m))...(1 + 1/f^N(m)), exact.
pub fn product_partial_at(f: &Polynomial, n: usize, m: &Rational) -> Result<Rational> {
    let mut acc = rat(1);
    let mut term = m.clone();
    for k in 0..=n {
        if k > 0 {
            term = f.eval(&term);
        }
        if Zero::is_zero(&term) {
            return Err(Error::ZeroTerm(k));
        }
        acc *= rat(1) + term.recip();
    }
    Ok(acc)
}

/// Spec-driven partial sum: symbolic or specialized per `spec`.
pub fn sum_partial(spec: &IterationSpec) -> Result<CfValue> {
    spec.validate()?;
    match &spec.specialization {
        None => Ok(CfValue::RatFunc(sum_partial_symbolic(&spec.f, spec.count)?)),
        Some(m) => Ok(CfValue::Rational(sum_partial_at(
            &spec.f,
            spec.count,
            &Rational::from_integer(m.clone()),
        )?)),
    }
}

/// Spec-driven partial product: symbolic or specialized per `spec`.
pub fn product_partial(spec: &IterationSpec) -> Result<CfValue> {
    spec.validate()?;
    match &spec.specialization {
        None => Ok(CfValue::RatFunc(product_partial_symbolic(
            &spec.f, spec.count,
        )?)),
        Some(m) => Ok(CfValue::Rational(product_partial_at(
            &spec.f,
            spec.count,
            &Rational::from_integer(m.clone()),
        )?)),
    }
}

/// Sum of base^(-e_n) for n = 0..N over a rational base.
pub fn sum_reciprocal_powers_rational(
    base: &Rational,
    exps: &ExponentSpec,
    n: usize,
) -> Result<Rational> {
    check_base_not_unit(base)?;
    let mut acc = rat(0);
    for k in 0..=n {
        let e = exps.exponent(k as u32)?;
        acc += pow_rational(base, e)?.recip();
    }
    Ok(acc)
}

/// Sum of base(x)^(-e_n) for n = 0..N over a polynomial base.
pub fn sum_reciprocal_powers_poly(
    base: &Polynomial,
    exps: &ExponentSpec,
    n: usize,
) -> Result<RationalFunction> {
    if base.is_constant() {
        return Err(Error::Precondition(
            "polynomial base must be nonconstant".into(),
        ));
    }
    let mut acc = RationalFunction::zero();
    for k in 0..=n {
        let e = exps.exponent(k as u32)?;
        let deg = base.degree_i64() as u64 * e;
        if deg > MAX_ITERATED_DEGREE as u64 {
            return Err(Error::Precondition(format!(
                "power degree exceeds {MAX_ITERATED_DEGREE}"
            )));
        }
        let denom = base.pow(e as u32);
        acc = acc.add(&RationalFunction::new(Polynomial::one(), denom)?);
    }
    Ok(acc)
}

fn check_base_not_unit(base: &Rational) -> Result<()> {
    if Zero::is_zero(base) || One::is_one(&base.abs()) {
        return Err(Error::Precondition("base must not be 0 or +-1".into()));
    }
    Ok(())
}

fn pow_rational(base: &Rational, e: u64) -> Result<Rational> {
    let e: u32 = e
        .to_u32()
        .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
    Ok(Rational::new(base.numer().pow(e), base.denom().pow(e)))
}

/// Exact divisibility in Z[x] without the monic restriction: true iff
/// dividend = divisor * c with c in Z[x].
fn divides_exactly_integral(divisor: &Polynomial, dividend: &Polynomial) -> Result<bool> {
    if divisor.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if dividend.is_zero() {
        return Ok(true);
    }
    let (quot, rem) = dividend.divmod(divisor)?;
    Ok(rem.is_zero() && quot.is_integral())
}

fn exact_quotient(dividend: &Polynomial, divisor: &Polynomial) -> Result<Polynomial> {
    let (quot, rem) = dividend.divmod(divisor)?;
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "expected exact division, got remainder {rem}"
        )));
    }
    Ok(quot)
}

/// The word [0, x, A_1, ..., A_l] summing to S_l for f = g x^2 - x.
/// Every quotient has integer coefficients.
pub fn construction_case_negx(g: &Polynomial, l: usize) -> Result<Vec<Polynomial>> {
    if !g.is_integral() {
        return Err(Error::Precondition(
            "g must have integer coefficients".into(),
        ));
    }
    let x = Polynomial::x();
    let f = &(&(g * &x) * &x) - &x;
    if f.degree_i64() < 2 {
        return Err(Error::Precondition(
            "f = g x^2 - x must have degree > 1".into(),
        ));
    }
    let mut iterates = vec![x.clone()];
    for _ in 1..l.max(1) {
        let last = iterates.last().unwrap();
        iterates.push(f.compose(last));
    }
    // ratio f^k / f^{k-1} = g(f^{k-1}) f^{k-1} - 1, always a polynomial here
    let ratio = |k: usize| -> Polynomial {
        let prev = &iterates[k - 1];
        &(&g.compose(prev) * prev) - &Polynomial::one()
    };
    let x_sq = &x * &x;
    let mut word = vec![Polynomial::zero(), x.clone()];
    for i in 1..=l {
        let a = if i % 2 == 1 {
            // A_{2m+1} = -g(f^{2m}) (f/x)^2 (f^3/f^2)^2 ... (f^{2m-1}/f^{2m-2})^2
            let m = (i - 1) / 2;
            let mut acc = -&g.compose(&iterates[i - 1]);
            for j in 0..m {
                let r = ratio(2 * j + 1);
                acc = &acc * &(&r * &r);
            }
            acc
        } else {
            // A_{2m} = g(f^{2m-1}) x^2 (f^2/f)^2 ... (f^{2m-2}/f^{2m-3})^2
            let m = i / 2;
            let mut acc = &g.compose(&iterates[i - 1]) * &x_sq;
            for j in 1..m {
                let r = ratio(2 * j);
                acc = &acc * &(&r * &r);
            }
            acc
        };
        debug_assert!(a.is_integral());
        word.push(a);
    }
    Ok(word)
}

/// The word [0, x, A_1 - 1, B_1, A_2, B_2, ..., A_l, B_l] summing to S_l for
/// f = x^2 - x + 1 + x^2 (x-1)^2 g. Every quotient has integer coefficients.
pub fn construction_case_x2x1(g: &Polynomial, l: usize) -> Result<Vec<Polynomial>> {
    if !g.is_integral() {
        return Err(Error::Precondition(
            "g must have integer coefficients".into(),
        ));
    }
    if l == 0 {
        return Err(Error::Precondition("l must be at least 1".into()));
    }
    let x = Polynomial::x();
    let x_minus_1 = Polynomial::from_ints(&[-1, 1]);
    let base = Polynomial::from_ints(&[1, -1, 1]);
    let shift = &(&x * &x) * &(&x_minus_1 * &x_minus_1);
    let f = &base + &(&shift * g);
    if f.degree_i64() < 2 {
        return Err(Error::Precondition("f must have degree > 1".into()));
    }
    let mut iterates = vec![x.clone()];
    for _ in 1..l {
        let last = iterates.last().unwrap();
        iterates.push(f.compose(last));
    }
    // Q_k = x f ... f^k
    let mut q_prods = vec![x.clone()];
    for k in 1..l {
        q_prods.push(&q_prods[k - 1] * &iterates[k]);
    }
    let mut word = vec![Polynomial::zero(), x.clone()];
    for i in 1..=l {
        // A_i = -g(f^{i-1}) ((f^{i-1} - 1) / Q_{i-2})^2
        let top = &iterates[i - 1] - &Polynomial::one();
        let inner = if i >= 2 {
            exact_quotient(&top, &q_prods[i - 2])?
        } else {
            top
        };
        let a = -&(&g.compose(&iterates[i - 1]) * &(&inner * &inner));
        // B_i = -(Q_{i-1})^2
        let b = -&(&q_prods[i - 1] * &q_prods[i - 1]);
        debug_assert!(a.is_integral() && b.is_integral());
        if i == 1 {
            word.push(&a - &Polynomial::one());
        } else {
            word.push(a);
        }
        word.push(b);
    }
    Ok(word)
}

/// For f = 1 mod x^2(x-1): checks that f^n - 1 is divisible by
/// (f^0 f^1 ... f^{n-1})^2 in Z[x].
pub fn verify_threefold_congruence(f: &Polynomial, n: usize) -> Result<bool> {
    if !f.is_integral() || f.degree_i64() < 2 {
        return Err(Error::Precondition(
            "f must be integral of degree > 1".into(),
        ));
    }
    let modulus = Polynomial::from_ints(&[0, 0, -1, 1]); // x^2 (x - 1)
    let shifted = f - &Polynomial::one();
    if !divides_exactly_integral(&modulus, &shifted)? {
        return Err(Error::Precondition("f must be 1 mod x^2(x-1)".into()));
    }
    if n == 0 {
        return Ok(true);
    }
    let mut product = Polynomial::one();
    let mut iterate = Polynomial::x();
    for _ in 0..n {
        product = &product * &iterate;
        iterate = f.compose(&iterate);
    }
    let target = &iterate - &Polynomial::one();
    divides_exactly_integral(&(&product * &product), &target)
}

/// For f = 2x^2 - 1 mod x(x^2-1): checks that (f^n)^2 - 1 is divisible by
/// (f^0+1)(f^1+1)...(f^n+1) and that f^n divides f^{n+1} + 1, in Z[x].
pub fn verify_product_divisibility(f: &Polynomial, n: usize) -> Result<bool> {
    if !f.is_integral() || f.degree_i64() < 2 {
        return Err(Error::Precondition(
            "f must be integral of degree > 1".into(),
        ));
    }
    let modulus = Polynomial::from_ints(&[0, -1, 0, 1]); // x(x^2 - 1)
    let shifted = f - &Polynomial::from_ints(&[-1, 0, 2]);
    if !divides_exactly_integral(&modulus, &shifted)? {
        return Err(Error::Precondition("f must be 2x^2 - 1 mod x(x^2-1)".into()));
    }
    let mut product = Polynomial::one();
    let mut iterate = Polynomial::x();
    for _ in 0..=n {
        product = &product * &(&iterate + &Polynomial::one());
        if product.degree_i64() > MAX_ITERATED_DEGREE as i64 {
            return Err(Error::Precondition(format!(
                "iterated degree exceeds {MAX_ITERATED_DEGREE}"
            )));
        }
        iterate = f.compose(&iterate);
    }
    // here iterate = f^{n+1}; recover f^n for the second condition
    let f_n = iterate_poly(f, n)?;
    let sq = &(&f_n * &f_n) - &Polynomial::one();
    let first = divides_exactly_integral(&product, &sq)?;
    let second = divides_exactly_integral(&f_n, &(&iterate + &Polynomial::one()))?;
    Ok(first && second)
}

/// Iterated 3-fold words for the partial sums of 1/x + 1/f + ... when the
/// iterates satisfy f^{m+1} = sigma + B q^2 with sigma = +-1 (the
/// congruence families f = 1 mod x^2(x-1) and f = -1 mod x^2(x+1)).
/// Returns the words for S_0 .. S_n; each evaluates to the corresponding
/// partial sum and has integer coefficients.
pub fn threefold_sum_words(f: &Polynomial, n: usize) -> Result<Vec<Vec<Polynomial>>> {
    if !f.is_integral() || f.degree_i64() < 2 {
        return Err(Error::Precondition(
            "f must be integral of degree > 1".into(),
        ));
    }
    let mut words = Vec::with_capacity(n + 1);
    let mut word = vec![Polynomial::zero(), Polynomial::x()];
    words.push(word.clone());
    let mut iterate = Polynomial::x();
    for _ in 0..n {
        iterate = f.compose(&iterate);
        if iterate.degree_i64() > MAX_ITERATED_DEGREE as i64 {
            return Err(Error::Precondition(format!(
                "iterated degree exceeds {MAX_ITERATED_DEGREE}"
            )));
        }
        let w: Vec<Polynomial> = word[1..].to_vec();
        let conv = convergents(&word);
        let q = conv.q.last().unwrap().clone();
        let q_sq = &q * &q;
        let mut found = None;
        for sigma in [1i64, -1] {
            let target = &iterate - &Polynomial::from_int(sigma);
            if divides_exactly_integral(&q_sq, &target)? {
                found = Some((sigma, exact_quotient(&target, &q_sq)?));
                break;
            }
        }
        let (sigma, b) = found.ok_or_else(|| {
            Error::Precondition("iterate is not +-1 modulo the squared denominator".into())
        })?;
        let eps = SignEpsilon::from_parity(w.len());
        let x1 = eps.apply(&b);
        let x2 = Polynomial::from_int(sigma);
        word.push(x1);
        word.extend(w.iter().rev().map(|a| -a));
        word.push(x2);
        word.extend(w.iter().cloned());
        eval_quotients(&word)?;
        words.push(word.clone());
    }
    Ok(words)
}

/// Iterated duplicating-symmetry words for the partial products
/// P_n = (1 + 1/x)(1 + 1/f) ... (1 + 1/f^n) when f = 2x^2 - 1 mod x(x^2-1).
/// Returns words for P_0 .. P_n; each is palindromic of odd length with
/// integer coefficients, evaluating to the partial product.
pub fn duplicating_product_words(f: &Polynomial, n: usize) -> Result<Vec<Vec<Polynomial>>> {
    if !f.is_integral() || f.degree_i64() < 2 {
        return Err(Error::Precondition(
            "f must be integral of degree > 1".into(),
        ));
    }
    let mut words = Vec::with_capacity(n + 1);
    // P_0 = 1 + 1/x = [1, x-1, 1]
    let mut word = vec![
        Polynomial::one(),
        Polynomial::from_ints(&[-1, 1]),
        Polynomial::one(),
    ];
    words.push(word.clone());
    let mut iterate = Polynomial::x();
    for _ in 0..n {
        iterate = f.compose(&iterate);
        if iterate.degree_i64() > MAX_ITERATED_DEGREE as i64 {
            return Err(Error::Precondition(format!(
                "iterated degree exceeds {MAX_ITERATED_DEGREE}"
            )));
        }
        let conv = convergents(&word);
        let top = word.len() - 1;
        let p = conv.p[top].clone();
        let q = conv.q[top].clone();
        if conv.p[top - 1] != conv.q[top] {
            return Err(Error::Internal("product word lost its palindrome".into()));
        }
        let eps = SignEpsilon::from_parity(top);
        // Solve (p/q)(1 + eps/(q(Xp + 2q) - eps)) = P_{m+1}:
        // X = (eps (f^{m+1} + 1) - 2 q^2) / (p q)
        let numer = &eps.apply(&(&iterate + &Polynomial::one())) - &(&q * &q).scale(&rat(2));
        let x_quot = exact_quotient(&numer, &(&p * &q))?;
        if !x_quot.is_integral() {
            return Err(Error::Internal(
                "duplication quotient is not integral".into(),
            ));
        }
        if x_quot.is_zero() {
            // [w, 0, rev w] collapses: double the center quotient.
            let center = word.pop().unwrap();
            let mut collapsed = word.clone();
            collapsed.push(center.scale(&rat(2)));
            collapsed.extend(word.iter().rev().cloned());
            word = collapsed;
        } else {
            let mut built = word.clone();
            built.push(x_quot);
            built.extend(word.iter().rev().cloned());
            word = built;
        }
        eval_quotients(&word)?;
        words.push(word.clone());
    }
    Ok(words)
}
