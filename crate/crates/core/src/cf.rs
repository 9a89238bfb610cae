//! Continued-fraction words over Q or Q[x]: expansion, evaluation,
//! convergents, normalization to simple form, specializability predicates,
//! and symmetry detection.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};
use crate::ratfunc::RationalFunction;
use crate::ring::{Field, FractionRing, Ring};

/// A finite continued-fraction word. Quotients are homogeneous: all
/// rational or all polynomial.
#[derive(Clone, PartialEq, Debug)]
pub enum CfWord {
    Rational(Vec<Rational>),
    Poly(Vec<Polynomial>),
}

/// Value of a finite continued fraction.
#[derive(Clone, PartialEq, Debug)]
pub enum CfValue {
    Rational(Rational),
    RatFunc(RationalFunction),
}

/// Convergent numerators and denominators, p_n/q_n = [a_0,...,a_n].
#[derive(Clone, PartialEq, Debug)]
pub struct Convergents<R: Ring> {
    pub p: Vec<R>,
    pub q: Vec<R>,
}

impl CfWord {
    pub fn rational(quots: Vec<Rational>) -> Result<Self> {
        if quots.is_empty() {
            return Err(Error::Precondition("empty continued fraction word".into()));
        }
        Ok(CfWord::Rational(quots))
    }

    pub fn poly(quots: Vec<Polynomial>) -> Result<Self> {
        if quots.is_empty() {
            return Err(Error::Precondition("empty continued fraction word".into()));
        }
        Ok(CfWord::Poly(quots))
    }

    pub fn from_ints(quots: &[i64]) -> Self {
        CfWord::Rational(quots.iter().map(|&n| rat(n)).collect())
    }

    pub fn len(&self) -> usize {
        match self {
            CfWord::Rational(q) => q.len(),
            CfWord::Poly(q) => q.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_rational(&self) -> Result<&[Rational]> {
        match self {
            CfWord::Rational(q) => Ok(q),
            CfWord::Poly(_) => Err(Error::Precondition("expected a rational word".into())),
        }
    }

    pub fn as_poly(&self) -> Result<&[Polynomial]> {
        match self {
            CfWord::Poly(q) => Ok(q),
            CfWord::Rational(_) => Err(Error::Precondition("expected a polynomial word".into())),
        }
    }

    pub fn evaluate(&self) -> Result<CfValue> {
        match self {
            CfWord::Rational(q) => Ok(CfValue::Rational(eval_quotients(q)?)),
            CfWord::Poly(q) => Ok(CfValue::RatFunc(eval_quotients(q)?)),
        }
    }

    /// Simple form: integer quotients, all positive after the first, and no
    /// trailing 1 unless the word is [1].
    pub fn is_simple(&self) -> bool {
        let quots = match self {
            CfWord::Rational(q) => q,
            CfWord::Poly(_) => return false,
        };
        if !quots.iter().all(|q| q.is_integer()) {
            return false;
        }
        if quots[1..].iter().any(|q| !q.is_positive()) {
            return false;
        }
        quots.len() == 1 || !quots.last().unwrap().is_one()
    }

    /// True iff every quotient has all-integer coefficients (polynomial
    /// words only).
    pub fn is_specializable(&self) -> Result<bool> {
        Ok(self.as_poly()?.iter().all(|q| q.is_integral()))
    }

    /// True iff not specializable but every coefficient denominator
    /// divides 2.
    pub fn is_semi_specializable(&self) -> Result<bool> {
        let quots = self.as_poly()?;
        let denominators_divide_two = quots.iter().all(|q| {
            q.coeffs()
                .iter()
                .all(|c| (c.denom() == &BigInt::one()) || (c.denom() == &BigInt::from(2)))
        });
        Ok(!self.is_specializable()? && denominators_divide_two)
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        match self {
            CfWord::Rational(quots) => {
                for (i, q) in quots.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{q}")?;
                }
            }
            CfWord::Poly(quots) => {
                for (i, q) in quots.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{q}")?;
                }
            }
        }
        write!(f, "]")
    }
}

impl CfValue {
    pub fn rational(&self) -> Result<&Rational> {
        match self {
            CfValue::Rational(r) => Ok(r),
            CfValue::RatFunc(_) => Err(Error::Precondition("expected a rational value".into())),
        }
    }

    pub fn ratfunc(&self) -> Result<&RationalFunction> {
        match self {
            CfValue::RatFunc(r) => Ok(r),
            CfValue::Rational(_) => {
                Err(Error::Precondition("expected a rational function".into()))
            }
        }
    }
}

impl fmt::Display for CfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfValue::Rational(r) => write!(f, "{r}"),
            CfValue::RatFunc(r) => write!(f, "{r}"),
        }
    }
}

/// Back-to-front evaluation in the fraction field of the quotient ring.
/// Errors with `Singular` when an internal tail evaluates to zero where a
/// reciprocal is taken.
pub fn eval_quotients<R: FractionRing>(quots: &[R]) -> Result<R::Frac> {
    let mut iter = quots.iter().rev();
    let last = iter
        .next()
        .ok_or_else(|| Error::Precondition("empty continued fraction word".into()))?;
    let mut acc = last.to_frac();
    for q in iter {
        let inv = acc.inv().ok_or(Error::Singular)?;
        acc = q.to_frac().add(&inv);
    }
    Ok(acc)
}

/// Convergents by the standard recurrence.
pub fn convergents<R: Ring>(quots: &[R]) -> Convergents<R> {
    let mut p: Vec<R> = Vec::with_capacity(quots.len());
    let mut q: Vec<R> = Vec::with_capacity(quots.len());
    // Seed p_{-1} = 1, q_{-1} = 0.
    let mut prev_p = R::one();
    let mut prev_q = R::zero();
    for (i, a) in quots.iter().enumerate() {
        let (next_p, next_q) = if i == 0 {
            (a.clone(), R::one())
        } else {
            (
                a.mul(&p[i - 1]).add(&prev_p),
                a.mul(&q[i - 1]).add(&prev_q),
            )
        };
        if i > 0 {
            prev_p = p[i - 1].clone();
            prev_q = q[i - 1].clone();
        }
        p.push(next_p);
        q.push(next_q);
    }
    Convergents { p, q }
}

impl<R: Ring> Convergents<R> {
    pub fn last(&self) -> Option<(&R, &R)> {
        Some((self.p.last()?, self.q.last()?))
    }

    /// Checks p_n q_{n-1} - q_n p_{n-1} = (-1)^{n-1} for every n >= 1.
    pub fn determinant_identity_holds(&self) -> bool {
        for n in 1..self.p.len() {
            let det = self.p[n]
                .mul(&self.q[n - 1])
                .sub(&self.q[n].mul(&self.p[n - 1]));
            let expect = if (n - 1) % 2 == 0 {
                R::one()
            } else {
                R::one().neg()
            };
            if det != expect {
                return false;
            }
        }
        true
    }
}

/// Convergents of a word, either ring.
pub fn word_convergents(word: &CfWord) -> CfConvergents {
    match word {
        CfWord::Rational(q) => CfConvergents::Rational(convergents(q)),
        CfWord::Poly(q) => CfConvergents::Poly(convergents(q)),
    }
}

#[derive(Clone, Debug)]
pub enum CfConvergents {
    Rational(Convergents<Rational>),
    Poly(Convergents<Polynomial>),
}

/// Simple continued fraction of a rational: a_0 = floor(r), canonical
/// (no trailing 1 unless the word is a single quotient).
pub fn expand_rational(r: &Rational) -> CfWord {
    let mut quots: Vec<Rational> = Vec::new();
    let mut rest = r.clone();
    loop {
        let a = rest.floor();
        quots.push(a.clone());
        let frac = &rest - &a;
        if Zero::is_zero(&frac) {
            break;
        }
        rest = frac.recip();
    }
    // The floor algorithm never emits a trailing 1 except for r integral.
    debug_assert!(quots.len() == 1 || !quots.last().unwrap().is_one());
    CfWord::Rational(quots)
}

/// Canonical expansion of a rational function under the degree valuation:
/// every quotient after the first has degree >= 1.
pub fn expand_ratfunc(r: &RationalFunction) -> CfWord {
    let mut quots: Vec<Polynomial> = Vec::new();
    let mut numer = r.numer().clone();
    let mut denom = r.denom().clone();
    loop {
        let (quot, rem) = numer.divmod(&denom).expect("nonzero denominator");
        quots.push(quot);
        if rem.is_zero() {
            break;
        }
        numer = denom;
        denom = rem;
    }
    CfWord::Poly(quots)
}

/// Rewrites a rational word with integer quotients (any sign, zeros allowed)
/// into the equivalent simple word. Uses only zero collapse, negative
/// removal [..,a,-b,rest] -> [..,a-1,1,b-1,-rest], and trailing
/// canonicalization; value preservation is checked exactly.
pub fn normalize_to_simple(word: &CfWord) -> Result<CfWord> {
    let quots = word.as_rational()?;
    if !quots.iter().all(|q| q.is_integer()) {
        return Err(Error::Precondition(
            "normalize_to_simple requires integer quotients".into(),
        ));
    }
    let before = eval_quotients(quots)?;
    let mut w: Vec<BigInt> = quots.iter().map(|q| q.to_integer()).collect();
    let mut budget = 10 * w.len().max(4);
    loop {
        if budget == 0 {
            return Err(Error::Internal("normalization budget exceeded".into()));
        }
        budget -= 1;
        if apply_one_rewrite(&mut w)? {
            continue;
        }
        break;
    }
    let out = CfWord::Rational(w.into_iter().map(Rational::from_integer).collect());
    if !out.is_simple() {
        return Err(Error::Internal("normalization did not reach simple form".into()));
    }
    let after = eval_quotients(out.as_rational()?)?;
    if before != after {
        return Err(Error::Internal("normalization changed the value".into()));
    }
    Ok(out)
}

/// One left-to-right rewrite step; true when something changed.
fn apply_one_rewrite(w: &mut Vec<BigInt>) -> Result<bool> {
    let n = w.len();
    // Trailing zero: [.., y, 0] has value p_{n-2}/q_{n-2}; drop both.
    if n >= 3 && w[n - 1].is_zero() {
        w.truncate(n - 2);
        return Ok(true);
    }
    if n == 2 && w[1].is_zero() {
        return Err(Error::Internal("trailing zero leaves a singular word".into()));
    }
    // Interior zero collapse [.., a, 0, b, ..] -> [.., a+b, ..].
    for i in 1..n.saturating_sub(1) {
        if w[i].is_zero() {
            let b = w.remove(i + 1);
            w.remove(i);
            w[i - 1] += b;
            return Ok(true);
        }
    }
    // Leftmost negative after position 0:
    // [.., a, -b, rest] -> [.., a-1, 1, b-1, -rest].
    for i in 1..n {
        if w[i].is_negative() {
            let b = -w[i].clone();
            w[i - 1] -= 1;
            w[i] = BigInt::one();
            w.insert(i + 1, &b - 1);
            for x in w.iter_mut().skip(i + 2) {
                *x = -&*x;
            }
            return Ok(true);
        }
    }
    // Trailing 1: [.., a, 1] -> [.., a+1].
    if n >= 2 && w[n - 1].is_one() {
        w.pop();
        let last = w.len() - 1;
        w[last] += 1;
        return Ok(true);
    }
    Ok(false)
}

/// Applies the identity [a + 1/b, c] = [a, b, -(c+b)/b^2] at `position` of a
/// polynomial word, re-expanding the new tail canonically. The quotient at
/// `position` must have integral non-constant coefficients and a constant
/// term of the form integer + 1/b; a successor quotient must exist.
pub fn adjust_constant_term(word: &CfWord, position: usize) -> Result<CfWord> {
    let quots = word.as_poly()?;
    if position + 1 >= quots.len() {
        return Err(Error::NotAdjustable);
    }
    let target = &quots[position];
    let (a, b) = split_adjustable(target).ok_or(Error::NotAdjustable)?;
    let tail: RationalFunction = eval_quotients(&quots[position + 1..])?;
    let before = eval_quotients(quots)?;
    let new_word = splice_adjustment(&quots[..position], &a, &b, &tail)?;
    let after = eval_quotients(new_word.as_poly()?)?;
    if before != after {
        return Err(Error::Internal("constant-term adjustment changed the value".into()));
    }
    Ok(new_word)
}

/// All (a, b) decompositions quotient = a(x) + 1/b with a integral and b a
/// nonzero integer, ordered by preference (smallest |constant term of a|,
/// then positive b).
pub(crate) fn adjustable_decompositions(q: &Polynomial) -> Vec<(Polynomial, BigInt)> {
    let mut out: Vec<(Polynomial, BigInt)> = Vec::new();
    let t = q.constant_term();
    if t.is_integer() {
        return out;
    }
    if q.coeffs().iter().skip(1).any(|c| !c.is_integer()) {
        return out;
    }
    let n = t.numer().clone();
    let d = t.denom().clone();
    let e_pos = n.mod_floor(&d);
    for e in [e_pos.clone(), &e_pos - &d] {
        if e.is_zero() || !(&d % &e).is_zero() {
            continue;
        }
        let b = &d / &e;
        let a0 = (&n - &e) / &d;
        let mut coeffs = q.coeffs().to_vec();
        coeffs[0] = Rational::from_integer(a0);
        out.push((Polynomial::new(coeffs), b));
    }
    out.sort_by(|x, y| {
        let ax = x.0.constant_term().numer().abs();
        let ay = y.0.constant_term().numer().abs();
        ax.cmp(&ay).then_with(|| y.1.cmp(&x.1))
    });
    out
}

fn split_adjustable(q: &Polynomial) -> Option<(Polynomial, BigInt)> {
    adjustable_decompositions(q).into_iter().next()
}

/// Builds prefix ++ [a, b] ++ expand(-(c+b)/b^2).
pub(crate) fn splice_adjustment(
    prefix: &[Polynomial],
    a: &Polynomial,
    b: &BigInt,
    tail_value: &RationalFunction,
) -> Result<CfWord> {
    let b_rat = Rational::from_integer(b.clone());
    let b_poly = Polynomial::constant(b_rat.clone());
    let b_sq = &b_rat * &b_rat;
    let shifted = tail_value.add(&RationalFunction::from_poly(b_poly.clone()));
    let new_tail = shifted.neg().mul(&RationalFunction::from_poly(
        Polynomial::constant(b_sq.recip()),
    ));
    let mut quots: Vec<Polynomial> = prefix.to_vec();
    quots.push(a.clone());
    if new_tail.is_zero() {
        // [a, b, 0-tail] collapses to the bare polynomial part.
        return CfWord::poly(quots);
    }
    quots.push(b_poly);
    match expand_ratfunc(&new_tail) {
        CfWord::Poly(tail_quots) => quots.extend(tail_quots),
        CfWord::Rational(_) => unreachable!(),
    }
    CfWord::poly(quots)
}

/// Decomposes a word as [a_0, w, x_1, -rev(w), x_2, w, ...] with |w| =
/// half_length and exactly k alternating blocks; None when the shape does
/// not match.
pub fn detect_k_fold_generic<R: Ring>(
    quots: &[R],
    half_length: usize,
    k: usize,
) -> Option<(R, Vec<R>, Vec<R>)> {
    if k < 2 || half_length == 0 {
        return None;
    }
    let expected = 1 + k * half_length + (k - 1);
    if quots.len() != expected {
        return None;
    }
    let a0 = quots[0].clone();
    let w: Vec<R> = quots[1..1 + half_length].to_vec();
    let neg_rev_w: Vec<R> = w.iter().rev().map(|q| q.neg()).collect();
    let mut xs: Vec<R> = Vec::with_capacity(k - 1);
    let mut pos = 1 + half_length;
    for block in 1..k {
        xs.push(quots[pos].clone());
        pos += 1;
        let expect = if block % 2 == 1 { &neg_rev_w } else { &w };
        if &quots[pos..pos + half_length] != expect.as_slice() {
            return None;
        }
        pos += half_length;
    }
    Some((a0, w, xs))
}

/// `detect_k_fold_generic` lifted to `CfWord`.
pub fn detect_k_fold(
    word: &CfWord,
    half_length: usize,
    k: usize,
) -> Option<(CfValue, CfWord, CfWord)> {
    match word {
        CfWord::Rational(q) => detect_k_fold_generic(q, half_length, k).map(|(a0, w, xs)| {
            (
                CfValue::Rational(a0),
                CfWord::Rational(w),
                CfWord::Rational(xs),
            )
        }),
        CfWord::Poly(q) => detect_k_fold_generic(q, half_length, k).map(|(a0, w, xs)| {
            (
                CfValue::RatFunc(a0.to_frac()),
                CfWord::Poly(w),
                CfWord::Poly(xs),
            )
        }),
    }
}

/// A certified prefix of a limit expansion: the longest common prefix of the
/// last two stabilized expansions.
#[derive(Clone, Debug, PartialEq)]
pub struct StablePrefix {
    pub word: CfWord,
    pub certified: bool,
}

/// Longest common prefix of the last two expansions. A single expansion is
/// returned as-is, flagged uncertified.
pub fn stable_prefix(expansions: &[CfWord]) -> Result<StablePrefix> {
    match expansions {
        [] => Err(Error::Precondition("no expansions given".into())),
        [only] => Ok(StablePrefix {
            word: only.clone(),
            certified: false,
        }),
        [.., a, b] => {
            let word = match (a, b) {
                (CfWord::Rational(x), CfWord::Rational(y)) => {
                    CfWord::rational(common_prefix(x, y))?
                }
                (CfWord::Poly(x), CfWord::Poly(y)) => CfWord::poly(common_prefix(x, y))?,
                _ => {
                    return Err(Error::Precondition(
                        "expansions must share a quotient ring".into(),
                    ))
                }
            };
            Ok(StablePrefix {
                word,
                certified: true,
            })
        }
    }
}

fn common_prefix<T: Clone + PartialEq>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b.iter())
        .take_while(|(x, y)| x == y)
        .map(|(x, _)| x.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn expand_rational_examples() {
        assert_eq!(expand_rational(&ratio(10, 7)), CfWord::from_ints(&[1, 2, 3]));
        assert_eq!(expand_rational(&rat(0)), CfWord::from_ints(&[0]));
        assert_eq!(expand_rational(&ratio(-5, 3)), CfWord::from_ints(&[-2, 3]));
    }

    #[test]
    fn expand_ratfunc_examples() {
        // (x+1)/x^2 -> [0, x-1, x+1]
        let w = expand_ratfunc(&rf(&[1, 1], &[0, 0, 1]));
        assert_eq!(w, CfWord::Poly(vec![p(&[0]), p(&[-1, 1]), p(&[1, 1])]));
        // polynomial input -> single quotient
        let w = expand_ratfunc(&RationalFunction::from_poly(p(&[1, 0, 1])));
        assert_eq!(w, CfWord::Poly(vec![p(&[1, 0, 1])]));
        // 1/(x^2-1) -> [0, x^2-1]
        let w = expand_ratfunc(&rf(&[1], &[-1, 0, 1]));
        assert_eq!(w, CfWord::Poly(vec![p(&[0]), p(&[-1, 0, 1])]));
    }

    #[test]
    fn evaluate_examples() {
        let v = CfWord::from_ints(&[0, 2, 3, -2]).evaluate().unwrap();
        assert_eq!(v.rational().unwrap(), &ratio(5, 12));
        let v = CfWord::from_ints(&[5]).evaluate().unwrap();
        assert_eq!(v.rational().unwrap(), &rat(5));
        let w = CfWord::Poly(vec![p(&[0]), p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(w.evaluate().unwrap().ratfunc().unwrap(), &rf(&[1, 1], &[0, 0, 1]));
    }

    #[test]
    fn evaluate_singular() {
        // [1, -1] tail: 1 + 1/(-1) = 0, then reciprocal of 0.
        let w = CfWord::from_ints(&[3, 1, -1]);
        assert_eq!(w.evaluate(), Err(Error::Singular));
    }

    #[test]
    fn convergents_examples() {
        let c = convergents(&CfWord::from_ints(&[0, 1, 4, 2]).as_rational().unwrap().to_vec());
        let ints =
            |v: &[Rational]| v.iter().map(|x| x.to_integer().to_string()).collect::<Vec<_>>();
        assert_eq!(ints(&c.p), ["0", "1", "4", "9"]);
        assert_eq!(ints(&c.q), ["1", "1", "5", "11"]);
        assert!(c.determinant_identity_holds());
        // 9*5 - 11*4 = 1 = (-1)^2
        assert_eq!(rat(9) * rat(5) - rat(11) * rat(4), rat(1));

        let single = convergents(&[rat(7)]);
        assert_eq!(single.p, vec![rat(7)]);
        assert_eq!(single.q, vec![rat(1)]);
    }

    #[test]
    fn word_convergents_both_rings() {
        match word_convergents(&CfWord::from_ints(&[0, 1, 4, 2])) {
            CfConvergents::Rational(c) => assert!(c.determinant_identity_holds()),
            CfConvergents::Poly(_) => panic!("rational word"),
        }
        let w = CfWord::Poly(vec![p(&[0]), p(&[-1, 1]), p(&[1, 1])]);
        match word_convergents(&w) {
            CfConvergents::Poly(c) => {
                assert!(c.determinant_identity_holds());
                let (p_last, q_last) = c.last().unwrap();
                assert_eq!(
                    RationalFunction::new(p_last.clone(), q_last.clone()).unwrap(),
                    rf(&[1, 1], &[0, 0, 1])
                );
            }
            CfConvergents::Rational(_) => panic!("polynomial word"),
        }
    }

    #[test]
    fn convergents_match_evaluate() {
        let w = CfWord::from_ints(&[2, 1, 3, 4]);
        let c = convergents(w.as_rational().unwrap());
        let (p_last, q_last) = c.last().unwrap();
        assert_eq!(
            w.evaluate().unwrap().rational().unwrap(),
            &(p_last / q_last)
        );
    }

    #[test]
    fn normalize_examples() {
        let w = normalize_to_simple(&CfWord::from_ints(&[0, 2, 3, -2])).unwrap();
        assert_eq!(w, CfWord::from_ints(&[0, 2, 2, 2]));
        let w = normalize_to_simple(&CfWord::from_ints(&[1, 0, 3])).unwrap();
        assert_eq!(w, CfWord::from_ints(&[4]));
        // Already simple stays put.
        let w = normalize_to_simple(&CfWord::from_ints(&[-2, 3])).unwrap();
        assert_eq!(w, CfWord::from_ints(&[-2, 3]));
    }

    #[test]
    fn normalize_liouville_fold() {
        let folded = CfWord::from_ints(&[
            0, 5, -4, -5, -100, 5, 4, -5, -1000000000000, 5, -4, -5, 100, 5, 4, -5,
        ]);
        let simple = normalize_to_simple(&folded).unwrap();
        let expected = CfWord::from_ints(&[
            0, 4, 1, 3, 5, 99, 1, 4, 3, 1, 4, 999999999999, 1, 3, 1, 3, 4, 1, 99, 5, 3, 1, 4,
        ]);
        assert_eq!(simple, expected);
    }

    #[test]
    fn normalize_rejects_non_integer() {
        let w = CfWord::Rational(vec![ratio(1, 2)]);
        assert!(normalize_to_simple(&w).is_err());
    }

    #[test]
    fn specializability_predicates() {
        let spec = CfWord::Poly(vec![p(&[0]), p(&[-1, 1]), p(&[1, 1])]);
        assert!(spec.is_specializable().unwrap());
        assert!(!spec.is_semi_specializable().unwrap());

        // [x - 1/3, 9x^2 + 3]: denominator 3 appears.
        let thirds = CfWord::Poly(vec![
            Polynomial::new(vec![ratio(-1, 3), rat(1)]),
            p(&[3, 0, 9]),
        ]);
        assert!(!thirds.is_specializable().unwrap());
        assert!(!thirds.is_semi_specializable().unwrap());

        // [0, x/2 + 1]: denominator 2 only.
        let halves = CfWord::Poly(vec![p(&[0]), Polynomial::new(vec![rat(1), ratio(1, 2)])]);
        assert!(!halves.is_specializable().unwrap());
        assert!(halves.is_semi_specializable().unwrap());
    }

    #[test]
    fn adjust_constant_term_third_split() {
        // [x - 1/3, 9x^2 + 3] = [x, -3, -x^2]
        let w = CfWord::Poly(vec![
            Polynomial::new(vec![ratio(-1, 3), rat(1)]),
            p(&[3, 0, 9]),
        ]);
        let adjusted = adjust_constant_term(&w, 0).unwrap();
        assert_eq!(
            adjusted,
            CfWord::Poly(vec![p(&[0, 1]), p(&[-3]), p(&[0, 0, -1])])
        );
        assert_eq!(
            w.evaluate().unwrap().ratfunc().unwrap(),
            adjusted.evaluate().unwrap().ratfunc().unwrap()
        );
    }

    #[test]
    fn adjust_constant_term_half_example() {
        // [x - 1/2, 4x^2 + 2] -> [x, -2, ...] with the value preserved.
        let w = CfWord::Poly(vec![
            Polynomial::new(vec![ratio(-1, 2), rat(1)]),
            p(&[2, 0, 4]),
        ]);
        let adjusted = adjust_constant_term(&w, 0).unwrap();
        let quots = adjusted.as_poly().unwrap();
        assert_eq!(quots[0], p(&[0, 1]));
        assert_eq!(quots[1], p(&[-2]));
        assert_eq!(
            w.evaluate().unwrap().ratfunc().unwrap(),
            adjusted.evaluate().unwrap().ratfunc().unwrap()
        );
    }

    #[test]
    fn adjust_constant_term_requires_successor() {
        let w = CfWord::Poly(vec![Polynomial::new(vec![ratio(-1, 3), rat(1)])]);
        assert_eq!(adjust_constant_term(&w, 0), Err(Error::NotAdjustable));
    }

    #[test]
    fn detect_k_fold_examples() {
        let w = CfWord::from_ints(&[0, 2, 3, -2]);
        let (a0, inner, xs) = detect_k_fold(&w, 1, 2).unwrap();
        assert_eq!(a0, CfValue::Rational(rat(0)));
        assert_eq!(inner, CfWord::from_ints(&[2]));
        assert_eq!(xs, CfWord::from_ints(&[3]));

        let w = CfWord::from_ints(&[0, 2, 1, -2, 1, 2]);
        let (_, inner, xs) = detect_k_fold(&w, 1, 3).unwrap();
        assert_eq!(inner, CfWord::from_ints(&[2]));
        assert_eq!(xs, CfWord::from_ints(&[1, 1]));

        assert!(detect_k_fold(&CfWord::from_ints(&[0, 1, 2, 3]), 1, 2).is_none());
    }

    #[test]
    fn stable_prefix_examples() {
        let a = CfWord::from_ints(&[0, 1]);
        let b = CfWord::from_ints(&[0, 2]);
        let sp = stable_prefix(&[a.clone(), b]).unwrap();
        assert_eq!(sp.word, CfWord::from_ints(&[0]));
        assert!(sp.certified);

        let sp = stable_prefix(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(sp.word, a);

        let sp = stable_prefix(&[a.clone()]).unwrap();
        assert!(!sp.certified);
        assert!(stable_prefix(&[]).is_err());

        // only the last two expansions matter
        let noise = CfWord::from_ints(&[7, 7, 7]);
        let c = CfWord::from_ints(&[0, 1, 4, 2]);
        let d = CfWord::from_ints(&[0, 1, 4, 5]);
        let sp = stable_prefix(&[noise, c, d]).unwrap();
        assert_eq!(sp.word, CfWord::from_ints(&[0, 1, 4]));
    }

    #[test]
    fn display_is_bit_exact_for_large_quotients() {
        let huge: Rational = "340282366920938463481821351505477763072".parse().unwrap();
        let w = CfWord::Rational(vec![rat(0), huge]);
        assert_eq!(
            w.to_string(),
            "[0, 340282366920938463481821351505477763072]"
        );
    }
}
