//! Continuant polynomials with a sign parameter.
//!
//! K'() = 1, K'(x1) = x1, K'(x1, x2) = x1 x2 + eps, and
//! K'(x1..xk) = K'(x1..x_{k-1}) xk + eps K'(x1..x_{k-2}).
//! With eps = +1 these are the classical continuants.

use crate::error::{Error, Result};
use crate::ring::{Field, FractionRing, Ring};

/// The sign parameter, +1 or -1. In folding applications it is always
/// bound to (-1)^n for the half-word length n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignEpsilon {
    Plus,
    Minus,
}

impl SignEpsilon {
    /// (-1)^n.
    pub fn from_parity(n: usize) -> Self {
        if n.is_multiple_of(2) {
            SignEpsilon::Plus
        } else {
            SignEpsilon::Minus
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            SignEpsilon::Plus => 1,
            SignEpsilon::Minus => -1,
        }
    }

    pub fn ring_value<R: Ring>(self) -> R {
        R::from_int(self.as_int())
    }

    /// Applies the sign to a ring element.
    pub fn apply<R: Ring>(self, v: &R) -> R {
        match self {
            SignEpsilon::Plus => v.clone(),
            SignEpsilon::Minus => v.neg(),
        }
    }
}

/// Modified continuant K' over any exact ring. The empty sequence gives 1.
pub fn modified_continuant<R: Ring>(values: &[R], eps: SignEpsilon) -> R {
    match values {
        [] => R::one(),
        [x] => x.clone(),
        _ => {
            let mut two_back = R::one();
            let mut prev = values[0].clone();
            for x in &values[1..] {
                let next = prev.mul(x).add(&eps.apply(&two_back));
                two_back = prev;
                prev = next;
            }
            prev
        }
    }
}

/// Self-test of the leading-variable recurrence
/// K'(x1..xk) = x1 K'(x2..xk) + eps K'(x3..xk).
pub fn leading_recurrence_check<R: Ring>(values: &[R], eps: SignEpsilon) -> bool {
    if values.len() < 2 {
        return false;
    }
    let whole = modified_continuant(values, eps);
    let tail = modified_continuant(&values[1..], eps);
    let tail2 = modified_continuant(&values[2..], eps);
    whole == values[0].mul(&tail).add(&eps.apply(&tail2))
}

/// Evaluates x1 + eps/(x2 + eps/(... + eps/xm)) in the fraction field;
/// equals K'(x1..xm)/K'(x2..xm) when nonsingular.
pub fn eval_epsilon_cf<R: FractionRing>(values: &[R], eps: SignEpsilon) -> Result<R::Frac> {
    let mut iter = values.iter().rev();
    let last = iter
        .next()
        .ok_or_else(|| Error::Precondition("empty epsilon continued fraction".into()))?;
    let mut acc = last.to_frac();
    let eps_frac: R::Frac = eps.ring_value();
    for x in iter {
        let inv = acc.inv().ok_or(Error::Singular)?;
        acc = x.to_frac().add(&eps_frac.mul(&inv));
    }
    Ok(acc)
}

/// Brute-force combinatorial K': sum over collections of disjoint adjacent
/// pairs, each matched pair contributing eps. Test oracle for small lengths.
pub fn continuant_by_matchings<R: Ring>(values: &[R], eps: SignEpsilon) -> R {
    fn go<R: Ring>(values: &[R], eps: SignEpsilon) -> R {
        if values.is_empty() {
            return R::one();
        }
        if values.len() == 1 {
            return values[0].clone();
        }
        // First variable unmatched, or matched with the second.
        let unmatched = values[0].mul(&go(&values[1..], eps));
        let matched = eps.apply(&go(&values[2..], eps));
        unmatched.add(&matched)
    }
    go(values, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio, Rational};

    #[test]
    fn base_cases() {
        assert_eq!(modified_continuant::<Rational>(&[], SignEpsilon::Plus), rat(1));
        assert_eq!(modified_continuant(&[rat(7)], SignEpsilon::Minus), rat(7));
        assert_eq!(
            modified_continuant(&[rat(2), rat(3)], SignEpsilon::Plus),
            rat(7)
        );
        assert_eq!(
            modified_continuant(&[rat(2), rat(3)], SignEpsilon::Minus),
            rat(5)
        );
    }

    #[test]
    fn three_term_examples() {
        let v = [rat(2), rat(3), rat(4)];
        assert_eq!(modified_continuant(&v, SignEpsilon::Plus), rat(30));
        assert_eq!(modified_continuant(&v, SignEpsilon::Minus), rat(18));
    }

    #[test]
    fn leading_recurrence() {
        let v = [rat(2), rat(3), rat(4)];
        assert!(leading_recurrence_check(&v, SignEpsilon::Plus));
        assert!(leading_recurrence_check(&v, SignEpsilon::Minus));
        assert!(leading_recurrence_check(&[rat(-5), rat(7)], SignEpsilon::Plus));
        assert!(!leading_recurrence_check(&[rat(1)], SignEpsilon::Plus));
    }

    #[test]
    fn epsilon_cf_examples() {
        // 2 - 1/(3 - 1/4) = 18/11
        let v = [rat(2), rat(3), rat(4)];
        assert_eq!(
            eval_epsilon_cf(&v, SignEpsilon::Minus).unwrap(),
            ratio(18, 11)
        );
        assert_eq!(
            eval_epsilon_cf(&v, SignEpsilon::Plus).unwrap(),
            ratio(30, 13)
        );
        assert_eq!(eval_epsilon_cf(&[rat(9)], SignEpsilon::Minus).unwrap(), rat(9));
    }

    #[test]
    fn epsilon_cf_singular() {
        // 1 - 1/1 = 0, then a reciprocal of zero.
        let v = [rat(5), rat(1), rat(1)];
        assert_eq!(
            eval_epsilon_cf(&v, SignEpsilon::Minus),
            Err(crate::error::Error::Singular)
        );
    }

    #[test]
    fn matches_combinatorial_definition() {
        let vals = [rat(2), rat(-3), rat(5), rat(1), rat(-2), rat(4)];
        for len in 0..=vals.len() {
            for eps in [SignEpsilon::Plus, SignEpsilon::Minus] {
                assert_eq!(
                    modified_continuant(&vals[..len], eps),
                    continuant_by_matchings(&vals[..len], eps),
                );
            }
        }
    }

    #[test]
    fn plus_sign_recovers_classical_continuants() {
        // With eps = +1, K'(a0..an) is the numerator p_n of [a0,..,an].
        let words: [&[i64]; 4] = [&[3], &[2, 7], &[1, 2, 3, 4], &[0, 1, 4, 2, 5]];
        for word in words {
            let vals: Vec<Rational> = word.iter().map(|&n| rat(n)).collect();
            let conv = crate::cf::convergents(&vals);
            assert_eq!(
                modified_continuant(&vals, SignEpsilon::Plus),
                conv.p.last().unwrap().clone()
            );
        }
    }
}
