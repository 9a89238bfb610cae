//! Symmetry constructions on continued fractions: folding, k-fold symmetry
//! with its continuant closed form, the epsilon-CF corollary form, the
//! partial-sum 4-fold proposition, the [a0,w,X,rev w,1,-w] identity, and
//! duplicating symmetry.

use crate::continuants::{eval_epsilon_cf, modified_continuant, SignEpsilon};
use crate::error::{Error, Result};
use crate::cf::{convergents, eval_quotients};
use crate::ring::{Field, FractionRing, Ring};

/// Data for a k-fold construction: the word is
/// [a0, w, x_1, -rev(w), x_2, w, ...] with k = |xs| + 1 blocks.
#[derive(Clone, Debug)]
pub struct FoldSpec<R: Ring> {
    pub a0: R,
    pub w: Vec<R>,
    pub xs: Vec<R>,
}

impl<R: FractionRing> FoldSpec<R> {
    pub fn new(a0: R, w: Vec<R>, xs: Vec<R>) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::Precondition("k-fold needs k = |xs| + 1 >= 2".into()));
        }
        if w.is_empty() {
            return Err(Error::Precondition("k-fold needs a nonempty word w".into()));
        }
        Ok(FoldSpec { a0, w, xs })
    }

    pub fn k(&self) -> usize {
        self.xs.len() + 1
    }

    fn base_word(&self) -> Vec<R> {
        let mut word = Vec::with_capacity(self.w.len() + 1);
        word.push(self.a0.clone());
        word.extend(self.w.iter().cloned());
        word
    }

    /// (p_n, q_n, q_{n-1}) of [a0, w] plus eps = (-1)^n with n = |w|.
    fn head_convergents(&self) -> Result<(R, R, R, SignEpsilon)> {
        let base = self.base_word();
        eval_quotients(&base)?; // nonsingular head required
        let conv = convergents(&base);
        let n = self.w.len();
        let p = conv.p[n].clone();
        let q = conv.q[n].clone();
        let q_prev = conv.q[n - 1].clone();
        Ok((p, q, q_prev, SignEpsilon::from_parity(n)))
    }
}

/// The folded word [a0, w, x, -rev(w)]. Its value is
/// p_n/q_n + (-1)^n / (x q_n^2).
pub fn fold_once<R: FractionRing>(a0: &R, w: &[R], x: &R) -> Result<Vec<R>> {
    let spec = FoldSpec::new(a0.clone(), w.to_vec(), vec![x.clone()])?;
    if x.is_zero() {
        return Err(Error::Precondition("fold quotient x must be nonzero".into()));
    }
    k_fold_build(&spec)
}

/// Assembles the k-fold word, alternating w and -rev(w) blocks separated by
/// the x quotients. Errors when the result is singular.
pub fn k_fold_build<R: FractionRing>(spec: &FoldSpec<R>) -> Result<Vec<R>> {
    let neg_rev: Vec<R> = spec.w.iter().rev().map(|a| a.neg()).collect();
    let mut word = spec.base_word();
    for (i, x) in spec.xs.iter().enumerate() {
        word.push(x.clone());
        if i % 2 == 0 {
            word.extend(neg_rev.iter().cloned());
        } else {
            word.extend(spec.w.iter().cloned());
        }
    }
    eval_quotients(&word)?;
    Ok(word)
}

/// Closed form of the k-fold value:
/// p/q + (-1)^n K'(x_2 q, ..., x_{k-1} q) / (q K'(x_1 q, ..., x_{k-1} q))
/// with eps = (-1)^n bound inside K'.
pub fn k_fold_value<R: FractionRing>(spec: &FoldSpec<R>) -> Result<R::Frac> {
    let (p, q, _, eps) = spec.head_convergents()?;
    let scaled: Vec<R> = spec.xs.iter().map(|x| x.mul(&q)).collect();
    let numer = modified_continuant(&scaled[1..], eps);
    let denom = q.mul(&modified_continuant(&scaled, eps));
    let head = p.to_frac().div(&q.to_frac()).ok_or(Error::Singular)?;
    let tail = eps
        .apply(&numer)
        .to_frac()
        .div(&denom.to_frac())
        .ok_or(Error::Singular)?;
    Ok(head.add(&tail))
}

/// Equivalent epsilon-continued-fraction form:
/// p/q + (1/q) * eps/(x_1 q + eps/(x_2 q + ... + eps/(x_{k-1} q))).
pub fn corfrac_value<R: FractionRing>(spec: &FoldSpec<R>) -> Result<R::Frac> {
    let (p, q, _, eps) = spec.head_convergents()?;
    let scaled: Vec<R> = spec.xs.iter().map(|x| x.mul(&q)).collect();
    let inner = eval_epsilon_cf(&scaled, eps)?;
    let eps_frac: R::Frac = eps.ring_value();
    let head = p.to_frac().div(&q.to_frac()).ok_or(Error::Singular)?;
    let tail = eps_frac
        .div(&inner)
        .ok_or(Error::Singular)?
        .div(&q.to_frac())
        .ok_or(Error::Singular)?;
    Ok(head.add(&tail))
}

/// The x_3 that gives the partial geometric sum 4-fold symmetry:
/// x_3 = -x_1 (1 - (-x_1/X_3)^j) / (1 - (-x_1/X_3)) with
/// X_3 = (-1)^n / (x_2 q^2).
pub fn parsums_x3<F: Field>(
    x1: &F,
    x2: &F,
    q: &F,
    parity: SignEpsilon,
    j: u32,
) -> Result<F> {
    if x1.is_zero() {
        return Err(Error::Precondition("x_1 must be nonzero".into()));
    }
    if j == 0 {
        return Err(Error::Precondition("j must be at least 1".into()));
    }
    let eps: F = parity.ring_value();
    let q_sq = q.mul(q);
    let x3_cap = eps.div(&x2.mul(&q_sq)).ok_or(Error::Singular)?;
    // ratio = -x_1 / X_3
    let ratio = x1.neg().div(&x3_cap).ok_or(Error::Singular)?;
    let one = F::one();
    let denom = one.sub(&ratio);
    if denom.is_zero() {
        return Err(Error::Precondition(
            "geometric ratio 1 makes the formula denominator vanish".into(),
        ));
    }
    let mut ratio_pow = F::one();
    for _ in 0..j {
        ratio_pow = ratio_pow.mul(&ratio);
    }
    let numer = one.sub(&ratio_pow);
    let frac = numer.div(&denom).ok_or(Error::Singular)?;
    Ok(x1.neg().mul(&frac))
}

/// Checks the partial-sum identity behind `parsums_x3` (p/q cancels):
/// eps/(x_1 q^2) * sum_{i=0..j} (-X_3/x_1)^i
///   = eps K'(x_2 q, x_3 q) / (q K'(x_1 q, x_2 q, x_3 q)).
pub fn parsums_identity_holds<F: Field>(
    x1: &F,
    x2: &F,
    q: &F,
    parity: SignEpsilon,
    j: u32,
) -> Result<bool> {
    let x3 = parsums_x3(x1, x2, q, parity, j)?;
    let eps: F = parity.ring_value();
    let q_sq = q.mul(q);
    let x3_cap = eps.div(&x2.mul(&q_sq)).ok_or(Error::Singular)?;
    let neg_ratio = x3_cap.div(x1).ok_or(Error::Singular)?.neg();
    let mut geo = F::zero();
    let mut pow = F::one();
    for _ in 0..=j {
        geo = geo.add(&pow);
        pow = pow.mul(&neg_ratio);
    }
    let lhs = eps
        .div(&x1.mul(&q_sq))
        .ok_or(Error::Singular)?
        .mul(&geo);
    let args = [x1.mul(q), x2.mul(q), x3.mul(q)];
    let rhs_numer = parity.apply(&modified_continuant(&args[1..], parity));
    let rhs_denom = q.mul(&modified_continuant(&args, parity));
    let rhs = rhs_numer.div(&rhs_denom).ok_or(Error::Singular)?;
    Ok(lhs == rhs)
}

/// Builds [a0, w, X, rev(w), 1, -w] and its closed value
/// p_n/q_n + 1/(q_n (X q_n + 2 q_{n-1}) (-1)^n + 1).
pub fn help_build<R: FractionRing>(a0: &R, w: &[R], x_quot: &R) -> Result<(Vec<R>, R::Frac)> {
    let spec = FoldSpec::new(a0.clone(), w.to_vec(), vec![x_quot.clone()])?;
    let (p, q, q_prev, eps) = spec.head_convergents()?;

    let mut word = spec.base_word();
    word.push(x_quot.clone());
    word.extend(w.iter().rev().cloned());
    word.push(R::one());
    word.extend(w.iter().map(|a| a.neg()));
    eval_quotients(&word)?;

    let two = R::from_int(2);
    let inner = x_quot.mul(&q).add(&two.mul(&q_prev));
    let denom = eps.apply(&q.mul(&inner)).add(&R::one());
    let tail = R::one()
        .to_frac()
        .div(&denom.to_frac())
        .ok_or(Error::Singular)?;
    let head = p.to_frac().div(&q.to_frac()).ok_or(Error::Singular)?;
    Ok((word, head.add(&tail)))
}

/// Duplicating symmetry: for a word a_0..a_n with p_{n-1} = q_n, builds
/// [a_0..a_n, x, a_n..a_0] whose value is
/// (p_n/q_n) (1 + (-1)^n / (q_n (x p_n + 2 q_n) + (-1)^{n-1})).
pub fn duplicate_build<R: FractionRing>(word: &[R], x_quot: &R) -> Result<(Vec<R>, R::Frac)> {
    if word.len() < 2 {
        return Err(Error::Precondition(
            "duplicating symmetry needs a word of length >= 2".into(),
        ));
    }
    eval_quotients(word)?;
    let conv = convergents(word);
    let n = word.len() - 1;
    if conv.p[n - 1] != conv.q[n] {
        return Err(Error::NotPalindromic);
    }
    let p = conv.p[n].clone();
    let q = conv.q[n].clone();
    let eps = SignEpsilon::from_parity(n);

    let mut built = word.to_vec();
    built.push(x_quot.clone());
    built.extend(word.iter().rev().cloned());
    eval_quotients(&built)?;

    let two = R::from_int(2);
    let inner = q.mul(&x_quot.mul(&p).add(&two.mul(&q)));
    let denom = inner.add(&eps.apply(&R::one()).neg());
    let frac = eps
        .ring_value::<R>()
        .to_frac()
        .div(&denom.to_frac())
        .ok_or(Error::Singular)?;
    let head = p.to_frac().div(&q.to_frac()).ok_or(Error::Singular)?;
    Ok((built, head.mul(&R::one().to_frac().add(&frac))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::CfWord;
    use crate::poly::Polynomial;
    use crate::rational::{rat, ratio, Rational};
    use crate::ratfunc::RationalFunction;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| rat(n)).collect()
    }

    #[test]
    fn fold_once_example() {
        let word = fold_once(&rat(0), &rats(&[2]), &rat(3)).unwrap();
        assert_eq!(CfWord::Rational(word.clone()), CfWord::from_ints(&[0, 2, 3, -2]));
        assert_eq!(eval_quotients(&word).unwrap(), ratio(5, 12));
        // p/q + (-1)^n/(x q^2) = 1/2 - 1/12
        let spec = FoldSpec::new(rat(0), rats(&[2]), rats(&[3])).unwrap();
        assert_eq!(k_fold_value(&spec).unwrap(), ratio(5, 12));
    }

    #[test]
    fn fold_once_rejects_zero_x() {
        assert!(fold_once(&rat(0), &rats(&[2]), &rat(0)).is_err());
    }

    #[test]
    fn k_fold_build_examples() {
        let spec = FoldSpec::new(rat(0), rats(&[2]), rats(&[1, 1])).unwrap();
        let word = k_fold_build(&spec).unwrap();
        assert_eq!(CfWord::Rational(word), CfWord::from_ints(&[0, 2, 1, -2, 1, 2]));

        let spec = FoldSpec::new(rat(0), rats(&[1, 2]), rats(&[5, 7, 9])).unwrap();
        let word = k_fold_build(&spec).unwrap();
        assert_eq!(word.len(), 12);
        assert_eq!(
            CfWord::Rational(word),
            CfWord::from_ints(&[0, 1, 2, 5, -2, -1, 7, 1, 2, 9, -2, -1])
        );
    }

    #[test]
    fn k_fold_value_examples() {
        // (0, [2], [1,1]): 1/2 + (-1) * 2 / (2 * 3) = 1/6
        let spec = FoldSpec::new(rat(0), rats(&[2]), rats(&[1, 1])).unwrap();
        assert_eq!(k_fold_value(&spec).unwrap(), ratio(1, 6));
        let word = k_fold_build(&spec).unwrap();
        assert_eq!(eval_quotients(&word).unwrap(), ratio(1, 6));
        assert_eq!(corfrac_value(&spec).unwrap(), ratio(1, 6));
    }

    #[test]
    fn parsums_examples() {
        // x1=1, x2=-1, q=2, n even: j=1 -> -1, j=2 -> -5
        let x3 = parsums_x3(&rat(1), &rat(-1), &rat(2), SignEpsilon::Plus, 1).unwrap();
        assert_eq!(x3, rat(-1));
        let x3 = parsums_x3(&rat(1), &rat(-1), &rat(2), SignEpsilon::Plus, 2).unwrap();
        assert_eq!(x3, rat(-5));
        assert!(
            parsums_identity_holds(&rat(1), &rat(-1), &rat(2), SignEpsilon::Plus, 2).unwrap()
        );
    }

    #[test]
    fn parsums_x3_is_integral_on_the_power_of_x_shape() {
        // The four-fold application uses q a power of x, x1 = +-1, x2 = -1,
        // j = 3; x3 then lands in Z[x].
        for exp in [1usize, 2, 4] {
            for x1_sign in [1i64, -1] {
                for parity in [SignEpsilon::Plus, SignEpsilon::Minus] {
                    let q = RationalFunction::from_poly(Polynomial::monomial(rat(1), exp));
                    let x1 = RationalFunction::from_poly(Polynomial::constant(rat(x1_sign)));
                    let x2 = RationalFunction::from_poly(Polynomial::constant(rat(-1)));
                    let x3 = parsums_x3(&x1, &x2, &q, parity, 3).unwrap();
                    let poly = x3.as_polynomial().expect("x3 is a polynomial");
                    assert!(poly.is_integral(), "x3 = {poly} should be integral");
                    assert!(parsums_identity_holds(&x1, &x2, &q, parity, 3).unwrap());
                }
            }
        }
    }

    #[test]
    fn help_build_examples() {
        // a0=0, w=[2], X=1: word [0,2,1,2,1,-2], value 1/2 - 1/7 = 5/14
        let (word, value) = help_build(&rat(0), &rats(&[2]), &rat(1)).unwrap();
        assert_eq!(CfWord::Rational(word.clone()), CfWord::from_ints(&[0, 2, 1, 2, 1, -2]));
        assert_eq!(value, ratio(5, 14));
        assert_eq!(eval_quotients(&word).unwrap(), ratio(5, 14));

        // X = 0: value 1/2 + 1/(-2(0+2)+1) = 1/6
        let (word, value) = help_build(&rat(0), &rats(&[2]), &rat(0)).unwrap();
        assert_eq!(value, ratio(1, 6));
        assert_eq!(eval_quotients(&word).unwrap(), ratio(1, 6));
    }

    #[test]
    fn duplicate_examples() {
        // [1,1] with x = 1: [1,1,1,1,1] = 8/5
        let (word, value) = duplicate_build(&rats(&[1, 1]), &rat(1)).unwrap();
        assert_eq!(CfWord::Rational(word.clone()), CfWord::from_ints(&[1, 1, 1, 1, 1]));
        assert_eq!(value, ratio(8, 5));
        assert_eq!(eval_quotients(&word).unwrap(), ratio(8, 5));

        // non-palindromic word rejected
        assert_eq!(
            duplicate_build(&rats(&[1, 2]), &rat(1)).unwrap_err(),
            Error::NotPalindromic
        );
    }

    #[test]
    fn duplicate_poly_example() {
        // [1, x-1, 1] with x-quotient 0 collapses to P_1 = 2x(x+1)/(2x^2-1).
        let word = vec![p(&[1]), p(&[-1, 1]), p(&[1])];
        let (built, value) = duplicate_build(&word, &Polynomial::zero()).unwrap();
        assert_eq!(built.len(), 7);
        let expected =
            RationalFunction::new(p(&[0, 2, 2]), p(&[-1, 0, 2])).unwrap();
        assert_eq!(value, expected);
        assert_eq!(eval_quotients(&built).unwrap(), expected);
    }
}
