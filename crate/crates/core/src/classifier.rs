//! Decides specializability of the series 1/x + 1/f(x) + 1/f^2(x) + ...
//! via fourteen congruence conditions, with an independent brute-force
//! oracle built on canonical expansion plus constant-term adjustment.

use crate::cf::{adjustable_decompositions, expand_ratfunc, eval_quotients, splice_adjustment, CfWord};
use crate::error::{Error, Result};
use crate::generators::sum_partial_symbolic;
use crate::poly::{divides_in_integer_ring, Polynomial};
use crate::ratfunc::RationalFunction;

/// Outcome of matching f against the fourteen congruences.
#[derive(Clone, Debug, PartialEq)]
pub enum CongruenceCase {
    Case {
        id: usize,
        modulus: Polynomial,
        residue: Polynomial,
    },
    NoMatch,
}

impl CongruenceCase {
    pub fn id(&self) -> Option<usize> {
        match self {
            CongruenceCase::Case { id, .. } => Some(*id),
            CongruenceCase::NoMatch => None,
        }
    }
}

/// Quadratic families with specializable series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadraticFamily {
    KxSquared,
    KxSquaredMinusX,
    X2MinusXPlus1,
    X2Minus2xPlus1,
    NegX2MinusXMinus1,
    NegX2Minus2xMinus1,
    None,
}

/// Tri-state oracle verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Yes,
    No,
    Unknown,
}

fn poly(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(coeffs)
}

/// The fourteen (id, modulus, residue) pairs, in order.
pub fn fourteen_congruences() -> Vec<(usize, Polynomial, Polynomial)> {
    let x2 = poly(&[0, 0, 1]);
    let x2_xm1 = poly(&[0, 0, -1, 1]); // x^2 (x - 1)
    let x2_xp1 = poly(&[0, 0, 1, 1]); // x^2 (x + 1)
    let x2_xm1_sq = poly(&[0, 0, 1, -2, 1]); // x^2 (x - 1)^2
    let x2_xp1_sq = poly(&[0, 0, 1, 2, 1]); // x^2 (x + 1)^2
    vec![
        (1, x2.clone(), Polynomial::zero()),
        (2, x2, poly(&[0, -1])),
        (3, x2_xm1, Polynomial::one()),
        (4, x2_xp1, poly(&[-1])),
        (5, x2_xm1_sq.clone(), poly(&[1, -1, -1, 1])),
        (6, x2_xm1_sq.clone(), poly(&[1, -1, 2, -1])),
        (7, x2_xm1_sq.clone(), poly(&[1, -2, 3, -1])),
        (8, x2_xp1_sq.clone(), poly(&[-1, -1, 1, 1])),
        (9, x2_xp1_sq.clone(), poly(&[-1, -1, -2, -1])),
        (10, x2_xp1_sq.clone(), poly(&[-1, -2, -3, -1])),
        (11, x2_xm1_sq.clone(), poly(&[1, -1, 1])),
        (12, x2_xm1_sq, poly(&[1, -2, 1])),
        (13, x2_xp1_sq.clone(), poly(&[-1, -1, -1])),
        (14, x2_xp1_sq, poly(&[-1, -2, -1])),
    ]
}

fn require_integral_deg2(f: &Polynomial) -> Result<()> {
    if !f.is_integral() {
        return Err(Error::Precondition(
            "f must have integer coefficients".into(),
        ));
    }
    if f.degree_i64() < 2 {
        return Err(Error::Precondition("f must have degree > 1".into()));
    }
    Ok(())
}

/// Tests the fourteen congruences in order; returns the first match.
pub fn classify_fourteen(f: &Polynomial) -> Result<CongruenceCase> {
    require_integral_deg2(f)?;
    for (id, modulus, residue) in fourteen_congruences() {
        if divides_in_integer_ring(&modulus, &(f - &residue))? {
            return Ok(CongruenceCase::Case {
                id,
                modulus,
                residue,
            });
        }
    }
    Ok(CongruenceCase::NoMatch)
}

/// All matching congruence ids, for overlap checks.
pub fn matching_case_ids(f: &Polynomial) -> Result<Vec<usize>> {
    require_integral_deg2(f)?;
    let mut ids = Vec::new();
    for (id, modulus, residue) in fourteen_congruences() {
        if divides_in_integer_ring(&modulus, &(f - &residue))? {
            ids.push(id);
        }
    }
    Ok(ids)
}

/// Family tag for quadratic f; must agree with `classify_fourteen`.
pub fn classify_quadratic(f: &Polynomial) -> Result<QuadraticFamily> {
    if f.degree_i64() != 2 {
        return Err(Error::Precondition("f must have degree exactly 2".into()));
    }
    if !f.is_integral() {
        return Err(Error::Precondition(
            "f must have integer coefficients".into(),
        ));
    }
    let c0 = f.coeff(0);
    let c1 = f.coeff(1);
    use num_traits::Zero;
    if Zero::is_zero(&c0) && Zero::is_zero(&c1) {
        return Ok(QuadraticFamily::KxSquared);
    }
    if Zero::is_zero(&c0) && c1 == crate::rational::rat(-1) {
        return Ok(QuadraticFamily::KxSquaredMinusX);
    }
    if *f == poly(&[1, -1, 1]) {
        return Ok(QuadraticFamily::X2MinusXPlus1);
    }
    if *f == poly(&[1, -2, 1]) {
        return Ok(QuadraticFamily::X2Minus2xPlus1);
    }
    if *f == poly(&[-1, -1, -1]) {
        return Ok(QuadraticFamily::NegX2MinusXMinus1);
    }
    if *f == poly(&[-1, -2, -1]) {
        return Ok(QuadraticFamily::NegX2Minus2xMinus1);
    }
    Ok(QuadraticFamily::None)
}

/// True iff f mod x^2 lies in {0, -1, 1, -x, -x-1, -x+1, -2x, -2x-1, -2x+1},
/// equivalently 1/x + 1/f(x) has a specializable continued fraction.
pub fn check_two_term_lemma(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Precondition("f must be nonzero".into()));
    }
    if !f.is_integral() {
        return Err(Error::Precondition(
            "f must have integer coefficients".into(),
        ));
    }
    let c0 = f.coeff(0);
    let c1 = f.coeff(1);
    let linear_ok = [0i64, -1, -2].iter().any(|&v| c1 == crate::rational::rat(v));
    let const_ok = [-1i64, 0, 1].iter().any(|&v| c0 == crate::rational::rat(v));
    Ok(linear_ok && const_ok)
}

/// Residues of f modulo the six moduli the congruence conditions use.
pub fn residue_report(f: &Polynomial) -> Result<Vec<(Polynomial, Polynomial)>> {
    if !f.is_integral() {
        return Err(Error::Precondition(
            "f must have integer coefficients".into(),
        ));
    }
    let moduli = [
        poly(&[0, 0, 1]),
        poly(&[0, 0, -1, 1]),
        poly(&[0, 0, 1, 1]),
        poly(&[0, 0, 1, -2, 1]),
        poly(&[0, 0, 1, 2, 1]),
        poly(&[0, -1, 0, 1]),
    ];
    let mut out = Vec::with_capacity(moduli.len());
    for m in moduli {
        let (_, rem) = f.divmod(&m)?;
        out.push((m, rem));
    }
    Ok(out)
}

/// Classification of one quotient's coefficients.
enum QuotientShape {
    Integral,
    ConstantOnly,
    BadNonConstant,
}

fn quotient_shape(q: &Polynomial) -> QuotientShape {
    let mut constant_bad = false;
    for (k, c) in q.coeffs().iter().enumerate() {
        if !c.is_integer() {
            if k == 0 {
                constant_bad = true;
            } else {
                return QuotientShape::BadNonConstant;
            }
        }
    }
    if constant_bad {
        QuotientShape::ConstantOnly
    } else {
        QuotientShape::Integral
    }
}

/// Result of the constant-term adjustment search.
enum AdjustOutcome {
    /// An all-integral word was reached.
    Integral(Vec<Polynomial>),
    /// Every branch hit a structural dead end: a quotient with a
    /// non-integral non-constant coefficient, or a constant term that is
    /// not of the form integer + 1/b.
    Dead,
    /// The rewrite budget ran out before the search settled.
    OutOfBudget,
}

/// Searches for an all-integral word reachable from `word` by constant-term
/// adjustments (interior splice or terminal split), within `budget`
/// rewrites.
fn adjust_to_integral(word: Vec<Polynomial>, budget: &mut usize) -> Result<AdjustOutcome> {
    let first_bad = word.iter().position(|q| !q.is_integral());
    let i = match first_bad {
        None => return Ok(AdjustOutcome::Integral(word)),
        Some(i) => i,
    };
    match quotient_shape(&word[i]) {
        QuotientShape::BadNonConstant => return Ok(AdjustOutcome::Dead),
        QuotientShape::Integral => unreachable!(),
        QuotientShape::ConstantOnly => {}
    }
    let decompositions = adjustable_decompositions(&word[i]);
    if decompositions.is_empty() {
        return Ok(AdjustOutcome::Dead);
    }
    let mut saw_out_of_budget = false;
    for (a, b) in decompositions {
        if *budget == 0 {
            return Ok(AdjustOutcome::OutOfBudget);
        }
        *budget -= 1;
        let candidate = if i + 1 == word.len() {
            // terminal split: [.., a + 1/b] = [.., a, b]
            let mut w = word[..i].to_vec();
            w.push(a);
            w.push(Polynomial::constant(crate::rational::Rational::from_integer(b)));
            w
        } else {
            let tail: RationalFunction = match eval_quotients(&word[i + 1..]) {
                Ok(v) => v,
                Err(Error::Singular) => continue,
                Err(e) => return Err(e),
            };
            match splice_adjustment(&word[..i], &a, &b, &tail)? {
                CfWord::Poly(w) => w,
                CfWord::Rational(_) => unreachable!(),
            }
        };
        match adjust_to_integral(candidate, budget)? {
            AdjustOutcome::Integral(found) => return Ok(AdjustOutcome::Integral(found)),
            AdjustOutcome::Dead => {}
            AdjustOutcome::OutOfBudget => saw_out_of_budget = true,
        }
    }
    if saw_out_of_budget {
        Ok(AdjustOutcome::OutOfBudget)
    } else {
        Ok(AdjustOutcome::Dead)
    }
}

/// Expands the partial sums S_0..S_N canonically and decides whether they
/// all admit integer-coefficient words.
///
/// - No: some canonical expansion has a quotient with a non-integral
///   non-constant coefficient, or every constant-term adjustment branch
///   dead-ends in one.
/// - Yes: every expansion is integral, possibly after constant-term
///   adjustments (budget 2 x word length per expansion).
/// - Unknown: the adjustment budget ran out before the search settled.
pub fn oracle_specializable(f: &Polynomial, n: usize) -> Result<OracleVerdict> {
    require_integral_deg2(f)?;
    for k in 0..=n {
        let s_k = sum_partial_symbolic(f, k)?;
        let word = match expand_ratfunc(&s_k) {
            CfWord::Poly(w) => w,
            CfWord::Rational(_) => unreachable!(),
        };
        if word
            .iter()
            .any(|q| matches!(quotient_shape(q), QuotientShape::BadNonConstant))
        {
            return Ok(OracleVerdict::No);
        }
        if word.iter().all(|q| q.is_integral()) {
            continue;
        }
        let mut budget = 2 * word.len();
        match adjust_to_integral(word, &mut budget)? {
            AdjustOutcome::Integral(_) => continue,
            AdjustOutcome::Dead => return Ok(OracleVerdict::No),
            AdjustOutcome::OutOfBudget => return Ok(OracleVerdict::Unknown),
        }
    }
    Ok(OracleVerdict::Yes)
}

/// Denominators of non-integral coefficients across the canonical
/// expansions of S_0..S_N, deduplicated. Diagnostic for the
/// semi-specializability observation.
pub fn expansion_denominators(f: &Polynomial, n: usize) -> Result<Vec<num_bigint::BigInt>> {
    require_integral_deg2(f)?;
    let mut out: Vec<num_bigint::BigInt> = Vec::new();
    for k in 0..=n {
        let s_k = sum_partial_symbolic(f, k)?;
        let word = expand_ratfunc(&s_k);
        for q in word.as_poly()? {
            for c in q.coeffs() {
                if !c.is_integer() && !out.contains(c.denom()) {
                    out.push(c.denom().clone());
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
