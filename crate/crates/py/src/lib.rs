//! Python bindings for the specfrac toolkit.
//!
//! Values cross the boundary as strings: rationals as "p/q" or "n",
//! polynomials as comma-separated coefficient lists, constant first
//! ("1,0,-8,0,8" for 8x^4 - 8x^2 + 1). Partial quotients routinely exceed
//! machine integers, so strings keep everything exact.

#![allow(clippy::type_complexity)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use specfrac::cf::{
    detect_k_fold_generic, eval_quotients, expand_rational, expand_ratfunc, normalize_to_simple,
    stable_prefix, CfWord,
};
use specfrac::classifier::{CongruenceCase, OracleVerdict};
use specfrac::error::Error;
use specfrac::folding::{duplicate_build, k_fold_build, FoldSpec};
use specfrac::generators::{self, ExponentSpec};
use specfrac::poly::Polynomial;
use specfrac::rational::{parse_rational, Rational};

fn domain(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_word(quots: Vec<String>) -> PyResult<Vec<Rational>> {
    quots
        .iter()
        .map(|s| parse_rational(s).map_err(domain))
        .collect()
}

fn word_to_strings(quots: &[Rational]) -> Vec<String> {
    quots.iter().map(|q| q.to_string()).collect()
}

fn poly_word_to_strings(quots: &[Polynomial]) -> Vec<String> {
    quots.iter().map(|q| q.to_coeff_string()).collect()
}

/// Simple continued fraction of p/q, as decimal strings.
#[pyfunction]
fn expand(rational: &str) -> PyResult<Vec<String>> {
    let r = parse_rational(rational).map_err(domain)?;
    let word = expand_rational(&r);
    Ok(word_to_strings(word.as_rational().map_err(domain)?))
}

/// Exact value of a continued fraction word with rational quotients.
#[pyfunction]
fn evaluate(word: Vec<String>) -> PyResult<String> {
    let quots = parse_word(word)?;
    let value: Rational = eval_quotients(&quots).map_err(domain)?;
    Ok(value.to_string())
}

/// Rewrites an integer-quotient word into the equivalent simple word.
#[pyfunction]
fn normalize(word: Vec<String>) -> PyResult<Vec<String>> {
    let quots = parse_word(word)?;
    let simple = normalize_to_simple(&CfWord::Rational(quots)).map_err(domain)?;
    Ok(word_to_strings(simple.as_rational().map_err(domain)?))
}

/// k-fold word [a0, w, x1, -rev(w), x2, w, ...] from word = [a0, w...] and
/// the x list; k = len(xs) + 1.
#[pyfunction]
fn fold(word: Vec<String>, xs: Vec<String>) -> PyResult<Vec<String>> {
    let quots = parse_word(word)?;
    if quots.len() < 2 {
        return Err(PyValueError::new_err("word needs a0 and a nonempty w"));
    }
    let xs = parse_word(xs)?;
    let spec = FoldSpec::new(quots[0].clone(), quots[1..].to_vec(), xs).map_err(domain)?;
    let built = k_fold_build(&spec).map_err(domain)?;
    Ok(word_to_strings(&built))
}

/// Duplicating symmetry [a0..an, x, an..a0]; the input word must satisfy
/// the palindrome condition. Returns (word, value).
#[pyfunction]
fn duplicate(word: Vec<String>, x: &str) -> PyResult<(Vec<String>, String)> {
    let quots = parse_word(word)?;
    let x = parse_rational(x).map_err(domain)?;
    let (built, value) = duplicate_build(&quots, &x).map_err(domain)?;
    Ok((word_to_strings(&built), value.to_string()))
}

/// Decomposition (a0, w, xs) when the word has exact k-fold shape.
#[pyfunction]
fn detect_k_fold(word: Vec<String>, k: usize) -> PyResult<Option<(String, Vec<String>, Vec<String>)>> {
    let quots = parse_word(word)?;
    let len = quots.len();
    if k < 2 || len < 2 * k || !(len - k).is_multiple_of(k) {
        return Ok(None);
    }
    Ok(
        detect_k_fold_generic(&quots, (len - k) / k, k).map(|(a0, w, xs)| {
            (
                a0.to_string(),
                word_to_strings(&w),
                word_to_strings(&xs),
            )
        }),
    )
}

/// Coefficients of the Chebyshev polynomial T_l, constant first.
#[pyfunction]
fn chebyshev(l: usize) -> String {
    generators::chebyshev(l).to_coeff_string()
}

/// Fourteen-congruence classification plus the brute-force oracle verdict.
/// Returns (case_id or None, modulus, residue, oracle) with polynomials in
/// coefficient-list form.
#[pyfunction]
fn classify(f: &str) -> PyResult<(Option<usize>, Option<String>, Option<String>, String)> {
    let f = Polynomial::parse(f).map_err(domain)?;
    let case = specfrac::classifier::classify_fourteen(&f).map_err(domain)?;
    let verdict = match specfrac::classifier::oracle_specializable(&f, 4).map_err(domain)? {
        OracleVerdict::Yes => "yes",
        OracleVerdict::No => "no",
        OracleVerdict::Unknown => "unknown",
    };
    Ok(match case {
        CongruenceCase::Case {
            id,
            modulus,
            residue,
        } => (
            Some(id),
            Some(modulus.to_coeff_string()),
            Some(residue.to_coeff_string()),
            verdict.to_string(),
        ),
        CongruenceCase::NoMatch => (None, None, None, verdict.to_string()),
    })
}

fn parse_exps(kind: &str) -> PyResult<ExponentSpec> {
    if kind == "factorial" {
        return Ok(ExponentSpec::Factorial);
    }
    if let Some(rest) = kind.strip_prefix("geometric:") {
        let ratio: u64 = rest
            .parse()
            .map_err(|_| PyValueError::new_err(format!("bad ratio '{rest}'")))?;
        return Ok(ExponentSpec::Geometric { ratio });
    }
    if let Some(rest) = kind.strip_prefix("scaled:") {
        let (c, l) = rest
            .split_once(',')
            .ok_or_else(|| PyValueError::new_err(format!("bad scaled spec '{rest}'")))?;
        return Ok(ExponentSpec::ScaledGeometric {
            scale: c
                .parse()
                .map_err(|_| PyValueError::new_err(format!("bad scale '{c}'")))?,
            ratio: l
                .parse()
                .map_err(|_| PyValueError::new_err(format!("bad ratio '{l}'")))?,
        });
    }
    Err(PyValueError::new_err(format!(
        "bad exponent spec '{kind}'"
    )))
}

/// Stabilized continued-fraction prefix of sum(1/f^n(at)) over n = 0..terms
/// (and terms+1, for stabilization). Symbolic when `at` is None, in which
/// case quotients come back as coefficient lists.
#[pyfunction]
#[pyo3(signature = (f, terms, at=None))]
fn sum_prefix(f: &str, terms: usize, at: Option<i64>) -> PyResult<Vec<String>> {
    if terms == 0 {
        return Err(PyValueError::new_err("terms must be at least 1"));
    }
    let f = Polynomial::parse(f).map_err(domain)?;
    match at {
        Some(m) => {
            let m = Rational::from_integer(m.into());
            let a = generators::sum_partial_at(&f, terms - 1, &m).map_err(domain)?;
            let b = generators::sum_partial_at(&f, terms, &m).map_err(domain)?;
            let prefix =
                stable_prefix(&[expand_rational(&a), expand_rational(&b)]).map_err(domain)?;
            Ok(word_to_strings(prefix.word.as_rational().map_err(domain)?))
        }
        None => {
            let a = generators::sum_partial_symbolic(&f, terms - 1).map_err(domain)?;
            let b = generators::sum_partial_symbolic(&f, terms).map_err(domain)?;
            let prefix =
                stable_prefix(&[expand_ratfunc(&a), expand_ratfunc(&b)]).map_err(domain)?;
            Ok(poly_word_to_strings(prefix.word.as_poly().map_err(domain)?))
        }
    }
}

/// Stabilized prefix of sum(base^(-e_n)) with e_n from an exponent spec
/// ("geometric:<l>", "factorial", "scaled:<c>,<l>").
#[pyfunction]
fn reciprocal_power_prefix(base: &str, exps: &str, terms: usize) -> PyResult<Vec<String>> {
    if terms == 0 {
        return Err(PyValueError::new_err("terms must be at least 1"));
    }
    let exps = parse_exps(exps)?;
    let base = parse_rational(base).map_err(domain)?;
    let a = generators::sum_reciprocal_powers_rational(&base, &exps, terms - 1).map_err(domain)?;
    let b = generators::sum_reciprocal_powers_rational(&base, &exps, terms).map_err(domain)?;
    let prefix = stable_prefix(&[expand_rational(&a), expand_rational(&b)]).map_err(domain)?;
    Ok(word_to_strings(prefix.word.as_rational().map_err(domain)?))
}

#[pymodule]
fn specfrac_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(fold, m)?)?;
    m.add_function(wrap_pyfunction!(duplicate, m)?)?;
    m.add_function(wrap_pyfunction!(detect_k_fold, m)?)?;
    m.add_function(wrap_pyfunction!(chebyshev, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(sum_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(reciprocal_power_prefix, m)?)?;
    Ok(())
}
