//! Command-line front end. One subcommand per invocation; deterministic
//! output; exit 0 on success, 1 on domain errors (singular evaluation,
//! precondition failures), 2 on usage errors.

// Each cmd_* separates usage errors (outer Result) from domain errors
// (inner Result) by running the domain phase in an immediate closure.
#![allow(clippy::redundant_closure_call)]

use std::collections::BTreeMap;
use std::io::Write;

use crate::cf::{
    detect_k_fold_generic, eval_quotients, expand_rational, expand_ratfunc, normalize_to_simple,
    stable_prefix, CfWord,
};
use crate::classifier::{classify_fourteen, oracle_specializable, CongruenceCase, OracleVerdict};
use crate::error::{Error, Result};
use crate::folding::{duplicate_build, k_fold_build, FoldSpec};
use crate::generators::{
    chebyshev, product_partial_at, product_partial_symbolic, sum_partial_at,
    sum_partial_symbolic, sum_reciprocal_powers_poly, sum_reciprocal_powers_rational,
    ExponentSpec,
};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, Rational};
use crate::ratfunc::RationalFunction;

const USAGE: &str = "usage: specfrac <subcommand> [flags]

subcommands:
  expand     --rational p/q [--simple] [--json]
  classify   --f <poly> [--json]
  fold       --word a0,w.. --xs x1[,x2,..] [--k k] [--simple] [--json]
  duplicate  --word a0,..,an --xs x [--simple] [--json]
  chebyshev  --k l [--json]
  sum        (--f <poly> [--at m] [--g <poly>] | --base <b> --exps <spec>) --terms n [--simple] [--json]
  product    --f <poly> [--at m] --terms n [--simple] [--json]
  detect     --word a0,.. --k k [--json]

polynomials are comma-separated coefficients, constant first (\"1,0,-8,0,8\"),
or the named form chebyshev:<l>; exponent specs are geometric:<l>, factorial,
or scaled:<c>,<l>.";

const BOOL_FLAGS: [&str; 2] = ["--simple", "--json"];
const VALUE_FLAGS: [&str; 10] = [
    "--f", "--g", "--at", "--terms", "--k", "--xs", "--word", "--base", "--exps", "--rational",
];

struct Request {
    subcommand: String,
    values: BTreeMap<String, String>,
    simple: bool,
    json: bool,
}

fn parse_args(args: &[String]) -> std::result::Result<Request, String> {
    let mut iter = args.iter();
    let subcommand = iter.next().ok_or("missing subcommand")?.clone();
    let mut values = BTreeMap::new();
    let mut simple = false;
    let mut json = false;
    while let Some(flag) = iter.next() {
        if BOOL_FLAGS.contains(&flag.as_str()) {
            match flag.as_str() {
                "--simple" => simple = true,
                "--json" => json = true,
                _ => unreachable!(),
            }
            continue;
        }
        if VALUE_FLAGS.contains(&flag.as_str()) {
            let value = iter
                .next()
                .ok_or_else(|| format!("flag {flag} needs a value"))?;
            values.insert(flag.clone(), value.clone());
            continue;
        }
        return Err(format!("unknown flag {flag}"));
    }
    Ok(Request {
        subcommand,
        values,
        simple,
        json,
    })
}

impl Request {
    fn value(&self, flag: &str) -> std::result::Result<&str, String> {
        self.values
            .get(flag)
            .map(|s| s.as_str())
            .ok_or_else(|| format!("{} requires {flag}", self.subcommand))
    }

    fn usize_value(&self, flag: &str) -> std::result::Result<usize, String> {
        self.value(flag)?
            .parse::<usize>()
            .map_err(|_| format!("{flag} must be a nonnegative integer"))
    }

    fn reject_stray_flags(&self, allowed: &[&str]) -> std::result::Result<(), String> {
        for flag in self.values.keys() {
            if !allowed.contains(&flag.as_str()) {
                return Err(format!("{} does not take {flag}", self.subcommand));
            }
        }
        Ok(())
    }
}

fn parse_poly_arg(text: &str) -> Result<Polynomial> {
    if let Some(rest) = text.strip_prefix("chebyshev:") {
        let l: usize = rest
            .parse()
            .map_err(|_| Error::Precondition(format!("bad chebyshev index '{rest}'")))?;
        return Ok(chebyshev(l));
    }
    Polynomial::parse(text)
}

fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

fn parse_exps(text: &str) -> Result<ExponentSpec> {
    if text == "factorial" {
        return Ok(ExponentSpec::Factorial);
    }
    if let Some(rest) = text.strip_prefix("geometric:") {
        let ratio: u64 = rest
            .parse()
            .map_err(|_| Error::Precondition(format!("bad geometric ratio '{rest}'")))?;
        return Ok(ExponentSpec::Geometric { ratio });
    }
    if let Some(rest) = text.strip_prefix("scaled:") {
        let (c, l) = rest
            .split_once(',')
            .ok_or_else(|| Error::Precondition(format!("bad scaled spec '{rest}'")))?;
        let scale: u64 = c
            .parse()
            .map_err(|_| Error::Precondition(format!("bad scale '{c}'")))?;
        let ratio: u64 = l
            .parse()
            .map_err(|_| Error::Precondition(format!("bad ratio '{l}'")))?;
        return Ok(ExponentSpec::ScaledGeometric { scale, ratio });
    }
    Err(Error::Precondition(format!(
        "bad exponent spec '{text}' (want geometric:<l>, factorial, or scaled:<c>,<l>)"
    )))
}

fn json_string_array(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|s| format!("\"{s}\"")).collect();
    format!("[{}]", quoted.join(", "))
}

fn word_strings(word: &CfWord) -> Vec<String> {
    match word {
        CfWord::Rational(quots) => quots.iter().map(|q| q.to_string()).collect(),
        CfWord::Poly(quots) => quots.iter().map(|q| q.to_coeff_string()).collect(),
    }
}

fn print_word(out: &mut dyn Write, word: &CfWord, json: bool) -> Result<()> {
    if json {
        writeln!(out, "{{\"cf\": {}}}", json_string_array(&word_strings(word))).map_err(io_err)
    } else {
        writeln!(out, "{word}").map_err(io_err)
    }
}

/// Normalizes rational words when --simple is set; polynomial words pass
/// through untouched (simple form is a notion for integer quotients).
fn maybe_simplify(word: CfWord, simple: bool) -> Result<CfWord> {
    if simple && matches!(word, CfWord::Rational(_)) {
        normalize_to_simple(&word)
    } else {
        Ok(word)
    }
}

fn cmd_expand(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--rational"])?;
    let r = req.value("--rational")?.to_string();
    Ok((|| {
        let value = parse_rational(&r)?;
        let word = maybe_simplify(expand_rational(&value), req.simple)?;
        print_word(out, &word, req.json)
    })())
}

fn cmd_classify(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--f"])?;
    let f_text = req.value("--f")?.to_string();
    Ok((|| {
        let f = parse_poly_arg(&f_text)?;
        let case = classify_fourteen(&f)?;
        let verdict = oracle_specializable(&f, 4)?;
        let verdict_text = match verdict {
            OracleVerdict::Yes => "yes",
            OracleVerdict::No => "no",
            OracleVerdict::Unknown => "unknown",
        };
        if req.json {
            let case_text = match &case {
                CongruenceCase::Case { id, .. } => id.to_string(),
                CongruenceCase::NoMatch => "null".to_string(),
            };
            writeln!(
                out,
                "{{\"case\": {case_text}, \"oracle\": \"{verdict_text}\"}}"
            )
            .map_err(io_err)
        } else {
            match &case {
                CongruenceCase::Case {
                    id,
                    modulus,
                    residue,
                } => writeln!(
                    out,
                    "case {id}: f \u{2261} {residue} (mod {modulus}); oracle: {verdict_text}"
                )
                .map_err(io_err),
                CongruenceCase::NoMatch => {
                    writeln!(out, "no congruence matched; oracle: {verdict_text}").map_err(io_err)
                }
            }
        }
    })())
}

fn cmd_fold(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--word", "--xs", "--k"])?;
    let word_text = req.value("--word")?.to_string();
    let xs_text = req.value("--xs")?.to_string();
    let k_check: Option<usize> = match req.values.get("--k") {
        Some(_) => Some(req.usize_value("--k")?),
        None => None,
    };
    Ok((|| {
        let quots = parse_rational_list(&word_text)?;
        if quots.len() < 2 {
            return Err(Error::Precondition(
                "--word needs a0 and a nonempty w".into(),
            ));
        }
        let xs = parse_rational_list(&xs_text)?;
        if let Some(k) = k_check {
            if k != xs.len() + 1 {
                return Err(Error::Precondition(format!(
                    "--k {} does not match |xs| + 1 = {}",
                    k,
                    xs.len() + 1
                )));
            }
        }
        let spec = FoldSpec::new(quots[0].clone(), quots[1..].to_vec(), xs)?;
        let built = k_fold_build(&spec)?;
        let value = eval_quotients(&built)?;
        let word = maybe_simplify(CfWord::Rational(built), req.simple)?;
        print_word(out, &word, req.json)?;
        if !req.json {
            writeln!(out, "value = {value}").map_err(io_err)?;
        }
        Ok(())
    })())
}

fn cmd_duplicate(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--word", "--xs"])?;
    let word_text = req.value("--word")?.to_string();
    let xs_text = req.value("--xs")?.to_string();
    Ok((|| {
        let quots = parse_rational_list(&word_text)?;
        let xs = parse_rational_list(&xs_text)?;
        if xs.len() != 1 {
            return Err(Error::Precondition(
                "duplicate takes exactly one x quotient".into(),
            ));
        }
        let (built, value) = duplicate_build(&quots, &xs[0])?;
        let word = maybe_simplify(CfWord::Rational(built), req.simple)?;
        print_word(out, &word, req.json)?;
        if !req.json {
            writeln!(out, "value = {value}").map_err(io_err)?;
        }
        Ok(())
    })())
}

fn cmd_chebyshev(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--k"])?;
    let l = req.usize_value("--k")?;
    Ok((|| {
        let t = chebyshev(l);
        if req.json {
            let coeffs: Vec<String> = t.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{{\"coeffs\": {}}}", json_string_array(&coeffs)).map_err(io_err)
        } else {
            writeln!(out, "{}", t.to_coeff_string()).map_err(io_err)
        }
    })())
}

/// Stabilized prefix over the partial objects with `terms` and `terms + 1`
/// summands.
fn stabilized_rational(values: [Rational; 2]) -> Result<CfWord> {
    let words = [expand_rational(&values[0]), expand_rational(&values[1])];
    Ok(stable_prefix(&words)?.word)
}

fn stabilized_ratfunc(values: [RationalFunction; 2]) -> Result<CfWord> {
    let words = [expand_ratfunc(&values[0]), expand_ratfunc(&values[1])];
    Ok(stable_prefix(&words)?.word)
}

/// With --g, sum emits the explicit construction word for the matching
/// shape f = g x^2 - x or f = x^2 - x + 1 + x^2 (x-1)^2 g.
fn construction_word(f: &Polynomial, g: &Polynomial, terms: usize) -> Result<Vec<Polynomial>> {
    let x = Polynomial::x();
    let negx_f = &(&(g * &x) * &x) - &x;
    if *f == negx_f {
        return crate::generators::construction_case_negx(g, terms);
    }
    let xm1 = Polynomial::from_ints(&[-1, 1]);
    let shape = &(&x * &x) * &(&xm1 * &xm1);
    let x2x1_f = &Polynomial::from_ints(&[1, -1, 1]) + &(&shape * g);
    if *f == x2x1_f {
        return crate::generators::construction_case_x2x1(g, terms);
    }
    Err(Error::Precondition(
        "f matches neither construction shape for g".into(),
    ))
}

fn cmd_sum(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--f", "--g", "--at", "--base", "--exps", "--terms"])?;
    let terms = req.usize_value("--terms")?;
    if terms == 0 {
        return Err("--terms must be at least 1".into());
    }
    let has_f = req.values.contains_key("--f");
    let has_base = req.values.contains_key("--base");
    if has_f == has_base {
        return Err("sum takes exactly one of --f or --base".into());
    }
    if has_base && req.values.contains_key("--at") {
        return Err("--at applies to --f sums only".into());
    }
    if has_f && req.values.contains_key("--exps") {
        return Err("--exps applies to --base sums only".into());
    }
    if let Some(g_text) = req.values.get("--g") {
        if !has_f {
            return Err("sum --g also requires --f".into());
        }
        if req.values.contains_key("--at") {
            return Err("--g builds the symbolic construction word; drop --at".into());
        }
        let f_text = req.value("--f")?.to_string();
        let g_text = g_text.clone();
        return Ok((|| {
            let f = parse_poly_arg(&f_text)?;
            let g = parse_poly_arg(&g_text)?;
            let word = construction_word(&f, &g, terms)?;
            print_word(out, &CfWord::Poly(word), req.json)
        })());
    }
    if has_base {
        let base_text = req.value("--base")?.to_string();
        let exps_text = req.value("--exps")?.to_string();
        return Ok((|| {
            let exps = parse_exps(&exps_text)?;
            let word = if base_text.contains(',') {
                let base = Polynomial::parse(&base_text)?;
                let a = sum_reciprocal_powers_poly(&base, &exps, terms - 1)?;
                let b = sum_reciprocal_powers_poly(&base, &exps, terms)?;
                stabilized_ratfunc([a, b])?
            } else {
                let base = parse_rational(&base_text)?;
                let a = sum_reciprocal_powers_rational(&base, &exps, terms - 1)?;
                let b = sum_reciprocal_powers_rational(&base, &exps, terms)?;
                stabilized_rational([a, b])?
            };
            let word = maybe_simplify(word, req.simple)?;
            print_word(out, &word, req.json)
        })());
    }
    let f_text = req.value("--f")?.to_string();
    let at = req.values.get("--at").cloned();
    Ok((|| {
        let f = parse_poly_arg(&f_text)?;
        let word = match at {
            Some(m_text) => {
                let m = parse_rational(&m_text)?;
                let a = sum_partial_at(&f, terms - 1, &m)?;
                let b = sum_partial_at(&f, terms, &m)?;
                stabilized_rational([a, b])?
            }
            None => {
                let a = sum_partial_symbolic(&f, terms - 1)?;
                let b = sum_partial_symbolic(&f, terms)?;
                stabilized_ratfunc([a, b])?
            }
        };
        let word = maybe_simplify(word, req.simple)?;
        print_word(out, &word, req.json)
    })())
}

fn cmd_product(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--f", "--at", "--terms"])?;
    let terms = req.usize_value("--terms")?;
    if terms == 0 {
        return Err("--terms must be at least 1".into());
    }
    let f_text = req.value("--f")?.to_string();
    let at = req.values.get("--at").cloned();
    Ok((|| {
        let f = parse_poly_arg(&f_text)?;
        let word = match at {
            Some(m_text) => {
                let m = parse_rational(&m_text)?;
                let a = product_partial_at(&f, terms - 1, &m)?;
                let b = product_partial_at(&f, terms, &m)?;
                stabilized_rational([a, b])?
            }
            None => {
                let a = product_partial_symbolic(&f, terms - 1)?;
                let b = product_partial_symbolic(&f, terms)?;
                stabilized_ratfunc([a, b])?
            }
        };
        let word = maybe_simplify(word, req.simple)?;
        print_word(out, &word, req.json)
    })())
}

fn cmd_detect(req: &Request, out: &mut dyn Write) -> std::result::Result<Result<()>, String> {
    req.reject_stray_flags(&["--word", "--k"])?;
    let word_text = req.value("--word")?.to_string();
    let k = req.usize_value("--k")?;
    if k < 2 {
        return Err("--k must be at least 2".into());
    }
    Ok((|| {
        let quots = parse_rational_list(&word_text)?;
        let len = quots.len();
        // len = 1 + k|w| + (k-1) determines |w| when it divides evenly.
        let found = if len >= 2 * k && (len - k) % k == 0 {
            detect_k_fold_generic(&quots, (len - k) / k, k)
        } else {
            None
        };
        match found {
            None => {
                if req.json {
                    writeln!(out, "{{\"match\": null}}").map_err(io_err)
                } else {
                    writeln!(out, "none").map_err(io_err)
                }
            }
            Some((a0, w, xs)) => {
                let fmt_list = |v: &[Rational]| {
                    v.iter()
                        .map(|q| q.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                if req.json {
                    let w_s: Vec<String> = w.iter().map(|q| q.to_string()).collect();
                    let xs_s: Vec<String> = xs.iter().map(|q| q.to_string()).collect();
                    writeln!(
                        out,
                        "{{\"k\": {k}, \"a0\": \"{a0}\", \"w\": {}, \"xs\": {}}}",
                        json_string_array(&w_s),
                        json_string_array(&xs_s)
                    )
                    .map_err(io_err)
                } else {
                    writeln!(
                        out,
                        "{k}-fold: a0 = {a0}, w = [{}], xs = [{}]",
                        fmt_list(&w),
                        fmt_list(&xs)
                    )
                    .map_err(io_err)
                }
            }
        }
    })())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(format!("io error: {e}"))
}

/// Runs one command. Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let req = match parse_args(args) {
        Ok(r) => r,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "{USAGE}");
            return 2;
        }
    };
    let dispatched = match req.subcommand.as_str() {
        "expand" => cmd_expand(&req, out),
        "classify" => cmd_classify(&req, out),
        "fold" => cmd_fold(&req, out),
        "duplicate" => cmd_duplicate(&req, out),
        "chebyshev" => cmd_chebyshev(&req, out),
        "sum" => cmd_sum(&req, out),
        "product" => cmd_product(&req, out),
        "detect" => cmd_detect(&req, out),
        other => {
            let _ = writeln!(err, "error: unknown subcommand '{other}'");
            let _ = writeln!(err, "{USAGE}");
            return 2;
        }
    };
    match dispatched {
        Err(usage_msg) => {
            let _ = writeln!(err, "error: {usage_msg}");
            let _ = writeln!(err, "{USAGE}");
            2
        }
        Ok(Ok(())) => 0,
        Ok(Err(domain)) => {
            let _ = writeln!(err, "error: {domain}");
            1
        }
    }
}
