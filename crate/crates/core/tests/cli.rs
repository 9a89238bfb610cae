//! Golden tests for the command-line interface: byte-exact outputs and the
//! 0/1/2 exit-code contract.

fn run(args: &[&str]) -> (i32, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = specfrac::cli::run(&args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn expand_golden() {
    let (code, out, _) = run(&["expand", "--rational", "10/7"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[1, 2, 3]\n");

    let (code, out, _) = run(&["expand", "--rational", "-5/3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[-2, 3]\n");

    let (code, out, _) = run(&["expand", "--rational", "10/7", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"cf\": [\"1\", \"2\", \"3\"]}\n");
}

#[test]
fn classify_golden() {
    let (code, out, _) = run(&["classify", "--f", "0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "case 1: f \u{2261} 0 (mod x^2); oracle: yes\n");

    let (code, out, _) = run(&["classify", "--f", "-1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "no congruence matched; oracle: no\n");

    let (code, out, _) = run(&["classify", "--f", "chebyshev:4", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"case\": 3, \"oracle\": \"yes\"}\n");
}

#[test]
fn fold_golden() {
    let (code, out, _) = run(&["fold", "--word", "0,2", "--xs", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[0, 2, 3, -2]\nvalue = 5/12\n");

    let (code, out, _) = run(&["fold", "--word", "0,2", "--xs", "3", "--simple"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[0, 2, 2, 2]\nvalue = 5/12\n");

    let (code, out, _) = run(&["fold", "--word", "0,2", "--xs", "1,1", "--k", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"cf\": [\"0\", \"2\", \"1\", \"-2\", \"1\", \"2\"]}\n");
}

#[test]
fn duplicate_golden() {
    let (code, out, _) = run(&["duplicate", "--word", "1,1", "--xs", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[1, 1, 1, 1, 1]\nvalue = 8/5\n");

    // non-palindromic word: domain error, named on stderr, exit 1
    let (code, out, err) = run(&["duplicate", "--word", "1,2", "--xs", "1"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert_eq!(err, "error: not palindromic\n");
}

#[test]
fn chebyshev_golden() {
    let (code, out, _) = run(&["chebyshev", "--k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1,0,-8,0,8\n");

    let (code, out, _) = run(&["chebyshev", "--k", "0", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"coeffs\": [\"1\"]}\n");
}

#[test]
fn sum_specialized_golden() {
    let (code, out, _) = run(&[
        "sum", "--f", "chebyshev:4", "--at", "2", "--terms", "6", "--simple",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("[0, 1, 1, 23, 1, 2, 1, 18815, 3, 1, 23, "),
        "got: {out}"
    );
}

#[test]
fn sum_symbolic_golden() {
    let (code, out, _) = run(&["sum", "--f", "0,0,1", "--terms", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[0, x - 1, x + 2, x, x, x - 2"), "got: {out}");

    // reciprocal powers of a polynomial base
    let (code, out, _) = run(&[
        "sum", "--base", "0,1", "--exps", "geometric:2", "--terms", "4",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("[0, x - 1, x + 2, x, x, x - 2"),
        "got: {out}"
    );
}

#[test]
fn sum_construction_golden() {
    // --g emits the explicit construction word for the matching shape
    let (code, out, _) = run(&["sum", "--f", "0,-1,1", "--g", "1", "--terms", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[0, x, -1, x^2]\n");

    let (code, out, _) = run(&["sum", "--f", "1,-1,1", "--g", "0", "--terms", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[0, x, -1, -x^2]\n");

    let (code, _, err) = run(&["sum", "--f", "0,0,1", "--g", "2", "--terms", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("neither construction shape"));
}

#[test]
fn sum_liouville_golden() {
    let (code, out, _) = run(&[
        "sum", "--base", "10", "--exps", "factorial", "--terms", "5",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("[0, 4, 1, 3, 5, 99, 1, 4, 3, 1, 4, 999999999999, "),
        "got: {out}"
    );
}

#[test]
fn product_golden() {
    let (code, out, _) = run(&["product", "--f", "-1,0,2", "--at", "3", "--terms", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[1, 2, 2, 2"), "got: {out}");
}

#[test]
fn detect_golden() {
    let (code, out, _) = run(&["detect", "--word", "0,2,3,-2", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2-fold: a0 = 0, w = [2], xs = [3]\n");

    let (code, out, _) = run(&["detect", "--word", "0,1,2,3", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "none\n");
}

#[test]
fn usage_errors_exit_2() {
    let (code, out, err) = run(&[]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("usage: specfrac"));

    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown subcommand"));

    let (code, _, err) = run(&["expand", "--bogus", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown flag"));

    let (code, _, err) = run(&["expand", "--rational", "1/2", "--terms", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("does not take"));

    let (code, _, err) = run(&["sum", "--base", "10", "--exps", "factorial", "--at", "2", "--terms", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("--at applies to --f sums only"));

    let (code, _, err) = run(&["sum", "--f", "0,0,1", "--base", "2", "--terms", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("exactly one of"));

    let (code, _, err) = run(&["fold", "--word", "0,2", "--xs", "3", "--k", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("does not match"));
}

#[test]
fn domain_errors_exit_1() {
    // singular fold: x = 1 with w = [1] makes the tail vanish
    let (code, _, err) = run(&["fold", "--word", "0,1", "--xs", "1"]);
    assert_eq!(code, 1);
    assert_eq!(err, "error: singular\n");

    // zero term in a specialized sum: f(2) = 0 for f = x^2 - 4
    let (code, _, err) = run(&["sum", "--f", "-4,0,1", "--at", "2", "--terms", "3"]);
    assert_eq!(code, 1);
    assert_eq!(err, "error: zero term at n = 1\n");
}

#[test]
fn output_is_deterministic() {
    let first = run(&["sum", "--f", "chebyshev:4", "--at", "2", "--terms", "4", "--json"]);
    let second = run(&["sum", "--f", "chebyshev:4", "--at", "2", "--terms", "4", "--json"]);
    assert_eq!(first, second);
    assert!(first.1.starts_with("{\"cf\": [\"0\", \"1\", \"1\", \"23\""));
}
