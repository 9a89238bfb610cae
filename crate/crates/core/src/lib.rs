//! Exact continued-fraction symmetry toolkit.
//!
//! Everything runs over arbitrary-precision rationals or univariate
//! polynomials with rational coefficients; there is no floating point.
//! The library provides:
//!
//! - continued-fraction words over Q and Q(x): expansion, evaluation,
//!   convergents, and normalization to simple form;
//! - folding, k-fold, and duplicating symmetry constructions with their
//!   exact closed forms via modified continuants;
//! - series and product generators over iterated polynomials and Chebyshev
//!   polynomials;
//! - a fourteen-congruence classifier deciding when the reciprocal-iterate
//!   sum 1/x + 1/f(x) + 1/f(f(x)) + ... has an integer-coefficient
//!   ("specializable") expansion, cross-checked by a brute-force oracle.

pub mod cf;
pub mod classifier;
pub mod cli;
pub mod continuants;
pub mod error;
pub mod folding;
pub mod generators;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;

pub use cf::{CfValue, CfWord, Convergents, StablePrefix};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
