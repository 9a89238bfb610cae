use std::fmt;

/// Errors surfaced by the exact-arithmetic and continued-fraction layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial or zero rational function.
    DivisionByZero,
    /// A continued-fraction tail evaluated to zero where a reciprocal is taken.
    Singular,
    /// Duplicating symmetry requires the palindrome condition p_{n-1} = q_n.
    NotPalindromic,
    /// Constant-term adjustment is not applicable at the requested position.
    NotAdjustable,
    /// A series or product term was undefined (f^n(m) = 0 for the named n).
    ZeroTerm(usize),
    /// A stated precondition does not hold for the given input.
    Precondition(String),
    /// Internal consistency failure (budget exceeded, value-change guard).
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Singular => write!(f, "singular"),
            Error::NotPalindromic => write!(f, "not palindromic"),
            Error::NotAdjustable => write!(f, "not adjustable here"),
            Error::ZeroTerm(n) => write!(f, "zero term at n = {n}"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
