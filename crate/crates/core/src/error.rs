use std::fmt;

/// Errors produced by the numeric kernels and solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the domain of an operation.
    Domain { what: &'static str, value: f64 },
    /// A series could not certify the requested tolerance within its term cap.
    ToleranceUnreachable {
        what: &'static str,
        requested: f64,
        achieved: f64,
        terms: usize,
    },
    /// The defining series diverges at the given argument.
    NonConvergent { what: &'static str, value: f64 },
    /// A parameter combination was rejected before evaluation.
    Parameter { what: &'static str, detail: String },
    /// A class-constraint on the parameter (M or alpha) is violated.
    Admissibility {
        what: &'static str,
        value: f64,
        bound: f64,
    },
    /// A bracketing solver was handed endpoints that do not straddle a root.
    NoSignChange { what: &'static str, lo: f64, hi: f64 },
    /// An iteration budget was exhausted.
    MaxIterations { what: &'static str, limit: usize },
    /// Two evaluation routes that must agree did not.
    Inconsistent { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "domain error in {what}: got {value}"),
            Error::ToleranceUnreachable {
                what,
                requested,
                achieved,
                terms,
            } => write!(
                f,
                "{what}: tolerance {requested:e} unreachable after {terms} terms (bound {achieved:e})"
            ),
            Error::NonConvergent { what, value } => {
                write!(f, "{what}: series does not converge at {value}")
            }
            Error::Parameter { what, detail } => write!(f, "invalid parameter in {what}: {detail}"),
            Error::Admissibility { what, value, bound } => write!(
                f,
                "{what}: parameter {value} outside the admissible range (0, {bound})"
            ),
            Error::NoSignChange { what, lo, hi } => {
                write!(f, "{what}: no sign change on [{lo}, {hi}]")
            }
            Error::MaxIterations { what, limit } => {
                write!(f, "{what}: exceeded {limit} iterations")
            }
            Error::Inconsistent { what, detail } => {
                write!(f, "internal cross-check failed in {what}: {detail}")
            }
        }
    }
}

impl std::error::Error for Error {}
