//! Error type shared by every solver and series in the crate.

use core::fmt;

/// Errors reported by the solvers, series and reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Parameters collide in a way that makes the equation degenerate
    /// (for example a shared upper/lower parameter that cancels).
    DegenerateInput(String),
    /// Series argument lies on or outside the known radius of convergence.
    ConvergenceDomain(String),
    /// Series terms grow instead of decaying; no trustworthy partial sum.
    Diverging(String),
    /// Branch index does not exist for the given parameters.
    InvalidBranch(String),
    /// Exact integer arithmetic exceeded the widest available integer type.
    Overflow(String),
    /// An iteration failed to converge within its safeguard limits.
    NoConvergence(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::ConvergenceDomain(msg) => write!(f, "outside convergence domain: {msg}"),
            Error::Diverging(msg) => write!(f, "series diverges: {msg}"),
            Error::InvalidBranch(msg) => write!(f, "invalid branch: {msg}"),
            Error::Overflow(msg) => write!(f, "integer overflow: {msg}"),
            Error::NoConvergence(msg) => write!(f, "no convergence: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
