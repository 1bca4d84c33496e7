//! Error type shared by all modules.

use core::fmt;

/// Errors fall into three groups: inputs outside an operation's accepted
/// range, arguments outside the mathematical domain of a map, and requests
/// that exceed an enumeration budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input is rejected before any computation starts (zero weight,
    /// unknown name, malformed part list).
    InvalidInput(&'static str),
    /// The argument is a valid value but the map is not defined on it.
    Domain(&'static str),
    /// The computation would enumerate past the configured budget.
    Budget { limit: u64, requested: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Budget { limit, requested } => {
                write!(f, "resource budget exceeded: requested {requested}, limit {limit}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
