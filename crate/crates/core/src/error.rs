use thiserror::Error;

use crate::exact::Rat;

/// Errors produced by the exact-arithmetic substrate and the identity operations
/// built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function with zero denominator polynomial")]
    ZeroDenominator,
    #[error("rational function has a pole at {0}")]
    Pole(Rat),
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("{op}: {detail}")]
    Precondition { op: &'static str, detail: String },
    #[error("enumeration cap exceeded: n = {n} > {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("integrand has a pole on (-inf, 0]")]
    PoleOnDomain,
    #[error("integrand does not decay at least like 1/x^2")]
    InsufficientDecay,
    #[error("quadrature did not reach tolerance {0:e}")]
    NoConvergence(f64),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown profile {0:?} (expected quick or full)")]
    UnknownProfile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Precondition {
        op,
        detail: detail.into(),
    }
}
