use thiserror::Error;

/// Errors raised by the special-function kernel, the integral routes and the
/// bound catalog.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("{function} overflows f64 at x = {x}; use the scaled variant")]
    Overflow { function: &'static str, x: f64 },

    #[error("{what} did not converge within {cap} iterations")]
    NonConvergence { what: &'static str, cap: usize },

    #[error("hypergeometric series diverges: {0}")]
    Divergence(String),

    #[error("bound {id} not valid at nu={nu}, beta={beta}, x={x}: {reason}")]
    Validity {
        id: &'static str,
        nu: f64,
        beta: f64,
        x: f64,
        reason: String,
    },

    #[error("bound {0} requires x_star")]
    MissingXStar(&'static str),

    #[error("{context} failed at nu={nu}, beta={beta}, x={x}: {source}")]
    AtPoint {
        context: String,
        nu: f64,
        beta: f64,
        x: f64,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
