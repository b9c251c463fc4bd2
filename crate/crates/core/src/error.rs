use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The CLI maps these onto its exit-code contract: parameter and domain
/// problems become exit 2, [`QError::Budget`] becomes exit 3.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid q = {q}: {reason}")]
    InvalidQ { q: String, reason: &'static str },

    #[error("invalid evaluation point: {0}")]
    InvalidPoint(&'static str),

    #[error("pole: factor 1 + q^{exponent} vanishes")]
    Pole { exponent: i64 },

    #[error("pole: factor 1 - q^{exponent} vanishes")]
    PoleOneMinus { exponent: i64 },

    #[error("invalid parameter `{key}`: {reason}")]
    InvalidParam { key: &'static str, reason: String },

    #[error("budget exceeded: {needed} terms requested, budget is {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("series did not reach tolerance within {terms} terms (achieved tail bound {achieved:e})")]
    Truncation { terms: usize, achieved: f64 },

    #[error("branch risk: [n+x]_q = {re}+{im}i lies on the negative real axis")]
    BranchRisk { re: f64, im: f64 },

    #[error("quadrature did not converge (estimate {estimate}, error {error:e})")]
    Quadrature { estimate: f64, error: f64 },

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("grid is empty after rejecting invalid points")]
    EmptyGrid,

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("cannot parse `{input}` as {what}")]
    Parse { input: String, what: &'static str },
}

pub type Result<T, E = QError> = std::result::Result<T, E>;

impl QError {
    pub fn param(key: &'static str, reason: impl Into<String>) -> Self {
        QError::InvalidParam {
            key,
            reason: reason.into(),
        }
    }
}
