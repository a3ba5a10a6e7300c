use thiserror::Error;

/// Errors raised by the exact engine. Input-shaped problems (mismatched
/// universes, bad maps, parse failures) are separated from certificate and
/// precision failures so the CLI can map them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable universe mismatch: {0}")]
    UniverseMismatch(String),

    #[error("chart mismatch: {0}")]
    ChartMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invertibility certificate missing or failed: {0}")]
    Certificate(String),

    #[error("requested precision unreachable: {0}")]
    Precision(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("simplicial structure invalid: {0}")]
    Simplicial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
