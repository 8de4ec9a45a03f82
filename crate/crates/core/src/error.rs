use thiserror::Error;

/// Errors produced by the smoothing library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its valid range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Two inputs that must agree in shape do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A PNM stream could not be decoded.
    #[error("decode error at byte {offset}: {message}")]
    Decode { offset: usize, message: String },

    /// A reference solver failed to certify its result.
    #[error("oracle failure: {0}")]
    Oracle(String),

    /// An invariant the solver relies on did not hold.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

pub(crate) fn mismatch(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}
