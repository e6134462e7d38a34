use thiserror::Error;

/// Errors raised by the numeric substrate and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A fixed-width operation left the representable range.
    #[error("overflow in {width}-bit signed arithmetic")]
    Overflow { width: u32 },

    /// A natural-number subtraction would have gone below zero.
    #[error("subtraction underflow: result would be negative")]
    Underflow,

    /// The input lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The algorithm cannot run under the requested numeric mode.
    #[error("algorithm `{algorithm}` cannot run in mode `{mode}`")]
    IncompatibleMode { algorithm: String, mode: String },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
