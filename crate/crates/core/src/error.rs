use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid octal digit {0:?} in generator {1:?}")]
    InvalidOctalDigit(char, String),

    #[error("invalid generator {text:?}: {reason}")]
    InvalidGenerator { text: String, reason: &'static str },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("block length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("SC engine depth {depth} out of range for block length {len}")]
    DepthOutOfRange { depth: usize, len: usize },

    #[error("Gauss-Hermite quadrature did not converge at {snr_db} dB (difference {diff:e})")]
    QuadratureNonConvergence { snr_db: f64, diff: f64 },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
