use thiserror::Error;

/// Shared error type for the verification library.
#[derive(Error, Debug, Clone)]
pub enum LabError {
    #[error("gamma pole at nonpositive integer argument {0}")]
    Pole(String),

    #[error("requested accuracy unattainable at {configured} bits (need about {required} bits): {context}")]
    PrecisionUnderflow {
        configured: u32,
        required: u32,
        context: String,
    },

    #[error("quadrature budget exceeded: {0}")]
    QuadratureBudget(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation failure: {0}")]
    Validation(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("coefficient table exhausted: need index {need}, have {have}")]
    TableExhausted { need: u64, have: u64 },

    #[error("incomplete spectrum: {0}")]
    IncompleteSpectrum(String),

    #[error("unsupported level {0} (only level 1 spectra are handled)")]
    UnsupportedLevel(u64),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for LabError {
    fn from(e: std::io::Error) -> Self {
        LabError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
