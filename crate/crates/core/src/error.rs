use crate::graph::ValidationReport;

#[derive(Debug, thiserror::Error)]
pub enum FlatBandError {
    #[error("invalid graph: {0}")]
    Invalid(ValidationReport),
    #[error("graph is disconnected; pass force to analyse the quotient anyway")]
    Disconnected,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("index {index} out of range ({len} available)")]
    OutOfRange { index: usize, len: usize },
    #[error("{0} is not a flat band")]
    NotFlat(String),
}
