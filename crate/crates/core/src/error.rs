use thiserror::Error;

use crate::report::VerificationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("map is not a morphism: {}", .0.summary())]
    NotAMorphism(Box<VerificationReport>),

    #[error("degree {requested} exceeds cap {cap}")]
    DegreeCap { requested: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
