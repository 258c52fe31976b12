use thiserror::Error;

/// Errors raised by basis construction, checks and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid basis index: {0}")]
    InvalidIndex(String),
    #[error("field is not harmonic; Laplacian residual: {residual}")]
    NotHarmonic { residual: String },
    #[error("polynomial is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: u32 },
    #[error("field has a nonzero {0} component")]
    UnexpectedComponent(&'static str),
    #[error("field is not in Vec M: projection residual {residual}")]
    NotVecMonogenic { residual: String },
    #[error("{0}")]
    NonNormalizable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular linear system")]
    Singular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
