use thiserror::Error;

use crate::exactlin::FieldCtx;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldCtx, right: FieldCtx },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("not a Hopf automorphism: {0}")]
    NotAutomorphism(String),
    #[error("component mismatch: {0}")]
    ComponentMismatch(String),
    #[error("invalid quadruple in involution: {0}")]
    InvalidQuadruple(String),
    #[error("not a morphism: {0}")]
    NotMorphism(String),
    #[error("grading violation: {0}")]
    Grading(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A semantic error found while reading a file, with its location.
    #[error("line {line}: {source}")]
    At { line: usize, source: Box<Error> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Parse failures are reported differently from semantic ones by the CLI.
    pub fn is_parse(&self) -> bool {
        match self {
            Error::Parse { .. } => true,
            Error::At { source, .. } => source.is_parse(),
            _ => false,
        }
    }
}
