use thiserror::Error;

use crate::presentation::Violation;
use crate::ring::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("unknown component `{0}`")]
    UnknownComponent(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("invalid presentation: {}", summarize(.0))]
    InvalidPresentation(Vec<Violation>),

    #[error("expected {expected} components, found {found}")]
    WrongComponentCount { expected: &'static str, found: usize },

    #[error("inadmissible bundle: {0}")]
    InadmissibleBundle(String),

    #[error("Euler characteristic {0} is not an integer; inputs are inconsistent")]
    NonIntegralChi(Rational),

    #[error("lens order must be positive, got {0}")]
    InvalidP(i64),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("value error: {0}")]
    Value(String),
}

fn summarize(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// True for errors caused by malformed user input rather than failed
    /// mathematical checks.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::NonIntegralChi(_))
    }
}
