use crate::automata::AutomataError;
use crate::expr::ParseError;
use crate::spec::SpecIssue;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Automata(#[from] AutomataError),

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("invalid specification: {}", join(.0))]
    InvalidSpec(Vec<SpecIssue>),

    #[error("set exceeds argument language")]
    NotSubset,

    #[error("`{0}` is not an argument")]
    NotAnArgument(String),

    #[error("argument `{0}` has infinitely many attackers")]
    NonFinitary(String),

    #[error("attackers of `{word}` exceed the cap of {cap} words")]
    CapExceeded { word: String, cap: usize },

    #[error("alphabets overlap on symbol `{0}`")]
    AlphabetOverlap(String),

    #[error("invalid finite framework: {0}")]
    InvalidFiniteAf(String),

    #[error("cross attack endpoint `{word}` is not an argument of component `{component}`")]
    BadEndpoint { component: String, word: String },

    #[error("{0} arguments exceed the exhaustive-enumeration limit of {1}")]
    TooLarge(usize, usize),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

fn join(issues: &[SpecIssue]) -> String {
    issues
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
