use thiserror::Error;

use crate::certificate::StructureViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid certificate structure: {}", join_violations(.0))]
    Structure(Vec<StructureViolation>),

    #[error("unknown built-in certificate `{0}`")]
    UnknownName(String),

    #[error("brute-force oracle refuses n = {n} (limit {limit})")]
    Guard { n: usize, limit: usize },

    #[error("multiplier {u} is not a unit modulo {n}")]
    NotAUnit { u: usize, n: usize },

    #[error("invalid search configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

fn join_violations(violations: &[StructureViolation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
