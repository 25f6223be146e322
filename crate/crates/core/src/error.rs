use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map one-to-one onto the exit codes of the command-line tool:
/// domain and usage errors are bad parameters, `Resource` is a bound violation,
/// and `Construction`/`Inconsistent` signal a bug in a formula or algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("resource bound exceeded: {what} is {size}, bound `{bound_name}` is {bound}")]
    Resource {
        what: String,
        size: usize,
        bound_name: &'static str,
        bound: usize,
    },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
