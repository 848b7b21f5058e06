use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Parse` covers malformed partition / operator text; `Domain` covers
/// inputs that are well-formed but outside an operation's domain (invalid
/// partition for a theory, non-rigid input to a map, and so on).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
