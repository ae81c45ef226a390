use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Unsupported family, rank or space parameters.
    #[error("configuration error: {0}")]
    Config(String),
    /// An argument that violates an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A computed structure failed one of its own invariants.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
