use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precision exhausted")]
    PrecisionExhausted,
    #[error("basis is singular")]
    Singular,
    #[error("endomorphism does not stabilize the lattice")]
    NotStable,
    #[error("induced endomorphism is not nilpotent")]
    NotNilpotent,
    #[error("lattice is not in the attracting cell of the action")]
    NotInPlusCell,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
