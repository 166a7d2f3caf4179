use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("integrality failure: {0}")]
    Integrality(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("type error: {0}")]
    Type(String),
}
