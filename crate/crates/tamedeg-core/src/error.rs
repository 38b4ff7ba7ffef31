use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimMismatch { expected: usize, got: usize },
    #[error("quiver rejected: {0}")]
    BadQuiver(String),
    #[error("operation needs an extended Dynkin quiver")]
    NotExtended,
    #[error("{0} is projective and has no AR translate")]
    Projective(String),
    #[error("{0} is injective and has no inverse AR translate")]
    Injective(String),
    #[error("no indecomposable with dimension vector {0}")]
    NoIndec(String),
    #[error("arguments lie in different components or tubes")]
    Incomparable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration cap exceeded: {0}")]
    Cap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
