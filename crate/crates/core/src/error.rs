use alloc::string::String;

/// Failure modes shared by every engine operation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("structural mismatch: {0}")]
    Structural(String),
    #[error("not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal cross-check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = core::result::Result<T, AlgebraError>;
