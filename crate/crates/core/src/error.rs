use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("quotient by zero")]
    ZeroModulus,
    #[error("quotient by a unit is the zero ring")]
    ZeroRing,
    #[error("{op} is not supported over {ring}")]
    Unsupported { op: &'static str, ring: String },
    #[error("{0} is infinite")]
    InfiniteRing(String),
    #[error("ring has {size} elements, above the cap of {cap}")]
    CapExceeded { size: String, cap: usize },
    #[error("matrix is not unimodular: entries {generators:?} generate a proper ideal")]
    NotUnimodular { generators: Vec<String> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate does not satisfy a(es)+b(et)+c(fs)+d(ft) = 1")]
    InvalidCertificate,
    #[error("search cap of height {0} exhausted")]
    CapExhausted(u32),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
