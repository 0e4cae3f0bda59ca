use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero element has no inverse")]
    ZeroInverse,
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("minimal polynomial is not irreducible over Q: {0}")]
    NotIrreducible(String),
    #[error("mismatched number fields")]
    FieldMismatch,
    #[error("the ring is a field and has no zero divisors")]
    RingIsField,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("family is linearly dependent")]
    DependentFamily,
    #[error("no suitable x0 found after {tries} tries (seed {seed}, window {window})")]
    SearchExhausted { seed: u64, window: usize, tries: usize },
    #[error("reduction hypothesis fails: {0}")]
    HypothesisFailed(String),
    #[error("certificate invalid: {0}")]
    CertificateMismatch(String),
    #[error("malformed input: {0}")]
    Parse(String),
}
