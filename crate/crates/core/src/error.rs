use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("`{0}` is not a valid variable name")]
    InvalidIdentifier(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("homomorphism needs {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("expected {expected} exponents, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("determinant of a {0}x{0} matrix exceeds the size guard")]
    TooLarge(usize),

    #[error("auxiliary variable `{0}` clashes with a Segre variable")]
    NameClash(String),
    #[error("membership certificate must have at least one pair")]
    EmptyCertificate,

    #[error("values are not coprime (gcd {0})")]
    NotCoprime(String),
    #[error("row ({0}) is not unimodular")]
    NotUnimodular(String),
    #[error("invalid completion certificate: {0}")]
    InvalidCertificate(String),
    #[error("constructed completion failed verification")]
    VerificationFailed,
}
