use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),

    #[error("modulus is reducible: it has the factor {factor}")]
    ReducibleModulus { factor: String },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not invertible modulo the given modulus")]
    NotInvertible,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("support element at index {index} is a root of the Goppa polynomial")]
    SupportRoot { index: usize },

    #[error("support elements at indices {first} and {second} coincide")]
    SupportRepeated { first: usize, second: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("message must have weight {expected}, found {actual}")]
    WrongWeight { expected: usize, actual: usize },

    #[error("decoding failed: {0}")]
    DecodingFailure(String),

    #[error("enumeration of {requested} exceeds the limit of 2^{limit_bits} vectors")]
    EnumerationTooLarge { requested: String, limit_bits: u32 },

    #[error("search exhausted after {iterations} iterations")]
    Exhausted { iterations: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
