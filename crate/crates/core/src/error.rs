use thiserror::Error;

/// Everything that can go wrong while building codes or decoding words.
///
/// Decoding *failures* (an empty list, an ambiguous AMD stage) are ordinary
/// outcomes and are reported through the decoders' return types, not here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field order {p}^{e} does not fit below 2^31")]
    FieldTooLarge { p: u32, e: u32 },

    #[error("no irreducible polynomial of degree {e} over GF({p}) found")]
    NoIrreducible { p: u32, e: u32 },

    #[error("element {value} is out of range for a field of order {order}")]
    ElementOutOfRange { value: u64, order: u32 },

    #[error("element does not belong to GF({p}^{e}): {reason}")]
    BadElementEncoding { p: u32, e: u32, reason: String },

    #[error("zero has no multiplicative inverse")]
    InverseOfZero,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("field order {order} exceeds the exhaustive scan cap {cap}")]
    ScanCapExceeded { order: u32, cap: u32 },

    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("invalid code: {0}")]
    InvalidSpec(String),

    #[error("polynomial of degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error(
        "radius {tau} is infeasible for n = {n}, k = {k}; largest feasible radius is {}",
        max_tau.map(|t| t.to_string()).unwrap_or_else(|| "none".into())
    )]
    Infeasible {
        n: usize,
        k: usize,
        tau: usize,
        max_tau: Option<usize>,
    },

    #[error("unique decoding precondition violated: {0}")]
    UniquePrecondition(String),

    #[error("enumeration of {count} codewords exceeds the cap {cap}")]
    EnumerationCap { count: u128, cap: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
