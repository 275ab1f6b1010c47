use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("unknown field `{0}` (expected `rational` or `fp:<prime>`)")]
    BadDescriptor(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^32)")]
    PrimeTooLarge(u64),
    #[error("cannot reduce {value} modulo {p}: denominator divisible by p")]
    DenominatorDivisible { value: String, p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial is not homogeneous (total degrees {degrees:?})")]
    NotHomogeneous { degrees: Vec<u32> },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("curve is not reduced (Hilbert function of the Jacobian algebra does not stabilize)")]
    NotReduced,
    #[error("Hilbert function still changing at the cap k = {cap}: last values {tail:?}")]
    NotStabilized { cap: u32, tail: Vec<usize> },
    #[error("curve degree {0} is below 3")]
    DegreeTooSmall(u32),
    #[error("not a syzygy: a f_x + b f_y + c f_z = {0}")]
    NotASyzygy(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("invalid Betti data: {0}")]
    InvalidBetti(String),
    #[error("free curve (m = 2) has no partition")]
    FreeCurve,
    #[error("Tjurina formula gives a negative value {0}")]
    NegativeResult(i64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
