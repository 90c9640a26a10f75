use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("field of size {p}^{m} exceeds the 2^16 element limit")]
    SizeBudgetExceeded { p: u32, m: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(u32),
    #[error("element encoding {value} is out of range for a field of size {q}")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("field was not constructed as a quadratic extension")]
    NoBaseField,
    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(u32),

    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("k = {k} is invalid here: {reason}")]
    BadK { k: usize, reason: String },
    #[error("duplicate evaluation node {0}")]
    DuplicateNode(u32),
    #[error("multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("invalid dimensions: {0}")]
    BadDims(String),

    #[error("generator matrix is zero")]
    ZeroMatrix,
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("generator matrix does not have full row rank")]
    RankDeficient,
    #[error("code has dimension 0; minimum distance is undefined")]
    DegenerateCode,
    #[error("search needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("code is not MDS")]
    NotMds,
    #[error("covering radius {rho} is below n - k = {full}")]
    CoveringRadiusDeficient { rho: usize, full: usize },
    #[error("covering radius {0} is not usable for this criterion")]
    BadRho(usize),

    #[error("pole {0} coincides with an evaluation node")]
    PoleCollision(u32),
    #[error("u = {u} is outside 1..={max}")]
    BadU { u: u32, max: u32 },

    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid code description: {0}")]
    InvalidSpec(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
