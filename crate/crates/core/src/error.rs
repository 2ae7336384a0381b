use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading coefficient {0} of the divisor is not a unit")]
    NonUnitLeadingCoefficient(BigInt),
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("polynomials live over different prime fields ({0} and {1})")]
    ModulusMismatch(BigInt, BigInt),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("factorization budget exhausted with cofactor {0} remaining")]
    FactorizationLimit(BigInt),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("minor enumeration needs {needed} minors, cap is {cap}")]
    EnumerationLimit { needed: u128, cap: u128 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("numerator polynomial is zero after the gcd split")]
    ZeroNumerator,
    #[error("degree order violated: deg f = {deg_f} > deg g = {deg_g}")]
    DegreeOrder { deg_f: usize, deg_g: usize },
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
