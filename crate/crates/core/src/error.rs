use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient ring mismatch: {0}")]
    AmbientMismatch(String),

    #[error("exponent vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("coefficient field mismatch: {0}")]
    FieldMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("prime {0} divides a coefficient denominator")]
    BadPrime(u64),

    #[error("groebner computation exceeded its cap: {0}")]
    DegreeCapExceeded(String),

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("ideal is not contained in the enclosing ideal")]
    NotContained,

    #[error("presentation exceeds complexity {0}")]
    ComplexityExceeded(usize),

    #[error("malformed ideal code: {0}")]
    MalformedCode(String),

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("a generator degenerates modulo {0}")]
    DegenerateGenerator(u64),

    #[error("point search needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
