use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("n = {n} has {walls} walls; subarrangement bitsets hold at most 64")]
    TooManyWalls { n: usize, walls: usize },
    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("type I wall needs two distinct vertices, got ({0}, {1})")]
    DegeneratePair(usize, usize),
    #[error("bitset {bits:#x} sets bits beyond the {walls} walls of the space")]
    BitsOutOfRange { bits: u64, walls: usize },
    #[error("invalid hex bitset {0:?}")]
    InvalidHex(String),
    #[error("vertex {0} carries both colors 0 and 1")]
    DoubleColor(usize),
    #[error("exhaustive enumeration is supported for n <= {cap}, got n = {n}")]
    DimensionCap { n: usize, cap: usize },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too small; need a prime q >= 3")]
    ModulusTooSmall(u64),
    #[error("q^n = {q}^{n} exceeds the point-count budget of {budget}")]
    BudgetExceeded { q: u64, n: usize, budget: u64 },
    #[error("interpolation in dimension {n} needs {needed} distinct points, got {got}")]
    InsufficientPoints { n: usize, needed: usize, got: usize },
    #[error("point counts were taken in dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate interpolation node q = {0}")]
    DuplicateNode(u64),
    #[error("interpolated polynomial has non-integer coefficient {0}")]
    NonIntegerCoefficients(String),
    #[error("count at q = {q} disagrees with the polynomial through the other points")]
    InconsistentPoint { q: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
