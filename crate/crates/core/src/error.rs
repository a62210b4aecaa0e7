use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not nilpotent (A^{0} != 0)")]
    NotNilpotent(usize),
    #[error("i and n not coprime (n = {n}, i = {i})")]
    NotCoprime { n: usize, i: usize },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("tensor is not skew-symmetric")]
    NotSkew,
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("size guard exceeded: {what} = {value} > {limit} (raise YBWB_GUARD_N)")]
    GuardExceeded { what: &'static str, value: usize, limit: usize },
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("span is not closed under the bracket")]
    NotSubalgebra,
    #[error("restriction of r to its carrier is degenerate")]
    DegenerateRestriction,
    #[error("b^3 != 0 as a Kronecker matrix")]
    CubeNotZero,
    #[error("expansion has no positive-degree coefficient")]
    NoCoefficients,
    #[error("construction check failed: {0}")]
    CheckFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
