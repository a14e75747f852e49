use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("derivation index {index} out of range (basis has {len} elements)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid index: {0}")]
    IndexError(String),
    #[error("the field {0} has an empty derivation basis")]
    NoDerivations(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not have determinant one")]
    NotSpecialLinear,
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("subspace is not a complement of the kernel line")]
    NotAComplement,
    #[error("construction needs at least 3 diagonal slots (n >= 2), got n = {0}")]
    RequiresN3(usize),
    #[error("line {line} has embedded rank {rank}, expected 2")]
    DegenerateLine { line: usize, rank: usize },
    #[error("relation row {0} is not killed by the projection")]
    RelationNotKilled(usize),
    #[error("cocycle table has no entry for the requested group element")]
    NotInTable,
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
