use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid k-tuple: {0}")]
    InvalidKTuple(String),

    #[error("k-tuples differ: {left} vs {right}")]
    KTupleMismatch { left: String, right: String },

    #[error("sections live in different charts")]
    ChartMismatch,

    #[error("term {term} has degree {degree}, not a section of T_2")]
    NotInT2 { term: String, degree: i64 },

    #[error("exponent window [{lo}, {hi}] exceeds the supported width {limit}")]
    WindowOverflow { lo: i64, hi: i64, limit: i64 },

    #[error("automorphism entry a_{row}{col} = {entry} violates the degree bound {bound}")]
    DegreeBound { row: usize, col: usize, entry: String, bound: i64 },

    #[error("automorphism determinant {0} is not a nonzero constant")]
    BadDeterminant(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
