//! Error type shared by the whole library.

use thiserror::Error;

/// All failure modes of the library.
///
/// Mathematical "failures" that are expected outcomes (a polynomial that is
/// not Schur positive, a conjecture check that does not hold) are reported
/// through result/report types, not through this enum; `Error` is reserved
/// for precondition violations and internal invariant breakage.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: parts must be positive and weakly decreasing")]
    NotAPartition,
    #[error("cell ({0},{1}) lies outside the shape")]
    CellOutsideShape(usize, usize),
    #[error("operation requires a non-empty partition")]
    EmptyPartition,
    #[error("partition is not triangular")]
    NotTriangular,
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("not a 2-partition")]
    NotTwoPart,
    #[error("row-regular index out of range")]
    IndexOutOfRange,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(&'static str),
    #[error("not a standard Young tableau")]
    NotStandard,
    #[error("tableau shape does not match the expected shape")]
    ShapeMismatch,
    #[error("polynomial arity mismatch")]
    ArityMismatch,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("term of degree larger than the homogenization degree")]
    DegreeOverflow,
    #[error("integer coefficient overflow")]
    CoefficientOverflow,
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
    #[error("invalid {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
