use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalgebraError {
    #[error("malformed coalgebra: {0}")]
    Structural(String),
    #[error("malformed coalgebra: index {index} in the entry for basis element {basis} is out of range (dim {dim})")]
    IndexOutOfRange { basis: usize, index: usize, dim: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0} is not a subcoalgebra")]
    NotSubcoalgebra(String),
    #[error("non-split simple block {block}: {reason}")]
    NonSplit { block: String, reason: String },
    #[error("coradical filtration stalled at dimension {dim} of {total}")]
    FiltrationStalled { dim: usize, total: usize },
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ScalarError),
}
