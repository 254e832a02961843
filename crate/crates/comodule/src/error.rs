use coalgebra_core::{CoalgebraError, Escape};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComoduleError {
    #[error("malformed comodule: {0}")]
    Structural(String),
    #[error("spanning vectors are linearly dependent")]
    Dependent,
    #[error("span is not a subcomodule: Δ of vector {0} leaves it")]
    NotSubcomodule(usize),
    #[error("comodule is not semisimple over the given coradical")]
    NotSemisimple,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("missing product structure: {0}")]
    Product(#[from] Escape),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}
