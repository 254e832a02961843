use coalgebra_core::{CoalgebraError, Escape};
use comodule::ComoduleError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("product {left}·{right} leaves the window: {missing}")]
    Escape { left: String, right: String, missing: String },
    #[error("unknown basis label {0}")]
    UnknownLabel(String),
    #[error("malformed based ring: {0}")]
    Structural(String),
    #[error("block {0} of the decomposition matches no simple subcoalgebra")]
    Unmatched(usize),
    #[error(transparent)]
    Product(#[from] Escape),
    #[error(transparent)]
    Comodule(#[from] ComoduleError),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}
