use coalgebra_core::CoalgebraError;
use fusion::FusionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("dim((C∧D)/(C+D)) = {dim} for {from} → {to} is not divisible by r·s = {rs}")]
    NotDivisible { from: String, to: String, dim: usize, rs: usize },
    #[error("graph has a loop at {0}; classify the separated quiver instead")]
    Loop(String),
    #[error("α({i}, {k}, {t}) = {left} but α({t}, {k}*, {i}) = {right}")]
    Asymmetric { i: String, k: String, t: String, left: i64, right: i64 },
    #[error("{0} is not a Dynkin diagram")]
    NotDynkin(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
}
