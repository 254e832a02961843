//! Finite-dimensional comodules over structure-constant coalgebras: construction,
//! socle series, multiplicities, Hom spaces and indecomposability.

pub mod comodule;
pub mod error;
pub mod hefuv;
pub mod hom;
pub mod json;
pub mod structure;

pub use comodule::{Comodule, ComoduleFailure, ComoduleReport};
pub use error::ComoduleError;
pub use hefuv::HefuvComodules;
pub use json::ComoduleJson;
pub use hom::{
    are_isomorphic, end_analysis, hom_space, indecomposability, is_abs_indecomposable, is_comodule_map, EndAlgebra,
    Indecomposability,
};
pub use structure::{
    decompose_semisimple, dimension_vector, over_coefficients, socle_filtration, split_semisimple, DimensionVector,
    SocleFiltration,
};
