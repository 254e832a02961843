//! Exact structure-constant coalgebras: scalars, sparse linear algebra,
//! multiplicative and primitive matrices, wedges, and the coradical filtration.

pub mod coalgebra;
pub mod coradical;
pub mod error;
pub mod json;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod product;
pub mod scalar;

pub use coalgebra::{
    is_basic, is_multiplicative, is_primitive, is_subcoalgebra, verify_coalgebra, wedge, AxiomFailure, CoMatrix,
    Coalgebra, CoalgebraReport, Identity, PrimitiveKind, Tensor2,
};
pub use coradical::{coradical, coradical_filtration, Coradical, Filtration, SimpleBlock};
pub use error::CoalgebraError;
pub use linalg::{Frame, Mat, SparseVec, Subspace};
pub use par::Exec;
pub use product::{Escape, ProductOracle};
pub use scalar::Scalar;
