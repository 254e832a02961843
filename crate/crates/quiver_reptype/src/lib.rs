//! Link quivers of coalgebras, separated quivers, Dynkin and Euclidean recognition, and the
//! graph-theoretic criteria for discrete corepresentation type.

pub mod discrete;
pub mod error;
pub mod graph;
pub mod link;
pub mod qmn;
pub mod quiver;
pub mod roots;

pub use discrete::{
    discreteness_check_finite_coradical, is_basic_cycle_union, is_schurian, trichotomy_classify, Discreteness,
    DiscretenessReport, Trichotomy,
};
pub use error::QuiverError;
pub use graph::{classify_ade, spectral_class, AdeClass, Graph, Spectral};
pub use link::{link_quiver_from_coalgebra, link_quiver_from_fusion};
pub use qmn::build_qmn;
pub use quiver::{separated_quiver, Quiver, Vertex};
pub use roots::{dynkin_positive_roots, tits_form};
