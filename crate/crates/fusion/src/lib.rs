//! Based rings and fusion coefficients computed from cosemisimple coalgebras.

pub mod decompose;
pub mod error;
pub mod ring;

pub use decompose::{
    class_of, conjugate, fusion_ring_from_coalgebra, grothendieck_check, odot_prime, star_from_antipode,
    tensor_decompose, Decomposition, GrothendieckEntry, GrothendieckReport,
};
pub use error::FusionError;
pub use ring::{verify_based_ring, AxiomCheck, BasedRing, Combination, RingReport};
