//! Presented Hopf algebras from five families, normal-form rewriting, a Hopf-axiom
//! checker, and truncation to finite structure-constant coalgebras.

pub mod family;
pub mod hopf;
pub mod parse;
pub mod truncate;
pub mod verify;
pub mod word;

pub use family::{build_a, build_anq, build_bmn, build_hinf, Family, ParamError, Strategy};
pub use hopf::PresentedHopf;
pub use parse::{parse_descriptor, parse_element, parse_element_in, ParseError};
pub use truncate::{truncate_coalgebra, Truncation, TruncationError, TruncationSpec};
pub use verify::{verify_hopf_axioms, Check, HopfReport};
pub use word::{format_element, word_label, Element, Letter, Word};

pub fn build_hefuv() -> PresentedHopf {
    PresentedHopf::new(Family::Hefuv)
}
