//! Complexes of projectives, morphisms modulo homotopy, mutation and
//! endomorphism algebras.

pub mod complex;
pub mod endo;
pub mod hom;
pub mod matching;
pub mod mutation;

pub use complex::{stalk, AMatrix, ChainMap, Complex, ProjComplex};
pub use endo::{
    composition_well_defined, end_algebra, end_structure, extract_presentation, EndAlgebra,
    ExtractedPresentation, StructAlgebra,
};
pub use hom::{hom_dimension, hom_space, homotopy_hom, HomLayout, HomotopySpace};
pub use matching::{describe_witness, presentation_match, MatchResult, MatchWitness};
pub use mutation::{
    is_silting, local_radical, minimal_left_approximation, minimal_right_approximation,
    mutate_left, mutate_right, silting_report, Approximation, SiltingReport,
};
