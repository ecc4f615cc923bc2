//! Brute-force machinery that checks the triple description of
//! Aut(B⁰_λ(S)) against an independent search.
//!
//! [`enumerate_automorphisms`] only reads a Cayley table and never touches
//! the triple machinery; everything else in this module compares the two.

mod decompose;
mod generators;
mod report;
mod search;
mod verify;

pub use decompose::decompose_automorphism;
pub use generators::greedy_generators;
pub use report::{AutGroupReport, Check, NonAutomorphism, Subject, TrialReport, Witness, ZeroFixingReport};
pub use search::{count_automorphisms, enumerate_automorphisms};
pub use verify::{
    permutes_diagonal_units, verify_brandt_semigroup_of_group, verify_extension, verify_group_axioms,
    verify_matrix_unit_automorphisms, verify_quotient_structure, verify_realization_homomorphism,
    verify_triple_parametrization, verify_zero_semigroup_bijections, zero_fixing_census, zero_fixing_contrast,
    DEFAULT_SEED,
};
