//! Brandt λ⁰-extensions of finite monoids with zero and their automorphism
//! groups.
//!
//! * [`semigroup`]: Cayley tables, idempotents, units, maps.
//! * [`brandt`]: construction of B⁰_λ(S), matrix units and Brandt semigroups.
//! * [`triples`]: automorphisms as triples `[φ, h, u]`, their product,
//!   inverses, kernel and canonical representatives.
//! * [`oracle`]: backtracking automorphism search and the cross-checks.
//! * [`corpus`]: the built-in test inputs.
//! * [`cli`]: the `brandt` command-line front end.

pub mod brandt;
pub mod budget;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod oracle;
pub mod semigroup;
pub mod triples;

pub use brandt::{brandt_semigroup_of_group, construct_brandt, matrix_units, BrandtElement, BrandtSemigroup};
pub use budget::Budget;
pub use error::{Error, Result};
pub use semigroup::{CayleyTable, FiniteSemigroup, SemigroupMap, UnitGroup};
pub use triples::{aut_group_order, AutTriple, TripleDoc, TripleGroup};
