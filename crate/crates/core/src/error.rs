use thiserror::Error;

/// Errors raised while building or querying semigroups, their Brandt
/// extensions and automorphism groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup must have at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry [{row}][{col}] = {value} is out of range for {size} elements")]
    BadIndex {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("element index {index} is out of range for {size} elements")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("semigroup has no identity")]
    NoIdentity,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("bad cardinality for {what}: got {value}, need at least {min}")]
    BadCardinality {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("not a monoid with zero: {0}")]
    NotMonoidWithZero(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("codec argument out of range: {0}")]
    OutOfRange(String),
    #[error("lambda = {lambda} exceeds the configured cap {cap}")]
    LambdaCap { lambda: usize, cap: usize },
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("triple does not belong to this extension: {0}")]
    MismatchedBase(String),
    #[error("budget exceeded for {what}: needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("map is not an automorphism of the extension")]
    NotAnAutomorphism,
    #[error("decomposition mismatch: {0}")]
    DecompositionMismatch(String),
    #[error("realized map is not an automorphism: {0}")]
    RealizationNotAutomorphism(String),
}

impl Error {
    /// True when the error means a structural claim about the extension was
    /// contradicted by computation (as opposed to bad input or a budget).
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Error::DecompositionMismatch(_) | Error::RealizationNotAutomorphism(_)
        )
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::LambdaCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
