use serde::{Deserialize, Serialize};

use crate::brandt::DEFAULT_LAMBDA_CAP;
use crate::error::{Error, Result};

/// Limits that keep exhaustive computations at desk scale. Exceeding any of
/// them is an error rather than a long-running search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest λ accepted by constructions.
    pub max_lambda: usize,
    /// Largest semigroup handed to the backtracking automorphism search.
    pub max_search_elements: usize,
    /// Largest number of triples materialized by an enumeration.
    pub max_triples: u128,
    /// Largest number of bijections iterated by the zero-fixing check.
    pub max_bijections: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_lambda: DEFAULT_LAMBDA_CAP,
            max_search_elements: 32,
            max_triples: 1_000_000,
            max_bijections: 10_000_000,
        }
    }
}

impl Budget {
    pub(crate) fn check(&self, what: &'static str, needed: u128, budget: u128) -> Result<()> {
        if needed > budget {
            Err(Error::BudgetExceeded { what, needed, budget })
        } else {
            Ok(())
        }
    }
}

/// n!, saturating at `u128::MAX`.
pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}
