use std::fmt;

use serde::Serialize;

use crate::brandt::{BrandtSemigroup, ExtensionKind};

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subject {
    pub base: String,
    pub base_order: usize,
    pub lambda: usize,
    pub kind: &'static str,
    pub carrier_order: usize,
}

impl Subject {
    pub fn of(ext: &BrandtSemigroup) -> Self {
        Subject {
            base: ext.base().name().unwrap_or("S").to_string(),
            base_order: ext.base().len(),
            lambda: ext.lambda(),
            kind: match ext.kind() {
                ExtensionKind::Monoid => "monoid-with-zero",
                ExtensionKind::MatrixUnits => "matrix-units",
                ExtensionKind::SemigroupWithZero => "semigroup-with-zero",
            },
            carrier_order: ext.len(),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "B^0_{}({}) [{}; |S| = {}, |B| = {}]",
            self.lambda, self.base, self.kind, self.base_order, self.carrier_order
        )
    }
}

/// A named boolean check inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

/// An automorphism found by one side only, as carrier labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub side: &'static str,
    pub images: Vec<String>,
}

/// Oracle-versus-structure comparison for one extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutGroupReport {
    pub subject: Subject,
    pub oracle_order: u128,
    pub structural_order: u128,
    pub formula_order: u128,
    #[serde(rename = "match")]
    pub matched: bool,
    pub kernel_size: u128,
    pub triple_group_order: u128,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl AutGroupReport {
    /// Set equality held, the orders agree and every named check passed.
    pub fn passed(&self) -> bool {
        self.matched
            && self.oracle_order == self.structural_order
            && self.oracle_order == self.formula_order
            && self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

impl fmt::Display for AutGroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        writeln!(f, "  oracle order:       {}", self.oracle_order)?;
        writeln!(f, "  structural order:   {}", self.structural_order)?;
        writeln!(f, "  formula order:      {}", self.formula_order)?;
        writeln!(f, "  triple group order: {}", self.triple_group_order)?;
        writeln!(f, "  kernel size:        {}", self.kernel_size)?;
        writeln!(f, "  sets match:         {}", self.matched)?;
        for c in &self.checks {
            writeln!(f, "  {:<20}{}", format!("{}:", c.name), c.passed)?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness ({}): [{}]", w.side, w.images.join(", "))?;
        }
        if let Some(seed) = self.seed {
            writeln!(f, "  seed:               {seed}")?;
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(f, "  elapsed:            {ms} ms")?;
        }
        write!(
            f,
            "  result:             {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// A zero-fixing bijection that fails to be multiplicative, with one
/// offending product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonAutomorphism {
    pub images: Vec<String>,
    pub left: String,
    pub right: String,
}

/// Census of the zero-fixing bijections of a carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroFixingReport {
    pub subject: Subject,
    pub bijections: u128,
    pub automorphisms: u128,
    pub all_automorphisms: bool,
    pub witness: Option<NonAutomorphism>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl fmt::Display for ZeroFixingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        writeln!(f, "  zero-fixing bijections: {}", self.bijections)?;
        writeln!(f, "  automorphisms among them: {}", self.automorphisms)?;
        writeln!(f, "  all automorphisms: {}", self.all_automorphisms)?;
        if let Some(w) = &self.witness {
            writeln!(
                f,
                "  non-automorphism: [{}] breaks {}*{}",
                w.images.join(", "),
                w.left,
                w.right
            )?;
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(f, "  elapsed: {ms} ms")?;
        }
        Ok(())
    }
}

/// Outcome of a seeded randomized property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub subject: Subject,
    pub property: &'static str,
    pub trials: usize,
    pub failures: usize,
    pub seed: u64,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        write!(
            f,
            "  {}: {} trials, {} failures (seed {})",
            self.property, self.trials, self.failures, self.seed
        )
    }
}
