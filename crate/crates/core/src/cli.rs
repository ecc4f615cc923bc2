//! The `brandt` command line.
//!
//! Exit codes: 0 success, 1 a comparison failed, 2 unreadable input or bad
//! usage, 3 algebraically invalid input, 4 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::brandt::BrandtSemigroup;
use crate::budget::Budget;
use crate::corpus;
use crate::error::Error;
use crate::oracle::{self, AutGroupReport, Subject, TrialReport, ZeroFixingReport, DEFAULT_SEED};
use crate::semigroup::{CayleyTable, FiniteSemigroup, SemigroupMap};
use crate::triples::{TripleDoc, TripleGroup};

#[derive(Debug, Parser)]
#[command(
    name = "brandt",
    version,
    about = "Brandt lambda^0-extensions of finite monoids with zero and their automorphisms"
)]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Budget override, `key=value`; keys: max_lambda, max_search_elements,
    /// max_triples, max_bijections.
    #[arg(long = "budget", global = true, value_name = "KEY=VALUE")]
    pub budget: Vec<String>,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Record wall-clock time in reports (makes JSON output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Triples,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Realized normalized triples equal the searched automorphisms.
    Parametrization,
    /// The same comparison for Brandt semigroups of cyclic groups.
    BrandtGroups,
    /// Automorphisms of the matrix units are induced by permutations.
    MatrixUnits,
    /// Every zero-fixing bijection over a zero semigroup is an automorphism.
    ZeroSemigroup,
    /// Realization turns triple products into compositions.
    Composition,
    /// Kernel, normality and quotient order.
    Quotient,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TripleOp {
    Realize,
    Compose,
    Invert,
    Normalize,
    Kernel,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Cayley-table JSON file.
    pub file: Option<PathBuf>,
    /// Built-in semigroup instead of a file.
    #[arg(long, conflicts_with = "file", help = format!("Built-in semigroup ({})", corpus::BUILTIN_NAMES))]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a Cayley table and describe it.
    Validate(Input),
    /// Write B^0_lambda(S) as a Cayley table.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, short)]
        lambda: usize,
    },
    /// Compute Aut(B^0_lambda(S)).
    Aut {
        #[command(flatten)]
        input: Input,
        #[arg(long, short)]
        lambda: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// `builtin` or a Cayley-table file.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Values of lambda used for corpus suites.
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2, 3])]
        lambdas: Vec<usize>,
        /// Largest lambda for the matrix-units suite.
        #[arg(long, default_value_t = 4)]
        max_lambda: usize,
        /// Cardinality of the zero semigroup.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Lambda for the zero-semigroup suite.
        #[arg(long, default_value_t = 2)]
        lambda: usize,
        /// Random trials per instance.
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Append a fresh zero.
    AdjoinZero(Input),
    /// Append a fresh identity.
    AdjoinIdentity(Input),
    /// Operate on triples [phi, h, u] given as JSON files.
    Triple {
        #[arg(value_enum)]
        op: TripleOp,
        #[command(flatten)]
        input: Input,
        #[arg(long, short)]
        lambda: usize,
        /// Triple file(s); `compose` takes two.
        #[arg(long = "triple", short = 't')]
        triples: Vec<PathBuf>,
    },
}

/// Failures of a command, each with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error(transparent)]
    Algebra(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Algebra(e) if e.is_violation() => 1,
            CliError::Algebra(e) if e.is_budget() => 4,
            CliError::Algebra(_) => 3,
        }
    }
}

/// Rendered output and whether every comparison passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: {e}");
                return 2;
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = parse_budget(&cli.budget)?;
    let ctx = Context {
        format: cli.format,
        seed: cli.seed,
        timing: cli.timing,
        budget,
    };
    match &cli.command {
        Command::Validate(input) => ctx.validate(&load(input)?),
        Command::Extend { input, lambda } => ctx.extend(&load(input)?, *lambda),
        Command::Aut { input, lambda, method } => ctx.aut(&load(input)?, *lambda, *method),
        Command::Verify {
            suite,
            corpus,
            lambdas,
            max_lambda,
            k,
            lambda,
            trials,
        } => ctx.verify(
            *suite,
            &VerifyArgs {
                corpus,
                lambdas,
                max_lambda: *max_lambda,
                k: *k,
                lambda: *lambda,
                trials: *trials,
            },
        ),
        Command::AdjoinZero(input) => Ok(table_outcome(&load(input)?.adjoin_zero())),
        Command::AdjoinIdentity(input) => Ok(table_outcome(&load(input)?.adjoin_identity())),
        Command::Triple {
            op,
            input,
            lambda,
            triples,
        } => ctx.triple(*op, &load(input)?, *lambda, triples),
    }
}

fn parse_budget(overrides: &[String]) -> Result<Budget, CliError> {
    let mut budget = Budget::default();
    for item in overrides {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("budget override {item:?} is not key=value")))?;
        let bad = || CliError::Usage(format!("budget value {value:?} is not a number"));
        match key {
            "max_lambda" => budget.max_lambda = value.parse().map_err(|_| bad())?,
            "max_search_elements" => budget.max_search_elements = value.parse().map_err(|_| bad())?,
            "max_triples" => budget.max_triples = value.parse().map_err(|_| bad())?,
            "max_bijections" => budget.max_bijections = value.parse().map_err(|_| bad())?,
            _ => return Err(CliError::Usage(format!("unknown budget key {key:?}"))),
        }
    }
    Ok(budget)
}

fn load(input: &Input) -> Result<FiniteSemigroup, CliError> {
    match (&input.file, &input.builtin) {
        (_, Some(name)) => corpus::builtin(name)
            .ok_or_else(|| CliError::Usage(format!("unknown built-in {name:?}; known: {}", corpus::BUILTIN_NAMES))),
        (Some(path), None) => load_file(path),
        (None, None) => Err(CliError::Usage("give a Cayley-table file or --builtin NAME".into())),
    }
}

pub fn load_file(path: &Path) -> Result<FiniteSemigroup, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc = CayleyTable::from_json(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    Ok(FiniteSemigroup::from_document(doc)?)
}

fn read_triple(path: &Path) -> Result<TripleDoc, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn table_outcome(s: &FiniteSemigroup) -> Outcome {
    Outcome {
        text: s.to_document().to_json(),
        passed: true,
    }
}

struct VerifyArgs<'a> {
    corpus: &'a str,
    lambdas: &'a [usize],
    max_lambda: usize,
    k: usize,
    lambda: usize,
    trials: usize,
}

struct Context {
    format: Format,
    seed: u64,
    timing: bool,
    budget: Budget,
}

/// Description of a validated table.
#[derive(Debug, Serialize)]
struct Description {
    name: Option<String>,
    order: usize,
    kind: &'static str,
    zero: Option<String>,
    identity: Option<String>,
    units: Option<Vec<String>>,
    idempotents: Vec<String>,
    maximal_idempotents: Vec<String>,
    /// strict relations e < f of the natural order
    natural_order: Vec<[String; 2]>,
    idempotents_form_band: bool,
}

#[derive(Debug, Serialize)]
struct AutSummary {
    subject: Subject,
    method: &'static str,
    order: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    triple_group_order: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel_size: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_order: Option<u128>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matched: Option<bool>,
    /// Generators as carrier image arrays, in label form.
    generators: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    generator_triples: Vec<TripleDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<AutGroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum SuiteReport {
    Aut(AutGroupReport),
    ZeroFixing(ZeroFixingReport),
    Trial(TrialReport),
}

impl SuiteReport {
    fn passed(&self) -> bool {
        match self {
            SuiteReport::Aut(r) => r.passed(),
            SuiteReport::ZeroFixing(r) => r.all_automorphisms,
            SuiteReport::Trial(r) => r.passed(),
        }
    }
}

#[derive(Debug, Serialize)]
struct SuiteOutput {
    suite: &'static str,
    passed: bool,
    reports: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn labels(s: &FiniteSemigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.label(x).to_string()).collect()
}

fn set(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(","))
}

impl Context {
    fn elapsed(&self, start: Instant) -> Option<u64> {
        self.timing.then(|| start.elapsed().as_millis() as u64)
    }

    fn validate(&self, s: &FiniteSemigroup) -> Result<Outcome, CliError> {
        let kind = match (s.zero(), s.identity()) {
            (Some(z), Some(e)) if z == e => "trivial semigroup",
            (Some(_), Some(_)) => "monoid with zero",
            (None, Some(_)) => "monoid",
            (Some(_), None) => "semigroup with zero",
            (None, None) => "semigroup",
        };
        let idempotents = s.idempotents();
        let mut order = Vec::new();
        for &e in &idempotents {
            for &f in &idempotents {
                if e != f && s.natural_leq(e, f)? {
                    order.push([s.label(e).to_string(), s.label(f).to_string()]);
                }
            }
        }
        let d = Description {
            name: s.name().map(str::to_string),
            order: s.len(),
            kind,
            zero: s.zero().map(|z| s.label(z).to_string()),
            identity: s.identity().map(|e| s.label(e).to_string()),
            units: s.unit_group().ok().map(|u| labels(s, u.members())),
            idempotents: labels(s, &idempotents),
            maximal_idempotents: labels(s, &s.maximal_idempotents()),
            natural_order: order,
            idempotents_form_band: s.idempotents_form_band(),
        };
        let text = match self.format {
            Format::Json => json(&d),
            Format::Text => {
                let mut t = String::new();
                let mut summary = vec![kind.to_string()];
                if let Some(units) = &d.units {
                    summary.push(format!("H₁ = {}", set(units)));
                }
                summary.push(format!("E = {}", set(&d.idempotents)));
                writeln!(t, "{}", summary.join("; ")).unwrap();
                if let Some(name) = &d.name {
                    writeln!(t, "name: {name}").unwrap();
                }
                writeln!(t, "order: {}", d.order).unwrap();
                writeln!(t, "zero: {}", d.zero.as_deref().unwrap_or("none")).unwrap();
                writeln!(t, "identity: {}", d.identity.as_deref().unwrap_or("none")).unwrap();
                writeln!(t, "maximal idempotents: {}", set(&d.maximal_idempotents)).unwrap();
                let rel: Vec<String> = d.natural_order.iter().map(|[e, f]| format!("{e} < {f}")).collect();
                writeln!(
                    t,
                    "natural order: {}",
                    if rel.is_empty() {
                        "discrete".into()
                    } else {
                        rel.join(", ")
                    }
                )
                .unwrap();
                writeln!(t, "idempotents form a band: {}", d.idempotents_form_band).unwrap();
                t
            }
        };
        Ok(Outcome { text, passed: true })
    }

    fn extend(&self, s: &FiniteSemigroup, lambda: usize) -> Result<Outcome, CliError> {
        let ext = BrandtSemigroup::new(s, lambda, self.budget.max_lambda)?;
        Ok(table_outcome(ext.carrier()))
    }

    fn aut(&self, s: &FiniteSemigroup, lambda: usize, method: Method) -> Result<Outcome, CliError> {
        let start = Instant::now();
        let summary = match method {
            Method::Brute => {
                let ext = BrandtSemigroup::over_semigroup_with_zero(s, lambda, self.budget.max_lambda)?;
                let auts = oracle::enumerate_automorphisms(ext.carrier(), &self.budget)?;
                let gens = oracle::greedy_generators(&auts);
                AutSummary {
                    subject: Subject::of(&ext),
                    method: "brute",
                    order: auts.len() as u128,
                    triple_group_order: None,
                    kernel_size: None,
                    oracle_order: Some(auts.len() as u128),
                    matched: None,
                    generators: gens.iter().map(|&i| labels(ext.carrier(), auts[i].images())).collect(),
                    generator_triples: Vec::new(),
                    report: None,
                    elapsed_ms: None,
                }
            }
            Method::Triples | Method::Both => {
                let ext = BrandtSemigroup::new(s, lambda, self.budget.max_lambda)?;
                let group = TripleGroup::new(&ext, &self.budget)?;
                let normalized = group.enumerate_normalized()?;
                let realized = normalized
                    .iter()
                    .map(|t| group.realize(t))
                    .collect::<Result<Vec<SemigroupMap>, Error>>()?;
                let gens = oracle::greedy_generators(&realized);
                let report = if method == Method::Both {
                    Some(oracle::verify_extension(&ext, &self.budget)?)
                } else {
                    None
                };
                AutSummary {
                    subject: Subject::of(&ext),
                    method: if method == Method::Both { "both" } else { "triples" },
                    order: group.aut_group_order(),
                    triple_group_order: Some(group.triple_group_order()),
                    kernel_size: Some(group.kernel_order()),
                    oracle_order: report.as_ref().map(|r| r.oracle_order),
                    matched: report.as_ref().map(AutGroupReport::passed),
                    generators: gens
                        .iter()
                        .map(|&i| labels(ext.carrier(), realized[i].images()))
                        .collect(),
                    generator_triples: gens.iter().map(|&i| group.to_doc(&normalized[i])).collect(),
                    report,
                    elapsed_ms: None,
                }
            }
        };
        let summary = AutSummary {
            elapsed_ms: self.elapsed(start),
            ..summary
        };
        let passed = summary.matched.unwrap_or(true);
        let text = match self.format {
            Format::Json => json(&summary),
            Format::Text => {
                let mut t = String::new();
                writeln!(t, "{}", summary.subject).unwrap();
                writeln!(t, "method: {}", summary.method).unwrap();
                writeln!(t, "|Aut| = {}", summary.order).unwrap();
                if let Some(x) = summary.triple_group_order {
                    writeln!(t, "triple group order: {x}").unwrap();
                }
                if let Some(x) = summary.kernel_size {
                    writeln!(t, "kernel size: {x}").unwrap();
                }
                if let Some(x) = summary.oracle_order {
                    writeln!(t, "oracle order: {x}").unwrap();
                }
                if let Some(x) = summary.matched {
                    writeln!(t, "match: {x}").unwrap();
                }
                writeln!(t, "generators: {}", summary.generators.len()).unwrap();
                for g in &summary.generator_triples {
                    writeln!(t, "  [{:?}, {:?}, {:?}]", g.phi, g.h, g.u).unwrap();
                }
                if let Some(ms) = summary.elapsed_ms {
                    writeln!(t, "elapsed: {ms} ms").unwrap();
                }
                t
            }
        };
        Ok(Outcome { text, passed })
    }

    fn corpus(&self, source: &str) -> Result<Vec<FiniteSemigroup>, CliError> {
        if source == "builtin" {
            Ok(corpus::builtin_corpus())
        } else {
            Ok(vec![load_file(Path::new(source))?])
        }
    }

    fn verify(&self, suite: Suite, args: &VerifyArgs<'_>) -> Result<Outcome, CliError> {
        let start = Instant::now();
        let suites: Vec<Suite> = match suite {
            Suite::All => vec![
                Suite::Parametrization,
                Suite::BrandtGroups,
                Suite::MatrixUnits,
                Suite::ZeroSemigroup,
                Suite::Composition,
                Suite::Quotient,
            ],
            one => vec![one],
        };
        let mut outputs = Vec::new();
        for suite in suites {
            let suite_start = Instant::now();
            let reports = self.run_suite(suite, args)?;
            outputs.push(SuiteOutput {
                suite: suite_name(suite),
                passed: reports.iter().all(SuiteReport::passed),
                reports,
                elapsed_ms: self.elapsed(suite_start),
            });
        }
        let passed = outputs.iter().all(|o| o.passed);
        let text = match self.format {
            Format::Json if outputs.len() == 1 => json(&outputs[0]),
            Format::Json => json(&outputs),
            Format::Text => {
                let mut t = String::new();
                for o in &outputs {
                    writeln!(t, "== {} ==", o.suite).unwrap();
                    for r in &o.reports {
                        let body = match r {
                            SuiteReport::Aut(r) => r.to_string(),
                            SuiteReport::ZeroFixing(r) => r.to_string(),
                            SuiteReport::Trial(r) => r.to_string(),
                        };
                        writeln!(t, "{}", body.trim_end()).unwrap();
                    }
                    if o.suite == "matrix-units" {
                        let orders: Vec<String> = o
                            .reports
                            .iter()
                            .filter_map(|r| match r {
                                SuiteReport::Aut(r) => Some(r.oracle_order.to_string()),
                                _ => None,
                            })
                            .collect();
                        writeln!(t, "orders: {}", orders.join(",")).unwrap();
                    }
                    writeln!(t, "{}: {}", o.suite, if o.passed { "PASS" } else { "FAIL" }).unwrap();
                }
                if let Some(ms) = self.elapsed(start) {
                    writeln!(t, "elapsed: {ms} ms").unwrap();
                }
                t
            }
        };
        Ok(Outcome { text, passed })
    }

    fn run_suite(&self, suite: Suite, args: &VerifyArgs<'_>) -> Result<Vec<SuiteReport>, CliError> {
        let budget = &self.budget;
        let mut reports = Vec::new();
        match suite {
            Suite::Parametrization | Suite::Composition | Suite::Quotient => {
                let corpus = self.corpus(args.corpus)?;
                for (s, lambda) in corpus::instances(&corpus, args.lambdas, corpus::MAX_CORPUS_CARRIER) {
                    let ext = BrandtSemigroup::new(&s, lambda, budget.max_lambda)?;
                    let report = match suite {
                        Suite::Parametrization => SuiteReport::Aut(oracle::verify_extension(&ext, budget)?),
                        Suite::Composition => {
                            let group = TripleGroup::new(&ext, budget)?;
                            SuiteReport::Trial(oracle::verify_realization_homomorphism(&group, args.trials, self.seed)?)
                        }
                        _ => SuiteReport::Aut(oracle::verify_quotient_structure(&ext, budget, args.trials, self.seed)?),
                    };
                    reports.push(report);
                }
            }
            Suite::BrandtGroups => {
                for m in 1..=3 {
                    let g = FiniteSemigroup::cyclic_group(m)?;
                    for &lambda in args.lambdas {
                        if lambda * lambda * m < corpus::MAX_CORPUS_CARRIER {
                            reports.push(SuiteReport::Aut(oracle::verify_brandt_semigroup_of_group(
                                &g, lambda, budget,
                            )?));
                        }
                    }
                }
            }
            Suite::MatrixUnits => {
                for lambda in 1..=args.max_lambda {
                    reports.push(SuiteReport::Aut(oracle::verify_matrix_unit_automorphisms(
                        lambda, budget,
                    )?));
                }
            }
            Suite::ZeroSemigroup => {
                reports.push(SuiteReport::ZeroFixing(oracle::verify_zero_semigroup_bijections(
                    args.k,
                    args.lambda,
                    budget,
                )?));
            }
            Suite::All => unreachable!("expanded by the caller"),
        }
        Ok(reports)
    }

    fn triple(&self, op: TripleOp, s: &FiniteSemigroup, lambda: usize, paths: &[PathBuf]) -> Result<Outcome, CliError> {
        let ext = BrandtSemigroup::new(s, lambda, self.budget.max_lambda)?;
        let group = TripleGroup::new(&ext, &self.budget)?;
        let needed = match op {
            TripleOp::Kernel => 0,
            TripleOp::Compose => 2,
            _ => 1,
        };
        if paths.len() != needed {
            return Err(CliError::Usage(format!(
                "this operation takes {needed} --triple file(s)"
            )));
        }
        let triples = paths
            .iter()
            .map(|p| Ok(group.from_doc(&read_triple(p)?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        let text = match op {
            TripleOp::Realize => {
                let sigma = group.realize(&triples[0])?;
                #[derive(Serialize)]
                struct Realized {
                    elements: Vec<String>,
                    images: Vec<String>,
                }
                let r = Realized {
                    elements: ext.carrier().labels().to_vec(),
                    images: labels(ext.carrier(), sigma.images()),
                };
                match self.format {
                    Format::Json => json(&r),
                    Format::Text => r
                        .elements
                        .iter()
                        .zip(&r.images)
                        .map(|(x, y)| format!("{x} -> {y}\n"))
                        .collect(),
                }
            }
            TripleOp::Compose => json(&group.to_doc(&group.compose(&triples[0], &triples[1])?)),
            TripleOp::Invert => json(&group.to_doc(&group.invert(&triples[0])?)),
            TripleOp::Normalize => json(&group.to_doc(&group.normalize(&triples[0])?)),
            TripleOp::Kernel => json(&group.kernel().iter().map(|t| group.to_doc(t)).collect::<Vec<_>>()),
        };
        Ok(Outcome { text, passed: true })
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Parametrization => "parametrization",
        Suite::BrandtGroups => "brandt-groups",
        Suite::MatrixUnits => "matrix-units",
        Suite::ZeroSemigroup => "zero-semigroup",
        Suite::Composition => "composition",
        Suite::Quotient => "quotient",
        Suite::All => "all",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("brandt").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn validate_summary_line() {
        let out = run_args(&["validate", "--builtin", "z2-0"]).unwrap();
        assert!(
            out.text.starts_with("monoid with zero; H₁ = {1,g}; E = {1,0}\n"),
            "{}",
            out.text
        );
    }

    #[test]
    fn budget_overrides() {
        let b = parse_budget(&["max_triples=5".into(), "max_lambda=2".into()]).unwrap();
        assert_eq!((b.max_triples, b.max_lambda), (5, 2));
        assert!(parse_budget(&["nope=1".into()]).is_err());
        assert!(parse_budget(&["max_triples".into()]).is_err());
    }

    #[test]
    fn exit_codes() {
        let e = run_args(&[
            "aut",
            "--builtin",
            "zero-semigroup",
            "--lambda",
            "2",
            "--method",
            "triples",
        ])
        .err()
        .unwrap();
        assert_eq!(e.exit_code(), 3);
        let e = run_args(&["extend", "--builtin", "z2-0", "--lambda", "9"])
            .err()
            .unwrap();
        assert_eq!(e.exit_code(), 4);
        let e = run_args(&["validate", "--builtin", "what"]).err().unwrap();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn aut_orders() {
        let out = run_args(&["aut", "--builtin", "matrix-units", "--lambda", "3", "--format", "json"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["order"], 6);
        assert_eq!(v["match"], true);
        assert!(out.passed);
    }
}
