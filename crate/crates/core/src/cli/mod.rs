//! Command-line front end.
//!
//! Subcommands compute Poincaré polynomials, Euler numbers, and Hodge
//! diamonds for flag-manifold Sasakian structures, validate diamond JSON
//! files, and dump the built-in fixtures. Every command supports
//! `--format text` (default) and `--format json`; JSON output is canonical:
//! fixed key order, no floats, integers as numbers when they fit in 64 bits
//! and as decimal strings beyond that.
//!
//! Exit codes: 0 success, 1 validation failure, 2 input or parse error,
//! 3 enumeration budget exceeded.

mod expr;

pub use expr::{parse_group_expr, parse_levi_nodes, GroupExpr, GroupExprError};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::flagcoh::{
    compute_flag_cohomology_with_budget, euler_number, euler_weyl, poincare_borel,
    poincare_coset_with_budget, FlagCohomologyError,
};
use crate::polyring::IntPolynomial;
use crate::rootsys::{
    exponents, levi_decompose, levi_exponents, LeviSpec, RootSystem, RootSystemError,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::sasaki::{
    builtin_fixtures, check_finite_closed_leaves_vanishing, check_positivity_vanishing,
    diamond_from_flag, sphere_diamond, validate_diamond, DiamondDocument, HodgeDiamond,
    LeafCount, Positivity, SasakiError, SasakiStructureRecord, ValidationOptions,
    ValidationReport,
};

/// Environment variable overriding the enumeration budget (number of BFS
/// states a single computation may visit).
pub const BUDGET_ENV_VAR: &str = "SASAKI_HODGE_BUDGET";

const EXIT_OK: i32 = 0;
const EXIT_VALIDATION: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_BUDGET: i32 = 3;

const NUMBERING_HELP: &str = "\
Bourbaki node numbering used by --levi:

  A_n   1-2-...-n
  B_n   1-2-...-(n-1)=>n        (last node short)
  C_n   1-2-...-(n-1)<=n        (last node long)
  D_n   1-2-...-(n-2)<(n-1,n)   (fork at n-2)
  E_n   1-3-4-5-6[-7[-8]]       (node 2 attached to node 4)
  F_4   1-2=>3-4
  G_2   1<#2                    (triple edge, node 1 short)

`--levi @E6` selects nodes 1,2,3,4,5,6 of E7, the E6 subdiagram.
The enumeration budget (default 10000000 states) can be overridden via the
SASAKI_HODGE_BUDGET environment variable.";

#[derive(Debug, Parser)]
#[command(
    name = "sasaki-hodge",
    about = "Basic Hodge diamonds of Sasakian structures over generalized flag manifolds",
    after_long_help = NUMBERING_HELP,
    disable_version_flag = true
)]
struct Cli {
    /// Output format for all subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Poincaré polynomial of G/H via the exponent quotient formula.
    Poincare {
        /// Group expression, e.g. `A3` or `E7`.
        group: String,
        /// Levi node list, e.g. `1,3`, or the alias `@E6`; empty for the
        /// full flag manifold G/T.
        #[arg(long)]
        levi: Option<String>,
        /// Also run the Bruhat-cell enumeration and check both methods
        /// agree.
        #[arg(long)]
        verify: bool,
    },
    /// Euler number of G/H via degrees, Weyl group index, and P(1).
    Euler {
        group: String,
        #[arg(long)]
        levi: Option<String>,
    },
    /// Basic Hodge diamond and closed-leaf count of the irregular Sasakian
    /// structure over G/H.
    Diamond {
        group: String,
        #[arg(long)]
        levi: Option<String>,
    },
    /// Basic Hodge diamond of a Sasakian structure on a rational homology
    /// (2n+1)-sphere.
    Sphere {
        /// Transverse complex dimension n >= 1.
        n: usize,
    },
    /// Validate a diamond JSON file against the Hodge-structure rules.
    Validate {
        file: PathBuf,
        /// Also check hard-Lefschetz monotonicity.
        #[arg(long)]
        lefschetz: bool,
        /// Audit the vanishing forced by finitely many closed leaves.
        #[arg(long)]
        finite_leaves: bool,
        /// Audit the edge vanishing forced by positivity.
        #[arg(long)]
        positive: bool,
    },
    /// Dump the built-in fixture structures.
    Fixtures,
}

enum CliFailure {
    Input(String),
    Budget(String),
}

impl From<GroupExprError> for CliFailure {
    fn from(e: GroupExprError) -> Self {
        CliFailure::Input(e.to_string())
    }
}

impl From<RootSystemError> for CliFailure {
    fn from(e: RootSystemError) -> Self {
        match e {
            RootSystemError::EnumerationBudgetExceeded { .. } => CliFailure::Budget(e.to_string()),
            other => CliFailure::Input(other.to_string()),
        }
    }
}

impl From<FlagCohomologyError> for CliFailure {
    fn from(e: FlagCohomologyError) -> Self {
        match e {
            FlagCohomologyError::Root(root) => root.into(),
            other => CliFailure::Input(other.to_string()),
        }
    }
}

impl From<SasakiError> for CliFailure {
    fn from(e: SasakiError) -> Self {
        CliFailure::Input(e.to_string())
    }
}

/// Runs the command line against the given argument vector and streams,
/// returning the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_INPUT
                }
            }
        }
    };

    let budget = match read_budget() {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_INPUT;
        }
    };

    let result = match &cli.command {
        Command::Poincare {
            group,
            levi,
            verify,
        } => cmd_poincare(group, levi.as_deref(), *verify, budget, cli.format, stdout),
        Command::Euler { group, levi } => {
            cmd_euler(group, levi.as_deref(), cli.format, stdout)
        }
        Command::Diamond { group, levi } => {
            cmd_diamond(group, levi.as_deref(), budget, cli.format, stdout)
        }
        Command::Sphere { n } => cmd_sphere(*n, cli.format, stdout),
        Command::Validate {
            file,
            lefschetz,
            finite_leaves,
            positive,
        } => cmd_validate(file, *lefschetz, *finite_leaves, *positive, cli.format, stdout),
        Command::Fixtures => cmd_fixtures(cli.format, stdout),
    };

    match result {
        Ok(code) => code,
        Err(CliFailure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliFailure::Budget(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_BUDGET
        }
    }
}

fn read_budget() -> Result<u64, String> {
    match std::env::var(BUDGET_ENV_VAR) {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| format!("{BUDGET_ENV_VAR} must be an unsigned integer, got {text:?}")),
        Err(_) => Ok(DEFAULT_ENUMERATION_BUDGET),
    }
}

/// Integer for canonical JSON: a number when it fits in u64, otherwise a
/// decimal string.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
enum JsonInt {
    Number(u64),
    Big(String),
}

impl From<&BigUint> for JsonInt {
    fn from(v: &BigUint) -> JsonInt {
        u64::try_from(v.clone())
            .map(JsonInt::Number)
            .unwrap_or_else(|_| JsonInt::Big(v.to_string()))
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> JsonInt {
        u64::try_from(v.clone())
            .map(JsonInt::Number)
            .unwrap_or_else(|_| JsonInt::Big(v.to_string()))
    }
}

fn coefficients_json(p: &IntPolynomial) -> Vec<JsonInt> {
    p.coefficients().iter().map(JsonInt::from).collect()
}

fn emit_json<S: Serialize>(value: &S, stdout: &mut dyn Write) -> Result<(), CliFailure> {
    let text = serde_json::to_string(value)
        .map_err(|e| CliFailure::Input(format!("serialization failed: {e}")))?;
    let _ = writeln!(stdout, "{text}");
    Ok(())
}

struct ResolvedGroup {
    expr: GroupExpr,
    root_system: RootSystem,
    levi: LeviSpec,
}

impl ResolvedGroup {
    fn levi_nodes(&self) -> Vec<usize> {
        self.levi.nodes().to_vec()
    }

    /// Human name like `E7 / E6 x T^1`.
    fn quotient_name(&self) -> String {
        let spec = levi_decompose(&self.root_system, &self.levi)
            .expect("validated Levi decomposes");
        format!("{} / {}", self.expr.simple_type(), spec)
    }
}

fn resolve_group(group: &str, levi: Option<&str>) -> Result<ResolvedGroup, CliFailure> {
    let parsed = parse_group_expr(group)?;
    let nodes = match levi {
        Some(text) => parse_levi_nodes(text, &parsed)?,
        None => Vec::new(),
    };
    let expr = parsed.with_levi_nodes(nodes.clone());
    let root_system = RootSystem::new(expr.cartan_type(), expr.rank())?;
    let levi = LeviSpec::new(&root_system, nodes)?;
    Ok(ResolvedGroup {
        expr,
        root_system,
        levi,
    })
}

#[derive(Serialize)]
struct PoincareJson {
    group: String,
    levi: Vec<usize>,
    poincare: Vec<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poincare_bruhat: Option<Vec<JsonInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn cmd_poincare(
    group: &str,
    levi: Option<&str>,
    verify: bool,
    budget: u64,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliFailure> {
    let resolved = resolve_group(group, levi)?;
    let g_exps = exponents(&resolved.root_system);
    let levi_spec = levi_decompose(&resolved.root_system, &resolved.levi)?;
    let l_exps = levi_exponents(&levi_spec);
    let borel = poincare_borel(&g_exps, &l_exps)?;

    let bruhat = if verify {
        let p = poincare_coset_with_budget(&resolved.root_system, &resolved.levi, budget)?;
        if p != borel {
            return Err(CliFailure::Input(format!(
                "internal oracle mismatch: {borel} vs {p}"
            )));
        }
        Some(p)
    } else {
        None
    };

    match format {
        Format::Text => {
            let _ = writeln!(stdout, "P_t({}) = {}", resolved.quotient_name(), borel);
            if bruhat.is_some() {
                let _ = writeln!(stdout, "Bruhat cell enumeration agrees.");
            }
        }
        Format::Json => emit_json(
            &PoincareJson {
                group: resolved.expr.simple_type().to_string(),
                levi: resolved.levi_nodes(),
                poincare: coefficients_json(&borel),
                poincare_bruhat: bruhat.as_ref().map(coefficients_json),
                verified: bruhat.as_ref().map(|_| true),
            },
            stdout,
        )?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct EulerJson {
    group: String,
    levi: Vec<usize>,
    euler: JsonInt,
    euler_weyl: JsonInt,
    euler_poincare: JsonInt,
}

fn cmd_euler(
    group: &str,
    levi: Option<&str>,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliFailure> {
    let resolved = resolve_group(group, levi)?;
    let g_exps = exponents(&resolved.root_system);
    let levi_spec = levi_decompose(&resolved.root_system, &resolved.levi)?;
    let l_exps = levi_exponents(&levi_spec);

    let by_degrees = euler_number(&g_exps, &l_exps)?;
    let by_weyl = euler_weyl(&resolved.root_system, &resolved.levi);
    let by_poincare = poincare_borel(&g_exps, &l_exps)?.eval_at_one();

    if BigInt::from(by_degrees.clone()) != by_poincare || by_degrees != by_weyl {
        return Err(CliFailure::Input(format!(
            "internal oracle mismatch: {by_degrees} / {by_weyl} / {by_poincare}"
        )));
    }

    match format {
        Format::Text => {
            let name = resolved.quotient_name();
            let _ = writeln!(stdout, "chi({name}) = {by_degrees}");
            let _ = writeln!(stdout, "  degree quotient:   {by_degrees}");
            let _ = writeln!(stdout, "  Weyl group index:  {by_weyl}");
            let _ = writeln!(stdout, "  Poincare at t=1:   {by_poincare}");
        }
        Format::Json => emit_json(
            &EulerJson {
                group: resolved.expr.simple_type().to_string(),
                levi: resolved.levi_nodes(),
                euler: (&by_degrees).into(),
                euler_weyl: (&by_weyl).into(),
                euler_poincare: (&by_poincare).into(),
            },
            stdout,
        )?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DiamondJson {
    n: usize,
    h: Vec<Vec<i64>>,
    name: String,
    closed_leaves: LeafCount,
    positivity: Positivity,
    poincare: Vec<JsonInt>,
    euler: JsonInt,
}

fn cmd_diamond(
    group: &str,
    levi: Option<&str>,
    budget: u64,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliFailure> {
    let resolved = resolve_group(group, levi)?;
    let flag = compute_flag_cohomology_with_budget(&resolved.root_system, &resolved.levi, budget)?;
    let diamond = diamond_from_flag(&flag);
    let leaves = u64::try_from(flag.euler().clone())
        .map_err(|_| CliFailure::Input("closed-leaf count exceeds u64".into()))?;
    let name = resolved.quotient_name();

    match format {
        Format::Text => {
            let _ = writeln!(
                stdout,
                "{name}: complex dimension {}, h^{{p,q}} diagonal:",
                flag.complex_dimension()
            );
            write_diamond_text(&diamond, stdout);
            let _ = writeln!(stdout, "P_t = {}", flag.poincare());
            let _ = writeln!(stdout, "Euler number chi = {}", flag.euler());
            let _ = writeln!(stdout, "Closed leaves of the deformed structure: {leaves}");
        }
        Format::Json => emit_json(
            &DiamondJson {
                n: diamond.n(),
                h: diamond.entries().to_vec(),
                name,
                closed_leaves: LeafCount::Finite(leaves),
                // flag manifolds are Fano, and positivity persists under
                // the small type-I deformation
                positivity: Positivity::Positive,
                poincare: coefficients_json(flag.poincare()),
                euler: flag.euler().into(),
            },
            stdout,
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_sphere(n: usize, format: Format, stdout: &mut dyn Write) -> Result<i32, CliFailure> {
    if n == 0 {
        return Err(CliFailure::Input(
            "sphere dimension parameter n must be at least 1".into(),
        ));
    }
    if n > 1000 {
        return Err(CliFailure::Input(format!(
            "sphere parameter n = {n} exceeds the command-line limit of 1000"
        )));
    }
    let diamond = sphere_diamond(n);
    match format {
        Format::Text => {
            let _ = writeln!(stdout, "S^{} basic Hodge diamond (n = {n}):", 2 * n + 1);
            write_diamond_text(&diamond, stdout);
        }
        Format::Json => emit_json(&DiamondDocument::from_diamond(&diamond), stdout)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ValidateJson {
    file: String,
    passed: bool,
    rules: Vec<crate::sasaki::RuleResult>,
}

fn cmd_validate(
    file: &PathBuf,
    lefschetz: bool,
    finite_leaves: bool,
    positive: bool,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<i32, CliFailure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliFailure::Input(format!("cannot read {}: {e}", file.display())))?;
    let doc: serde_json::Result<DiamondDocument> = serde_json::from_str(&text);
    let doc = doc.map_err(|e| CliFailure::Input(format!("invalid JSON in {}: {e}", file.display())))?;
    let record = doc.record()?;

    let mut report = validate_diamond(
        &record.diamond,
        ValidationOptions { lefschetz },
    );
    if finite_leaves {
        // audit under the claim of finitely many closed leaves; keep a
        // declared finite count, otherwise claim the localization value
        let claimed = match record.closed_leaf_count {
            LeafCount::Finite(k) => LeafCount::Finite(k),
            LeafCount::Infinite => {
                LeafCount::Finite(total_entries(&record.diamond))
            }
        };
        let audited = SasakiStructureRecord {
            closed_leaf_count: claimed,
            ..record.clone()
        };
        merge_reports(&mut report, check_finite_closed_leaves_vanishing(&audited)?);
    }
    if positive {
        let audited = SasakiStructureRecord {
            positivity: Positivity::Positive,
            ..record.clone()
        };
        merge_reports(&mut report, check_positivity_vanishing(&audited)?);
    }

    match format {
        Format::Text => {
            for rule in report.rules() {
                if rule.passed {
                    let _ = writeln!(stdout, "PASS {}", rule.rule);
                } else {
                    let _ = writeln!(stdout, "FAIL {}: {}", rule.rule, rule.witnesses.join("; "));
                }
            }
            let _ = writeln!(
                stdout,
                "{}: {}",
                file.display(),
                if report.passed() { "valid" } else { "INVALID" }
            );
        }
        Format::Json => emit_json(
            &ValidateJson {
                file: file.display().to_string(),
                passed: report.passed(),
                rules: report.rules().to_vec(),
            },
            stdout,
        )?,
    }

    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    })
}

fn total_entries(diamond: &HodgeDiamond) -> u64 {
    diamond
        .entries()
        .iter()
        .flatten()
        .map(|&v| v.max(0) as u64)
        .sum()
}

fn merge_reports(into: &mut ValidationReport, from: ValidationReport) {
    for rule in from.rules() {
        into.push_rule(rule.clone());
    }
}

fn cmd_fixtures(format: Format, stdout: &mut dyn Write) -> Result<i32, CliFailure> {
    let fixtures = builtin_fixtures();
    match format {
        Format::Text => {
            for record in &fixtures {
                let _ = writeln!(stdout, "{}", record.name);
                write_diamond_text(&record.diamond, stdout);
                let leaves = match record.closed_leaf_count {
                    LeafCount::Finite(k) => k.to_string(),
                    LeafCount::Infinite => "infinite".to_string(),
                };
                let positivity = match record.positivity {
                    Positivity::Positive => "positive",
                    Positivity::Negative => "negative",
                    Positivity::Null => "null",
                    Positivity::Unknown => "unknown",
                };
                let _ = writeln!(stdout, "closed leaves: {leaves}; positivity: {positivity}");
                let _ = writeln!(stdout);
            }
        }
        Format::Json => {
            let docs: Vec<DiamondDocument> =
                fixtures.iter().map(DiamondDocument::from_record).collect();
            emit_json(&docs, stdout)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_diamond_text(diamond: &HodgeDiamond, stdout: &mut dyn Write) {
    let width = diamond
        .entries()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in diamond.entries() {
        let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(stdout, "  {}", line.join(" "));
    }
}
