//! The `weilmin` command line: `generate`, `verify` and `gauss`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::descent::{
    conjugated_model, galois_perm, joint_ring, minimal_model, verify_charpoly_factorization, verify_integrality,
    verify_minimality, verify_theorem2, MinimalModel,
};
use crate::error::{Error, Result};
use crate::exact_number::{sqrt_eps_p, to_quadratic, CycElt};
use crate::format::{self, ModelDoc};
use crate::heisenberg::QuadForm;
use crate::report::{Check, Report};
use crate::sl2::{character_table, inner_product_of_table};
use crate::weil::{check_relations, restrict_odd, weil_full, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "weilmin",
    version,
    about = "Exact Weil representations of SL2(F_p) and their minimal integral models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the generator matrices of a model.
    Generate(RunArgs),
    /// Run exact verification checks and report the outcome.
    Verify(RunArgs),
    /// Print the quadratic Gauss sum for (p, c).
    Gauss(RunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Latex,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Odd prime p.
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    /// Weil character: 1 uses c = 1, 2 uses the smallest non-residue.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub form: u8,
    /// Explicit unit c; must lie in the square class of the chosen form.
    #[arg(long = "c", allow_hyphen_values = true)]
    pub c: Option<i64>,
    #[arg(long, default_value = "principal", value_parser = parse_series)]
    pub series: Series,
    /// Comma-separated subset of relations, wang-integrality, minimality,
    /// galois-thm2, charpoly, character; or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Largest group order enumerated for character sums.
    #[arg(long = "group-cap", default_value_t = 10_000)]
    pub group_cap: u64,
    /// Write output to a file instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

fn parse_series(s: &str) -> std::result::Result<Series, String> {
    Series::from_str(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Relations,
    Integrality,
    Minimality,
    GaloisThm2,
    Charpoly,
    Character,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Relations,
        CheckName::Integrality,
        CheckName::Minimality,
        CheckName::GaloisThm2,
        CheckName::Charpoly,
        CheckName::Character,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::Relations => "relations",
            CheckName::Integrality => "wang-integrality",
            CheckName::Minimality => "minimality",
            CheckName::GaloisThm2 => "galois-thm2",
            CheckName::Charpoly => "charpoly",
            CheckName::Character => "character",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

pub fn parse_checks(spec: &str) -> Result<BTreeSet<CheckName>> {
    if spec.trim() == "all" {
        return Ok(CheckName::ALL.into_iter().collect());
    }
    let set = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(CheckName::from_str)
        .collect::<Result<BTreeSet<_>>>()?;
    if set.is_empty() {
        return Err(Error::InvalidArgument("no checks selected".into()));
    }
    Ok(set)
}

/// Validated settings for one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub q: QuadForm,
    pub series: Series,
    pub checks: BTreeSet<CheckName>,
    pub format: OutputFormat,
    pub group_cap: u64,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<Self> {
        Ok(RunConfig {
            q: QuadForm::for_character(args.p, args.form, args.c)?,
            series: args.series,
            checks: parse_checks(&args.checks)?,
            format: args.format,
            group_cap: args.group_cap,
            output: args.output.clone(),
        })
    }
}

/// Outcome of a successful command: text to emit and the exit code.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn is_input_error(e: &Error) -> bool {
    matches!(e, Error::InvalidPrime(_) | Error::InvalidUnit { .. } | Error::InvalidArgument(_) | Error::Parse(_))
}

pub fn cmd_generate(cfg: &RunConfig) -> Result<Outcome> {
    let q = &cfg.q;
    match cfg.series {
        Series::Principal => {
            let m = minimal_model(q)?;
            let relations = check_relations(&m.s, &m.t)?;
            if !relations.all_passed() {
                return Ok(Outcome { output: relations.to_string(), code: EXIT_FAILURE });
            }
            let output = match cfg.format {
                OutputFormat::Json => ModelDoc::from_minimal(&m).to_json() + "\n",
                OutputFormat::Latex => format::minimal_latex(&m),
                OutputFormat::Text => format::minimal_text(&m),
            };
            Ok(Outcome { output, code: EXIT_OK })
        }
        series => {
            let full = weil_full(q);
            let m = if series == Series::Full { full } else { restrict_odd(&full)? };
            let relations = m.check_relations()?;
            if !relations.all_passed() {
                return Ok(Outcome { output: relations.to_string(), code: EXIT_FAILURE });
            }
            let ring = joint_ring(&[("S", &m.s), ("T", &m.t)]).ring;
            let output = match cfg.format {
                OutputFormat::Json => ModelDoc::from_cyclotomic(q, series, &m.s, &m.t, ring).to_json() + "\n",
                OutputFormat::Latex => format::cyclotomic_latex(&m.s, &m.t),
                OutputFormat::Text => format::cyclotomic_text(q, series, &m.s, &m.t, ring),
            };
            Ok(Outcome { output, code: EXIT_OK })
        }
    }
}

fn prefixed(prefix: &str, report: Report) -> Report {
    Report {
        checks: report
            .checks
            .into_iter()
            .map(|mut c| {
                c.name = format!("{prefix}:{}", c.name);
                c
            })
            .collect(),
    }
}

/// `⟨χ,χ⟩`, plus the degree, over the quadratic-integer model.
fn character_check(m: &MinimalModel, cap: u64) -> Result<Check> {
    let table = match character_table(&m.s, &m.t, cap) {
        Ok(t) => t,
        Err(Error::GroupTooLarge { order, cap }) => {
            return Ok(Check::skipped("character", format!("|SL2(F_p)| = {order} exceeds the group cap {cap}")))
        }
        Err(e) => return Err(e),
    };
    let ip = inner_product_of_table(&table)?;
    let degree = &table.iter().find(|(g, _)| g.is_identity()).expect("identity is enumerated").1;
    let expected_degree = (m.q.p() as i64 + 1) / 2;
    let ok = ip == BigRational::from_integer(BigInt::from(1)) && degree.a == expected_degree && degree.b == 0;
    Ok(Check::from_bool("character", ok).with_detail(format!("<chi,chi> = {ip}, chi(1) = {degree}")))
}

/// Runs the selected checks on the chosen series.
pub fn run_checks(q: &QuadForm, series: Series, checks: &BTreeSet<CheckName>, group_cap: u64) -> Result<Report> {
    let mut report = Report::new();
    if series != Series::Principal {
        let full = weil_full(q);
        let m = if series == Series::Full { full } else { restrict_odd(&full)? };
        for name in checks {
            match name {
                CheckName::Relations => report.extend(prefixed(&series.to_string(), m.check_relations()?)),
                other => report.push(Check::skipped(other.as_str(), "principal series only")),
            }
        }
        return Ok(report);
    }

    let w = conjugated_model(q)?;
    let named = [("S'", &w.s_prime), ("T'", &w.t_prime)];
    for name in checks {
        match name {
            CheckName::Relations => {
                report.extend(prefixed("even", w.even.check_relations()?));
                report.extend(prefixed("conjugated", check_relations(&w.s_prime, &w.t_prime)?));
            }
            CheckName::Integrality => report.extend(verify_integrality(&named)),
            CheckName::Minimality => {
                let mut sub = verify_minimality(&named)?;
                let verdict = joint_ring(&named);
                let ok = sub.all_passed();
                sub.push(
                    Check::from_bool("minimality", ok)
                        .with_detail(format!("ring = {}", verdict.ring.describe(q.p())))
                        .with_witness(if ok { None } else { verdict.witness }),
                );
                report.extend(sub);
            }
            CheckName::GaloisThm2 => match galois_perm(q) {
                Ok(cert) => {
                    let fixes = cert.perm[0] == 0;
                    report.push(
                        Check::from_bool("galois-perm", fixes && q.r().is_multiple_of(cert.order)).with_detail(
                            format!(
                                "perm = {:?}, order = {}, cycle type = {:?}",
                                cert.perm, cert.order, cert.cycle_type
                            ),
                        ),
                    );
                    report.extend(verify_theorem2(&w.even, &cert)?);
                }
                Err(Error::Consistency(why)) => report.push(Check::fail("galois-perm").with_detail(why)),
                Err(e) => return Err(e),
            },
            CheckName::Charpoly => report.extend(verify_charpoly_factorization(q, &w.t_prime)?),
            CheckName::Character => match MinimalModel::from_conjugated(&w) {
                Ok(m) => report.push(character_check(&m, group_cap)?),
                Err(Error::Consistency(why)) => report.push(Check::fail("character").with_detail(why)),
                Err(e) => return Err(e),
            },
        }
    }
    Ok(report)
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    p: u32,
    c: u32,
    series: Series,
    passed: bool,
    checks: &'a [Check],
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let report = run_checks(&cfg.q, cfg.series, &cfg.checks, cfg.group_cap)?;
    let passed = report.all_passed();
    let output = match cfg.format {
        OutputFormat::Json => {
            let doc = VerifyDoc { p: cfg.q.p(), c: cfg.q.c(), series: cfg.series, passed, checks: &report.checks };
            serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
        }
        _ => format!("{report}{}\n", if passed { "verification passed" } else { "verification FAILED" }),
    };
    Ok(Outcome { output, code: if passed { EXIT_OK } else { EXIT_FAILURE } })
}

#[derive(Serialize)]
struct GaussDoc {
    p: u32,
    c: u32,
    gauss_sum: CycElt,
    square: i64,
    sign: i8,
    value: String,
}

pub fn cmd_gauss(cfg: &RunConfig) -> Result<Outcome> {
    let q = &cfg.q;
    let p = q.p();
    let g = q.gauss_sum();
    let square = (&g * &g).as_rational().ok_or_else(|| Error::Consistency("g^2 is not rational".into()))?;
    let square = i64::try_from(square.to_integer()).map_err(|_| Error::Consistency("g^2 overflow".into()))?;
    let sign = if g == sqrt_eps_p(p)? { 1 } else { -1 };
    let value = to_quadratic(&g).map_err(|why| Error::Consistency(format!("Gauss sum {why}")))?;
    let output = match cfg.format {
        OutputFormat::Json => {
            let doc = GaussDoc { p, c: q.c(), gauss_sum: g, square, sign, value: value.to_string() };
            serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
        }
        OutputFormat::Latex => format!("{}\n", value.to_latex()),
        OutputFormat::Text => {
            format!("g(p={p}, c={}) = {g}\ng^2 = {square}\ng = {value}\n", q.c())
        }
    };
    Ok(Outcome { output, code: EXIT_OK })
}

fn emit(cfg: &RunConfig, text: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match &cfg.output {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "weilmin: cannot write {}: {e}", path.display());
                EXIT_INVALID
            }
        },
        None => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (args, cmd): (&RunArgs, fn(&RunConfig) -> Result<Outcome>) = match &cli.command {
        Command::Generate(a) => (a, cmd_generate),
        Command::Verify(a) => (a, cmd_verify),
        Command::Gauss(a) => (a, cmd_gauss),
    };
    let cfg = match RunConfig::from_args(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = writeln!(stderr, "weilmin: {e}");
            return EXIT_INVALID;
        }
    };
    match cmd(&cfg) {
        Ok(outcome) => {
            let written = emit(&cfg, &outcome.output, stdout, stderr);
            if written != EXIT_OK {
                written
            } else {
                outcome.code
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "weilmin: {e}");
            if is_input_error(&e) {
                EXIT_INVALID
            } else {
                EXIT_FAILURE
            }
        }
    }
}

/// Sizes the global rayon pool from `WEILMIN_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("WEILMIN_THREADS") else {
        return Ok(());
    };
    let n: usize =
        value.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            Error::InvalidArgument(format!("WEILMIN_THREADS must be a positive integer, got {value:?}"))
        })?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Error::InvalidArgument(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("weilmin").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_list_parsing() {
        assert_eq!(parse_checks("all").unwrap().len(), 6);
        let set = parse_checks("charpoly, minimality").unwrap();
        assert!(set.contains(&CheckName::Minimality) && set.len() == 2);
        assert!(parse_checks("bogus").is_err());
    }

    #[test]
    fn invalid_inputs_exit_2() {
        assert_eq!(run_str(&["generate", "-p", "9"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["generate", "-p", "7", "--form", "3"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["generate", "-p", "7", "--form", "1", "--c", "3"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["verify", "-p", "7", "--checks", "nope"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_INVALID);
    }

    #[test]
    fn gauss_output() {
        let (code, out, _) = run_str(&["gauss", "-p", "7"]);
        assert_eq!(code, 0);
        assert!(out.contains("g^2 = -7") && out.contains("g = sqrt(-7)"), "{out}");
        let (_, out, _) = run_str(&["gauss", "-p", "7", "--form", "2"]);
        assert!(out.contains("g = -sqrt(-7)"), "{out}");
    }
}
