//! The `redei` command line: construct, verify, table, lemmas, selftest.
//!
//! Exit codes: 0 success, 1 failed check, 2 predicate false on `construct`,
//! 64 usage, 65 data or golden mismatch, 69 refused (field above the
//! exhaustion cap), 74 I/O.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construct::{
    brute_force_is_permutation, build_poly, cells_to_json, check_cap, exhaust_cap_from_env,
    generate_table, qualifying_rows, theorem_predicate, CellStatus, ConstructionParams, TableCell,
};
use crate::error::Error;
use crate::field::{modulus_from_bits, FieldContext};
use crate::redei::Family;
use crate::suite::{golden_checks, invariant_checks, lemma_checks, Check, CheckKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PREDICATE_FALSE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_REFUSED: i32 = 69;
pub const EXIT_IO: i32 = 74;

/// Directory holding the checked-in golden tables.
pub fn default_data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join("v1")
}

#[derive(Debug, Parser)]
#[command(
    name = "redei",
    version,
    about = "Permutation polynomials from the characteristic-2 Redei function"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one polynomial and evaluate the permutation predicate.
    Construct(ConstructArgs),
    /// Compare the predicate against exhaustive evaluation.
    Verify(VerifyArgs),
    /// Emit a table of cells as JSON.
    Table(TableArgs),
    /// Run the lemma-level identity checks.
    Lemmas(LemmasArgs),
    /// Run every invariant suite at t = 3 and compare the golden tables.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Odd extension degree of GF(2^t).
    #[arg(long)]
    t: u32,
    /// Irreducible modulus as a big-endian bit-string, e.g. 1011.
    #[arg(long)]
    modulus: Option<String>,
}

impl FieldArgs {
    fn context(&self) -> Result<FieldContext, Error> {
        let modulus = self.modulus.as_deref().map(modulus_from_bits).transpose()?;
        FieldContext::new(self.t, modulus)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    M,
    N,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::M => Family::M,
            FamilyArg::N => Family::N,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct CellArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
}

impl CellArgs {
    fn resolve(&self) -> Result<(FieldContext, ConstructionParams), Error> {
        let ctx = self.field.context()?;
        let params = ConstructionParams::new(ctx.t(), self.n, self.m, self.family.into())?;
        Ok((ctx, params))
    }
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    cell: CellArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    cell: CellArgs,
    /// Maximum field size to evaluate exhaustively (default 2^20, or $REDEI_EXHAUST_CAP).
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
    /// Largest n (default 3(q-1)); rows failing the n-only conditions are skipped.
    #[arg(long)]
    n_max: Option<u64>,
    /// Largest m (default q-1).
    #[arg(long)]
    m_max: Option<u64>,
    /// Explicit rows, e.g. 7,13,34. Every listed n gets cells, excluded or not.
    #[arg(long, value_delimiter = ',')]
    rows: Option<Vec<u64>>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LemmasArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Largest n to check (default 3(q-1)).
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Directory with table1.json and table2.json.
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if informational {
                let _ = write!(out, "{rendered}");
                return EXIT_OK;
            }
            let _ = write!(err, "{rendered}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Table(a) => table(a, out),
        Command::Lemmas(a) => lemmas(a, out),
        Command::Selftest(a) => selftest(a, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidDegree(_)
            | Error::InvalidModulus { .. }
            | Error::InvalidParams(_)
            | Error::Parse(_) => EXIT_USAGE,
            Error::RefusedTooLarge { .. } => EXIT_REFUSED,
            _ => EXIT_CHECK_FAILED,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

fn construct(args: ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let (ctx, params) = args.cell.resolve()?;
    let poly = build_poly(&ctx, &params)?;
    let verdict = theorem_predicate(&params);
    match args.format {
        Format::Text => {
            writeln!(out, "{poly}")?;
            match verdict {
                Ok(()) => writeln!(out, "predicate: permutes")?,
                Err(ex) => writeln!(out, "excluded: {ex}")?,
            }
        }
        Format::Json => {
            let cell = TableCell {
                params,
                status: match verdict {
                    Ok(()) => CellStatus::Permutes(poly),
                    Err(ex) => CellStatus::Excluded(ex),
                },
            };
            let json = serde_json::to_string(&cell.to_record()).expect("records serialize");
            writeln!(out, "{json}")?;
        }
    }
    Ok(if verdict.is_ok() {
        EXIT_OK
    } else {
        EXIT_PREDICATE_FALSE
    })
}

fn resolve_cap(flag: Option<u64>) -> Result<u64, Error> {
    match flag {
        Some(c) => Ok(c),
        None => exhaust_cap_from_env(),
    }
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let (ctx, params) = args.cell.resolve()?;
    check_cap(&ctx, resolve_cap(args.cap)?)?;
    let predicate = theorem_predicate(&params).is_ok();
    let brute = brute_force_is_permutation(&ctx, &build_poly(&ctx, &params)?);
    let agree = predicate == brute;
    writeln!(
        out,
        "predicate={predicate} bruteforce={brute} agree={agree}"
    )?;
    Ok(if agree { EXIT_OK } else { EXIT_DATA })
}

fn table(args: TableArgs, out: &mut dyn Write) -> CmdResult {
    let ctx = args.field.context()?;
    let family: Family = args.family.into();
    let m_max = args.m_max.unwrap_or(ctx.fq_units());
    let rows = match args.rows {
        Some(rows) => rows,
        None => qualifying_rows(&ctx, family, args.n_max.unwrap_or(3 * ctx.fq_units())),
    };
    let cells = generate_table(&ctx, family, rows, 1..=m_max)?;
    let json = cells_to_json(&cells);
    match args.out {
        Some(path) => std::fs::write(path, json)?,
        None => out.write_all(json.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn report(checks: &[Check], out: &mut dyn Write, verbose: bool) -> std::io::Result<usize> {
    let mut failed = 0;
    for c in checks {
        if !c.passed {
            failed += 1;
        }
        if verbose || !c.passed {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "[{tag}] {}: {}", c.name, c.detail)?;
        }
    }
    Ok(failed)
}

fn lemmas(args: LemmasArgs, out: &mut dyn Write) -> CmdResult {
    let ctx = args.field.context()?;
    check_cap(&ctx, resolve_cap(args.cap)?)?;
    let n_max = args.n_max.unwrap_or(3 * ctx.fq_units());
    let checks = lemma_checks(&ctx, n_max);
    let failed = report(&checks, out, true)?;
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn selftest(args: SelftestArgs, out: &mut dyn Write) -> CmdResult {
    let ctx = FieldContext::new(3, None)?;
    let mut checks = invariant_checks(&ctx)?;
    checks.extend(golden_checks(
        &args.data_dir.unwrap_or_else(default_data_dir),
    ));
    let failed = report(&checks, out, false)?;
    if failed == 0 {
        writeln!(out, "OK: {} checks passed", checks.len())?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "FAILED: {failed} of {} checks", checks.len())?;
    let golden_failed = checks
        .iter()
        .any(|c| !c.passed && c.kind == CheckKind::Golden);
    Ok(if golden_failed {
        EXIT_DATA
    } else {
        EXIT_CHECK_FAILED
    })
}
