//! Command-line front end. The binary only forwards `std::env::args_os()` to
//! [`main_with_args`].
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::parse_rational;
use crate::error::{Error, Result};
use crate::group::{Catalog, DEFAULT_MAX_LEVEL};
use crate::monomial::Monomial;
use crate::nilpotent::{self, NilpotentJson, NilpotentOperator, SIGN_VARIANTS};
use crate::pentad::{self, format_signature};
use crate::rewrite;
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "zero-algebra",
    version,
    about = "Rewrite-system groups, pentads and nilpotent operators in exact arithmetic"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Highest group level any command may touch (at most 7).
    #[arg(long, global = true, default_value_t = 5)]
    pub max_level: u32,

    /// Rewrite steps to run.
    #[arg(long, global = true, default_value_t = 6)]
    pub steps: u32,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the elements of a group level.
    Generate { level: u32 },
    /// Multiplication table of a group level.
    Table { level: u32 },
    /// Run the create/conserve loop for `--steps` steps.
    Rewrite,
    /// Enumerate the five-member anticommuting sets.
    Pentads {
        #[arg(long, default_value_t = 5)]
        level: u32,
        /// Keep only this signature, e.g. `+----` or `1,-1,-1,-1,1`.
        #[arg(long, allow_hyphen_values = true)]
        signature: Option<String>,
    },
    /// Build the operator for E, p = (p1, p2, p3), m and report its square.
    #[command(allow_negative_numbers = true)]
    Nilpotent {
        energy: String,
        p1: String,
        p2: String,
        p3: String,
        mass: String,
    },
    /// Run the whole invariant suite.
    Verify,
}

/// The validated global settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_level: u32,
    pub max_steps: u32,
    pub output_format: OutputFormat,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        if cli.max_level > DEFAULT_MAX_LEVEL {
            return Err(Error::LevelTooHigh {
                level: cli.max_level,
                max: DEFAULT_MAX_LEVEL,
            });
        }
        if cli.steps == 0 {
            return Err(Error::Usage("--steps must be at least 1".into()));
        }
        Ok(RunConfig {
            max_level: cli.max_level,
            max_steps: cli.steps,
            output_format: cli.format,
            seed: cli.seed,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub success: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            success: true,
        }
    }
}

fn no_csv(cmd: &str) -> Error {
    Error::Usage(format!(
        "csv output is only available for generate and table, not {cmd}"
    ))
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let config = RunConfig::from_cli(cli)?;
    let catalog = Catalog::new(config.max_level)?;
    match &cli.command {
        Command::Generate { level } => generate(&catalog, *level, config.output_format),
        Command::Table { level } => table(&catalog, *level, config.output_format),
        Command::Rewrite => rewrite_cmd(&config),
        Command::Pentads { level, signature } => {
            pentads(&catalog, *level, signature.as_deref(), config.output_format)
        }
        Command::Nilpotent {
            energy,
            p1,
            p2,
            p3,
            mass,
        } => nilpotent_cmd([energy, p1, p2, p3, mass], config.output_format),
        Command::Verify => verify_cmd(&config),
    }
}

fn generate(catalog: &Catalog, level: u32, format: OutputFormat) -> Result<Outcome> {
    let group = catalog.enumerate(level)?;
    let body = match format {
        OutputFormat::Text => {
            let mut s = format!("level {level}, order {}\n", group.order());
            for e in group.elements() {
                writeln!(s, "{e}\tsquare {}", e.square()).unwrap();
            }
            s
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row {
                name: Monomial,
                square: Monomial,
            }
            #[derive(serde::Serialize)]
            struct Listing {
                level: u32,
                order: usize,
                elements: Vec<Row>,
            }
            json(&Listing {
                level,
                order: group.order(),
                elements: group
                    .elements()
                    .iter()
                    .map(|&e| Row {
                        name: e,
                        square: e.square(),
                    })
                    .collect(),
            })?
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "sign", "mask", "square"])?;
            for e in group.elements() {
                w.write_record([
                    e.to_string(),
                    e.sign().to_i8().to_string(),
                    e.mask().to_string(),
                    e.square().to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            String::from_utf8(bytes).expect("ASCII")
        }
    };
    Ok(Outcome::ok(body))
}

fn table(catalog: &Catalog, level: u32, format: OutputFormat) -> Result<Outcome> {
    let group = catalog.enumerate(level)?;
    let body = match format {
        OutputFormat::Csv => group.table_csv()?,
        OutputFormat::Json => json(&group.table_json())?,
        OutputFormat::Text => {
            let t = group.table_json();
            let width = t.elements.iter().map(String::len).max().unwrap_or(1) + 1;
            let mut s = format!("{:>width$}|", "");
            for e in &t.elements {
                write!(s, "{e:>width$}").unwrap();
            }
            s.push('\n');
            for (e, row) in t.elements.iter().zip(&t.table) {
                write!(s, "{e:>width$}|").unwrap();
                for cell in row {
                    write!(s, "{cell:>width$}").unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn rewrite_cmd(config: &RunConfig) -> Result<Outcome> {
    let trace = rewrite::run(config.max_steps)?;
    let body = match config.output_format {
        OutputFormat::Csv => return Err(no_csv("rewrite")),
        OutputFormat::Json => json(&trace)?,
        OutputFormat::Text => {
            let mut s = String::new();
            for step in &trace.steps {
                writeln!(
                    s,
                    "step {} ({:?}): alphabet {} | {} cells, {} cancelling pairs, {} novel | {:?}, {:?}",
                    step.step,
                    step.label,
                    step.alphabet,
                    step.table.cell_count(),
                    step.table.cancelling_pairs(),
                    step.table.novel_cells(),
                    step.verdict,
                    step.action,
                )
                .unwrap();
                for row in step.table.rows() {
                    let cells: Vec<String> =
                        row.iter().map(|c| format!("{:>9}", c.as_str())).collect();
                    writeln!(s, "    {}", cells.join("")).unwrap();
                }
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn pentads(
    catalog: &Catalog,
    level: u32,
    signature: Option<&str>,
    format: OutputFormat,
) -> Result<Outcome> {
    catalog.check_level(level)?;
    let filter = signature.map(pentad::parse_signature).transpose()?;
    let found = pentad::find_pentads(level, filter.as_ref())?;
    let body = match format {
        OutputFormat::Csv => return Err(no_csv("pentads")),
        OutputFormat::Json => json(&pentad::search_json(level, &found)?)?,
        OutputFormat::Text => {
            let max = pentad::max_anticommuting_set_size(level)?;
            let mut s = format!(
                "level {level}: largest anticommuting set {max}, {} pentads\n",
                found.len()
            );
            for p in &found {
                let names: Vec<String> = p.members().iter().map(|m| m.to_string()).collect();
                writeln!(
                    s,
                    "{}  {}  {}",
                    names.join(" "),
                    format_signature(&p.signature()),
                    if p.generates_full_group() {
                        "generates"
                    } else {
                        "-"
                    }
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn nilpotent_cmd(args: [&String; 5], format: OutputFormat) -> Result<Outcome> {
    let [e, p1, p2, p3, m] = args.map(|a| parse_rational(a));
    let pentad = nilpotent::first_nilpotent_pentad(5)?;
    let op = NilpotentOperator::build(&pentad, e?, [p1?, p2?, p3?], m?, SIGN_VARIANTS[0]).map_err(
        |err| match err {
            Error::Precondition(msg) => Error::Usage(msg),
            other => other,
        },
    )?;
    let report = NilpotentJson::from_operator(&op);
    let body = match format {
        OutputFormat::Csv => return Err(no_csv("nilpotent")),
        OutputFormat::Json => json(&report)?,
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "pentad: {}", report.pentad.join(" ")).unwrap();
            writeln!(s, "operator: {}", op.element()).unwrap();
            writeln!(s, "square: {}", report.square).unwrap();
            writeln!(s, "nilpotent: {}", report.nilpotent).unwrap();
            match report.annihilation {
                Some(t) => {
                    writeln!(s, "annihilation (rows: operator signs, columns: amplitude signs ++ +- -+ --):").unwrap();
                    for (row, signs) in t.iter().zip(SIGN_VARIANTS) {
                        let cells: Vec<&str> =
                            row.iter().map(|&z| if z { "0" } else { "." }).collect();
                        writeln!(
                            s,
                            "  {}{}  {}",
                            signs.0.symbol(),
                            signs.1.symbol(),
                            cells.join(" ")
                        )
                        .unwrap();
                    }
                }
                None => writeln!(
                    s,
                    "annihilation: n/a (needs E² = p² + m², E > 0, m > 0, p ≠ 0)"
                )
                .unwrap(),
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn verify_cmd(config: &RunConfig) -> Result<Outcome> {
    let report = verify::run(&VerifyConfig {
        seed: config.seed,
        max_level: config.max_level,
        ..VerifyConfig::default()
    })?;
    let body = match config.output_format {
        OutputFormat::Csv => return Err(no_csv("verify")),
        OutputFormat::Json => json(&report)?,
        OutputFormat::Text => {
            let mut s = format!("seed {}, max level {}\n", report.seed, report.max_level);
            for c in &report.checks {
                writeln!(
                    s,
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
                .unwrap();
            }
            writeln!(
                s,
                "{}",
                if report.passed {
                    "all checks passed"
                } else {
                    "verification FAILED"
                }
            )
            .unwrap();
            s
        }
    };
    Ok(Outcome {
        body,
        success: report.passed,
    })
}

/// Parses, runs and writes the result; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|outcome| {
        match &cli.output {
            Some(path) => std::fs::write(path, &outcome.body)?,
            None => print!("{}", outcome.body),
        }
        Ok(outcome.success)
    }) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_FAILED
            }
        }
    }
}
