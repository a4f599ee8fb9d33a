//! Batch verification of G2 structures on Lie algebras: input parsing, the
//! built-in catalog, reports and the command-line front end.

pub mod catalog;
pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use input::{load_bytes, InputError, Loaded};
use report::{AnalysisError, Mode};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "g2forge",
    version,
    about = "Exact verification of G2 structures with skew-symmetric torsion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze a structure description and print the full report
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Built-in example structures
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Print only the identity battery of an integrable structure
    Battery {
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// List the catalog entries
    List,
    /// Analyze a catalog entry
    Run {
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Tolerance on residual norms in float mode
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, env = "G2FORGE_FORMAT", default_value_t = Format::Json)]
    pub format: Format,
}

impl OutputArgs {
    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float { tol: self.tol },
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("unknown catalog entry {name:?}; available: {}", .available.join(", "))]
    UnknownEntry { name: String, available: Vec<String> },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Analysis(AnalysisError::Inconsistent(_)) => EXIT_INTERNAL,
            _ => EXIT_INVALID_INPUT,
        }
    }
}

/// Result of a command: text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn load_file(path: &PathBuf) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(load_bytes(&bytes)?)
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAILED
    }
}

fn full_report(loaded: &Loaded, out: &OutputArgs) -> Result<Outcome, CliError> {
    let r = report::analyze(loaded, out.mode())?;
    let stdout = match out.format {
        Format::Json => report::to_json(&r),
        Format::Md => report::to_markdown(&r),
    };
    Ok(Outcome {
        stdout,
        code: verdict_code(r.passes()),
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Analyze { file, output } => full_report(&load_file(file)?, output),
        Command::Battery { file, output } => {
            let rows = report::battery(&load_file(file)?, output.mode())?;
            let stdout = match output.format {
                Format::Json => report::to_json(&rows),
                Format::Md => report::ledger_markdown(&rows),
            };
            Ok(Outcome {
                stdout,
                code: verdict_code(rows.iter().all(|r| r.pass)),
            })
        }
        Command::Catalog {
            command: CatalogCommand::List,
        } => {
            let mut stdout = String::new();
            for name in catalog::names() {
                let spec = input::parse_spec(catalog::source(name).unwrap_or_default().as_bytes())?;
                stdout.push_str(&format!("{name}\t{}\n", spec.description.unwrap_or_default()));
            }
            Ok(Outcome {
                stdout,
                code: EXIT_PASS,
            })
        }
        Command::Catalog {
            command: CatalogCommand::Run { name, output },
        } => {
            let loaded = catalog::load(name).ok_or_else(|| CliError::UnknownEntry {
                name: name.clone(),
                available: catalog::names().map(String::from).collect(),
            })?;
            full_report(&loaded, output)
        }
    }
}
