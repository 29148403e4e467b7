//! Command-line front end: scenario files in, reports out.
//!
//! Exit codes: 0 on success, 2 for parse/structure problems, 3 for
//! validation problems (bad values, unit mismatches), 4 when an expected-
//! value check fails. Output is plain text in all modes (`NO_COLOR` is
//! honored trivially: no color codes are ever emitted).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use requivar_cli::checks::ExpectedTable;
use requivar_cli::error::CliError;
use requivar_cli::report::{Format, Report};
use requivar_cli::{commands, schema};

#[derive(Parser)]
#[command(
    name = "requivar",
    version,
    about = "Variety calculus, requisite-variety analysis, and attacker-defender cyber-cycle simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Override the seed / base seed of every simulation and sweep request.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = CliFormat::Table)]
    format: CliFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliFormat {
    Table,
    Csv,
    Jsonl,
}

impl From<CliFormat> for Format {
    fn from(value: CliFormat) -> Self {
        match value {
            CliFormat::Table => Format::Table,
            CliFormat::Csv => Format::Csv,
            CliFormat::Jsonl => Format::Jsonl,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Execute every request in a scenario file, in declaration order.
    Run { file: PathBuf },
    /// Compute the built-in worked examples and verify them against their
    /// published values (nonzero exit on any mismatch).
    PaperExamples,
    /// Print the longest reconfiguration period that still outruns a
    /// disturbance stream.
    Bound {
        /// Fresh configuration entropy per move, in bits.
        #[arg(long = "h-move")]
        h_move: f64,
        /// Disturbance rate with unit, e.g. "2/hour".
        #[arg(long)]
        rate: String,
        /// Multiplicative safety margin for unknown channels (>= 1).
        #[arg(long, default_value_t = 1.0)]
        margin: f64,
    },
    /// Execute only the sweep requests in a scenario file.
    Sweep { file: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(err.exit_code());
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Run { file } => {
            let (parsed, digest) = load(file)?;
            let mut report = Report::new(Some(digest), cli.seed);
            commands::execute_requests(&parsed, cli.seed, &mut report)?;
            emit(cli, &report)
        }
        Command::Sweep { file } => {
            let (parsed, digest) = load(file)?;
            let mut report = Report::new(Some(digest), cli.seed);
            commands::execute_sweeps(&parsed, cli.seed, &mut report)?;
            emit(cli, &report)
        }
        Command::PaperExamples => {
            let mut report = Report::new(None, None);
            let result = commands::execute_checks(&ExpectedTable::default(), &mut report);
            emit(cli, &report)?;
            result
        }
        Command::Bound {
            h_move,
            rate,
            margin,
        } => {
            let line = commands::execute_bound(*h_move, rate, *margin)?;
            write_output(cli, &format!("{line}\n"))
        }
    }
}

fn load(path: &Path) -> Result<(schema::ScenarioFile, String), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let digest = hex_digest(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Parse(format!("{} is not valid UTF-8", path.display())))?;
    Ok((schema::parse_scenario_str(&text)?, digest))
}

fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    write_output(cli, &report.render(cli.format.into()))
}

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
