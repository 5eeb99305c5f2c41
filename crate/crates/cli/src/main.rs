//! `walklab` command-line front end.

mod commands;
mod config;
mod input;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "walklab", version, about = "Walk-count invariants of rooted graphs")]
struct Cli {
    /// Output format [default: text].
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// JSON file with defaults for format, seed, trials and threads.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for censuses and trials (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Walk and closed-walk rows, triples, recurrences and polynomials.
    Invariants(commands::InvariantsArgs),
    /// Pair verdict for two rooted graphs.
    Classify(commands::ClassifyArgs),
    /// Exhaustive censuses over trees or connected graphs.
    Census(commands::CensusArgs),
    /// Check a tightness family against its predicted thresholds.
    Verify(commands::VerifyArgs),
    /// Seeded Monte-Carlo experiments.
    Trial(commands::TrialArgs),
    /// List or emit the bundled fixtures.
    Fixtures(commands::FixturesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lab(walklab::Error),
}

impl From<walklab::Error> for CliError {
    fn from(e: walklab::Error) -> Self {
        Self::Lab(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::Lab(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Lab(e.into())
    }
}

impl CliError {
    /// 1 for failed computations, 2 for bad input.
    fn exit_code(&self) -> u8 {
        use walklab::Error as E;
        match self {
            Self::Usage(_) => 2,
            Self::Lab(E::Integrity(_) | E::TheoremViolation(_) | E::Budget(_) | E::Io(_)) => 1,
            Self::Lab(_) => 2,
        }
    }
}

/// Settings shared by every subcommand after merging the config file.
pub struct Ctx {
    pub format: Format,
    pub config: Config,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = Config::load(cli.config.as_deref())?;
    if let Some(t) = cli.threads.or(config.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    let ctx = Ctx {
        format: cli.format.or(config.format).unwrap_or(Format::Text),
        config,
    };
    let (mut text, outcome) = match &cli.command {
        Command::Invariants(a) => (commands::invariants(a, &ctx)?, Ok(())),
        Command::Classify(a) => (commands::classify(a, &ctx)?, Ok(())),
        Command::Census(a) => (commands::census(a, &ctx)?, Ok(())),
        Command::Verify(a) => commands::verify(a, &ctx)?,
        Command::Trial(a) => (commands::trial(a, &ctx)?, Ok(())),
        Command::Fixtures(a) => (commands::fixtures(a, &ctx)?, Ok(())),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = e.exit_code();
            match e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Lab(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
