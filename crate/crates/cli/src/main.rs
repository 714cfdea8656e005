//! `kaehler-lab`: Hilbert functions, differents, conductors and
//! classification of 0-dimensional schemes described in JSON.

mod input;
mod report;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use kaehler_core::scheme::build_scheme;
use sha2::{Digest, Sha256};

use report::{Command, Options};

#[derive(Parser)]
#[command(name = "kaehler-lab", version, about = "Differents and structure of 0-dimensional projective schemes")]
struct Cli {
    /// What to compute; `report` runs everything.
    #[arg(value_enum)]
    command: Command,
    /// JSON scheme description (`-` reads standard input).
    input: PathBuf,
    /// Emit JSON (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable summary.
    #[arg(long)]
    text: bool,
    /// Last degree listed in Hilbert function tables.
    #[arg(long, value_name = "K")]
    max_degree: Option<usize>,
    /// Also evaluate redundant routes and report disagreements.
    #[arg(long)]
    cross_check: bool,
    /// Record wall-clock times (makes the output run-dependent).
    #[arg(long)]
    timings: bool,
    /// Worker threads; more than one computes the two differents concurrently.
    #[arg(long, value_name = "K")]
    threads: Option<usize>,
}

/// An error with a stable machine-readable code.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn context(mut self, at: &str) -> Self {
        self.message = format!("{at}: {}", self.message);
        self
    }
}

impl From<kaehler_core::Error> for CliError {
    fn from(e: kaehler_core::Error) -> Self {
        CliError::new(e.code(), e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::new("io", e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
    }
}

fn execute(cli: &Cli) -> Result<report::Report, CliError> {
    let text = read_input(&cli.input)?;
    let parsed = input::parse_input(&text)?;
    // hash of the canonical re-serialization, insensitive to whitespace and key order
    let canonical = serde_json::to_string(&parsed.doc).expect("document serializes");
    let sha = hex::encode(Sha256::digest(canonical.as_bytes()));
    let x = build_scheme(parsed.field, parsed.doc.n, parsed.scheme)?;
    let opts = Options {
        max_degree: cli.max_degree,
        cross_check: cli.cross_check,
        timings: cli.timings,
        parallel: cli.threads.is_some_and(|t| t > 1),
    };
    report::run(cli.command, &x, sha, &opts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("KAEHLER_LAB_LOG", "error")).init();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            log::warn!("thread pool: {e}");
        }
    }
    match execute(&cli) {
        Ok(rep) => {
            if cli.text {
                print!("{}", report::render_text(&rep));
            } else {
                println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
            }
            if rep.consistency_failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("{e}");
            if !cli.text {
                let doc = serde_json::json!({"error": {"code": e.code, "message": e.message}});
                println!("{}", serde_json::to_string_pretty(&doc).expect("error serializes"));
            }
            ExitCode::from(1)
        }
    }
}
