//! `arrangements`: invariants of Euclidean and toric hyperplane
//! arrangements from JSON files.
//!
//! Exit status: 0 success, 1 verification failure, 2 input error.

mod commands;
mod job;
mod render;
mod report;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use job::{Cli, JobSpec};

/// Why a run stopped early.
#[derive(Debug)]
pub enum Failure {
    /// Bad file, bad flags, or an arrangement the command cannot handle.
    Input(String),
    /// A check or an asserted hypothesis failed. The report has already
    /// been printed.
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

impl From<arrangements::Error> for Failure {
    fn from(e: arrangements::Error) -> Self {
        use arrangements::Error::*;
        match e {
            ConsistencyFailure(_) | NonIntegral { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = JobSpec::from_cli(cli).and_then(|job| commands::run(&job));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("failed: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
