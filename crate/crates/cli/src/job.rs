use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::Failure;

#[derive(Parser, Debug)]
#[command(name = "arrangements", version, about = "Exact invariants of Euclidean and toric hyperplane arrangements")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Treat the induced toric subdivision as regular; a failed necessary
    /// condition exits with status 1.
    #[arg(long, global = true)]
    pub assert_regular: bool,
    /// Treat every region as an open ball; exits with status 1 when the
    /// arrangement has no vertices.
    #[arg(long, global = true)]
    pub assert_balls: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Arrangement file.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Full report: poset, characteristic polynomial, regions, flag vectors
    /// and the face index.
    Analyze(Input),
    /// Run the built-in suite, or the cross-checks on one file.
    Verify {
        /// Arrangement file or `{"sphere_cd_index": ..., "n": ...}`.
        file: Option<PathBuf>,
    },
    /// SVG picture of a 2-torus arrangement on the unit square.
    Render {
        file: PathBuf,
        /// Write here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Characteristic polynomial.
    Charpoly(Input),
    /// Region counts.
    Regions(Input),
    /// Number of faces of each dimension.
    Fvector(Input),
    /// ab-index of the intersection poset and the face index.
    Abindex(Input),
    /// Face chains over a chain of poset elements.
    Fiber {
        file: PathBuf,
        /// Element indices as printed by `analyze`, e.g. `1,3,5`.
        #[arg(long, value_delimiter = ',', required = true)]
        chain: Vec<usize>,
    },
    /// Grid points of `(1/q)Z^n / Z^n` off a toric arrangement.
    LatticeCount {
        file: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Graph file: chromatic polynomial or acyclic orientations.
    Graph {
        file: PathBuf,
        #[arg(long, conflicts_with = "orientations")]
        chromatic: bool,
        #[arg(long)]
        orientations: bool,
        /// Only count orientations whose unique sink is this vertex.
        #[arg(long, requires = "orientations")]
        sink: Option<usize>,
    },
}

/// One validated invocation.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: Command,
    pub json: bool,
    pub assert_regular: bool,
    pub assert_balls: bool,
}

impl JobSpec {
    pub fn from_cli(cli: Cli) -> Result<Self, Failure> {
        let job = JobSpec {
            command: cli.command,
            json: cli.json,
            assert_regular: cli.assert_regular,
            assert_balls: cli.assert_balls,
        };
        job.validate()?;
        Ok(job)
    }

    fn validate(&self) -> Result<(), Failure> {
        let asserting = self.assert_regular || self.assert_balls;
        match &self.command {
            Command::Analyze(_) | Command::Verify { .. } | Command::Regions(_) => {}
            _ if asserting => {
                return Err(Failure::Input(
                    "--assert-regular and --assert-balls apply to analyze, verify and regions".into(),
                ))
            }
            _ => {}
        }
        match &self.command {
            Command::LatticeCount { q: 0, .. } => Err(Failure::Input("--q must be positive".into())),
            Command::Fiber { chain, .. } if chain.is_empty() => Err(Failure::Input("--chain is empty".into())),
            Command::Graph { chromatic: false, orientations: false, .. } => {
                Err(Failure::Input("graph needs --chromatic or --orientations".into()))
            }
            _ => Ok(()),
        }
    }
}
