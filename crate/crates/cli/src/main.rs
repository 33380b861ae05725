mod commands;
mod family;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use family::FrameArgs;

/// Build and analyze low-coherence group frames.
#[derive(Parser, Debug)]
#[command(name = "groupframe", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct a frame and write it as an FRM1 text file.
    Build {
        #[command(flatten)]
        frame: FrameArgs,
        /// Output path; the frame goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report coherence, bounds, tightness and equiangularity.
    Analyze(AnalyzeArgs),
    /// Reproduce the reference coherence table with random baselines.
    Table1 {
        /// First seed for the random baselines.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of consecutive seeds per row.
        #[arg(long, default_value_t = 1)]
        draws: u64,
        /// Restrict to these rows, e.g. `499:166,1009:504`.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<String>,
        /// Emit key=value records instead of a table.
        #[arg(long)]
        kv: bool,
    },
    /// Tabulate the closed-form coherence bounds for a fixed index r.
    Bounds {
        #[arg(long)]
        r: u64,
        #[arg(long, default_value_t = 2)]
        m_min: u64,
        #[arg(long, default_value_t = 200)]
        m_max: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
        #[arg(long)]
        kv: bool,
    },
    /// Run an exhaustive verification suite over primes up to --max-n.
    Verify {
        /// numtheory, spectra, bounds, dihedral, pairing, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        max_n: u64,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// FRM1 file to analyze instead of building from flags.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    #[command(flatten)]
    frame: FrameArgs,
}

/// Failure classes mapped to exit codes.
pub enum Failure {
    /// Input or usage error, exit 2.
    Input(String),
    /// A check failed, exit 1.
    Verification,
}

impl From<groupframe::Error> for Failure {
    fn from(e: groupframe::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { frame, out } => commands::build(&frame, out.as_deref()),
        Command::Analyze(a) => commands::analyze(a.file.as_deref(), &a.frame),
        Command::Table1 { seed, draws, rows, kv } => commands::table1(seed, draws, &rows, kv),
        Command::Bounds { r, m_min, m_max, step, kv } => commands::bounds(r, m_min, m_max, step, kv),
        Command::Verify { suite, max_n, verbose } => commands::verify(&suite, max_n, verbose),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
