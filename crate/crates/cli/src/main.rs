mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Failure;

/// Graph states, generalized concurrence and local-complementation classes.
#[derive(Debug, Parser)]
#[command(name = "graphcord", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file (or directory for `export`) instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every labeled graph on n vertices with its isomorphism class.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Print the sign vector of a graph state.
    State {
        /// Graph as `n=3;edges=1-3` or `n=3;code=2` (1-based vertices).
        #[arg(short, long)]
        graph: String,
        /// Instead, print the dense state after the LC unitary at this vertex.
        #[arg(long, value_name = "VERTEX")]
        lc: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Exact generalized concurrence of one graph state.
    Concurrence {
        #[arg(short, long)]
        graph: String,
        #[command(flatten)]
        out: Output,
    },
    /// Group all labeled graphs on n vertices by concurrence.
    Classify {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Local-complementation classes with their concurrence.
    Orbits {
        #[arg(short)]
        n: usize,
        /// Also identify graphs that differ by a vertex relabeling.
        #[arg(long)]
        quotient: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(short, required = true)]
        n: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Write classification and orbit tables for each n into a directory.
    Export {
        #[arg(short, required = true)]
        n: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
}

fn configure_threads() {
    if let Some(k) = std::env::var("GRAPHCORD_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    configure_threads();
    match commands::run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}
