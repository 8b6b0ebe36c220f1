use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

/// Friendliness of trees and the circle systems they describe.
#[derive(Debug, Parser)]
#[command(name = "lando", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every free tree with N edges.
    Enumerate {
        #[arg(long)]
        edges: usize,
    },
    /// Decide whether two trees are friendly.
    Check {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Print the realizable bijection found.
        #[arg(long)]
        witness: bool,
    },
    /// Decide every pair of trees with N edges and write a report.
    Survey {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (default: LANDO_JOBS, else available cores).
        #[arg(long, env = "LANDO_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        /// Confirm unfriendly rows by unpruned enumeration at every size.
        #[arg(long)]
        recheck: bool,
    },
    /// Show that G and H admit no realizable bijection in either direction.
    #[command(name = "verify-theorem1")]
    VerifyTheorem1 {
        /// Also evaluate all 5040 bijections without pruning.
        #[arg(long)]
        recheck: bool,
        /// Replace the G fixture (test hook).
        #[arg(long, hide = true)]
        g: Option<PathBuf>,
        /// Replace the H fixture (test hook).
        #[arg(long, hide = true)]
        h: Option<PathBuf>,
    },
    /// Print the dual tree of a nesting file.
    Dual {
        #[arg(long)]
        nesting: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { edges } => commands::enumerate(edges),
        Command::Check { a, b, witness } => commands::check(&a, &b, witness),
        Command::Survey {
            edges,
            out,
            jobs,
            recheck,
        } => commands::survey(edges, &out, jobs, recheck),
        Command::VerifyTheorem1 { recheck, g, h } => {
            commands::verify_theorem1(recheck, g.as_deref(), h.as_deref())
        }
        Command::Dual { nesting } => commands::dual(&nesting),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
