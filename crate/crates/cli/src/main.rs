use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

use commands::Outcome;

const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "dcomplete", version, about = "d-complete posets, hook formulas and RSK")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Poset arguments are file paths, or `catalog:<name>` for a built-in poset.
#[derive(Subcommand)]
enum Command {
    /// Check the three d-complete axioms.
    Check { poset: String },
    /// Print the diagonals and their adjacency.
    Diagonals { poset: String },
    /// Print the hook vector and hook length of every element.
    Hooks { poset: String },
    /// Apply RSK to a filling; prints the image filling.
    Rsk {
        poset: String,
        filling: PathBuf,
        /// `stable` or `given:<file>` with the order top element first.
        #[arg(long, default_value = "stable")]
        order: String,
    },
    /// Invert RSK on an order-reversing filling.
    InverseRsk {
        poset: String,
        filling: PathBuf,
        #[arg(long, default_value = "stable")]
        order: String,
    },
    /// Count (and list) linear extensions, top element first.
    Extensions {
        poset: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Check e(P) * prod(hook lengths) == |P|!.
    VerifyProctor {
        poset: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Check the multivariate hook identity at random rational points.
    VerifyHlf {
        poset: String,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Monte Carlo volume of a polytope at x = 1, compared with the exact value.
    Volume {
        poset: String,
        /// `fillings` or `rpp`.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Classical RSK of a matrix, the toggle RPP and its GT patterns.
    ClassicalRsk { matrix: PathBuf },
    /// Run the acceptance battery over the catalog.
    Suite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion (1-10).
        #[arg(long)]
        criterion: Option<usize>,
    },
    /// Write catalog posets in the text format.
    Gen {
        /// Catalog names such as `d4`, `young-3,2` or `tree-5-2`.
        names: Vec<String>,
        /// Write the whole catalog.
        #[arg(long)]
        all: bool,
        /// Directory for `<name>.poset` files; without it a single poset is
        /// printed to standard output.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { poset } => commands::check(&poset),
        Command::Diagonals { poset } => commands::diagonals(&poset),
        Command::Hooks { poset } => commands::hooks(&poset),
        Command::Rsk { poset, filling, order } => commands::rsk(&poset, &filling, &order, false),
        Command::InverseRsk { poset, filling, order } => commands::rsk(&poset, &filling, &order, true),
        Command::Extensions { poset, cap, count_only } => commands::extensions(&poset, cap, count_only),
        Command::VerifyProctor { poset, cap } => commands::verify_proctor(&poset, cap),
        Command::VerifyHlf { poset, points, seed, cap } => commands::verify_hlf(&poset, points, seed, cap),
        Command::Volume { poset, kind, samples, seed, cap } => commands::volume(&poset, &kind, samples, seed, cap),
        Command::ClassicalRsk { matrix } => commands::classical_rsk(&matrix),
        Command::Suite { seed, criterion } => commands::suite(seed, criterion),
        Command::Gen { names, all, dir } => commands::gen(&names, all, dir.as_deref()),
    };
    match outcome {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
