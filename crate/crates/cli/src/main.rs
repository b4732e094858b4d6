//! `twisted-sn`: build, multiply, verify, factorize and export elements of the
//! twisted group algebra of `S_n`.

mod commands;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use commands::{CommandResult, Export, Format, MatrixArgs};
use twisted_sn::{Basis, VerifierConfig};

#[derive(Parser, Debug)]
#[command(name = "twisted-sn", version, about = "Exact computations in the twisted group algebra of S_n")]
struct Cli {
    /// Degree n of the symmetric group.
    #[arg(long, global = true)]
    n: Option<usize>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Upper bound on n for every verification, replacing the per-identity defaults.
    #[arg(long, global = true, env = "TWISTED_SN_LIMIT")]
    limit: Option<usize>,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an element: star:G, perm:G, id, alpha, beta:K, gamma:K, delta:K, epsilon:K, deltacap:K.
    Show { element: String },
    /// Twisted product of two elements; for two starred permutations also the twist factor.
    Mult { left: String, right: String },
    /// Run named identities, or `all`, exhaustively at degree n.
    Verify {
        #[arg(required = true)]
        identities: Vec<String>,
    },
    /// Column factorization of alpha*_n and its inverse chain.
    Factorize,
    /// Left-multiplication matrix of an element, symbolic or specialized.
    Matrix {
        element: String,
        #[arg(long, default_value = "starred")]
        basis: Basis,
        /// JSON file {"a,b": value}; exact rationals unless --float.
        #[arg(long = "spec")]
        specialization: Option<PathBuf>,
        /// Random specialization with this seed instead of a file.
        #[arg(long, conflicts_with = "specialization")]
        seed: Option<u64>,
        /// Complex floating-point values instead of exact rationals.
        #[arg(long)]
        float: bool,
        /// Write the inverse; for alpha in the starred basis also check the inverse chain.
        #[arg(long)]
        invert: bool,
        /// Max-abs tolerance for floating-point checks.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, value_enum, default_value = "json")]
        export: Export,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> twisted_sn::Result<CommandResult> {
    let config = cli.limit.map(VerifierConfig::uniform).unwrap_or_default();
    match cli.command {
        Command::Show { element } => commands::show(&element, cli.n, cli.format),
        Command::Mult { left, right } => commands::mult(&left, &right, cli.n, cli.format),
        Command::Verify { identities } => commands::verify(&identities, cli.n, &config, cli.format),
        Command::Factorize => commands::factorize(cli.n, cli.format),
        Command::Matrix { element, basis, specialization, seed, float, invert, tolerance, export, output } => {
            commands::matrix(&MatrixArgs {
                spec: element,
                n: cli.n,
                basis,
                specialization,
                seed,
                float,
                invert,
                tolerance,
                export,
                output,
                format: cli.format,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(result) => {
            if !result.stdout.is_empty() {
                println!("{}", result.stdout);
            }
            if !result.stderr.is_empty() {
                eprintln!("{}", result.stderr);
            }
            ExitCode::from(result.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
