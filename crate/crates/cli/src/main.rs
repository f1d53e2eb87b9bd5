use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use lapchi_cli::{run, Command, Format, RunConfig};

/// Normalized-Laplacian spectra, chromatic bounds and colouring certificates.
#[derive(Debug, Parser)]
#[command(name = "lapchi", version)]
struct Args {
    /// Analysis to run.
    #[arg(value_enum)]
    command: Command,
    /// Edge-list (or hyperedge-list for hyper-check) input file.
    input: Option<PathBuf>,
    /// `vertex colour` file to certify instead of an exact colouring.
    #[arg(long)]
    colouring: Option<PathBuf>,
    /// Tolerance for spectral comparisons.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for heuristics and generators.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Number of classes for psi, phi and certify.
    #[arg(long)]
    k: Option<usize>,
    /// Uniformity for hyper-gen.
    #[arg(long)]
    m: Option<usize>,
    /// Hyperedge count for hyper-gen.
    #[arg(long)]
    e: Option<usize>,
    /// Vertex budget for hyper-gen; omit for a windmill.
    #[arg(long)]
    n: Option<usize>,
    /// Largest order for exact chromatic numbers.
    #[arg(long, default_value_t = lapchi::colouring::DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    /// Largest order for exhaustive partition enumeration.
    #[arg(long, default_value_t = lapchi::expansion::DEFAULT_ENUMERATION_LIMIT)]
    enum_limit: usize,
    /// Also compute the exact chromatic number in `bound`.
    #[arg(long)]
    with_exact: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        command: args.command,
        input_path: args.input,
        colouring_path: args.colouring,
        tol: args.tol,
        seed: args.seed,
        format: args.format,
        k: args.k,
        m: args.m,
        e: args.e,
        n: args.n,
        exact_limit: args.exact_limit,
        enum_limit: args.enum_limit,
        with_exact: args.with_exact,
    };
    match run(&config) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
