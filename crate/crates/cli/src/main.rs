use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Construct, verify and bound aperiodic Z-complementary sets.
#[derive(Parser)]
#[command(name = "zcs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an optimal (b^n, 2^k, b^n, 2^k)-ZCS from Boolean-function parameters.
    Construct(ConstructArgs),
    /// Check a family file against the ZCS conditions and report optimality.
    Verify {
        file: PathBuf,
        /// Zone width to check; defaults to the file's Z, then to the measured width.
        #[arg(long)]
        z: Option<usize>,
    },
    /// Print set-size bounds as TSV.
    Bounds(BoundsArgs),
    /// Exhaustive maximum set size for a small (q, N, L, Z).
    Search(SearchArgs),
    /// Convert a family file to a structured document.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
    /// Convert a structured document back to a family file.
    Import {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Number of blocks; must match --blocks when both are given.
    #[arg(long)]
    k: Option<usize>,
    /// Ordered blocks, e.g. "1,3;2". Without it, --k gives {1},…,{k-1},{k,…,m}.
    #[arg(long)]
    blocks: Option<String>,
    /// β_0,…,β_m; zeros by default.
    #[arg(long)]
    beta: Option<String>,
    /// Write the family here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: usize,
    #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
    z: Option<usize>,
    /// One row for every Z in 1..=L.
    #[arg(long)]
    sweep: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    q: u32,
    #[arg(long = "n-flock")]
    n_flock: usize,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    z: usize,
    /// Maximum number of candidate flocks to enumerate.
    #[arg(long, default_value_t = zcs_core::search::DEFAULT_CAP)]
    cap: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Search only the first `cap` candidates when the space is larger.
    #[arg(long)]
    allow_partial: bool,
    /// Write the witness family here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => commands::construct(&a.into()),
        Command::Verify { file, z } => commands::verify(&file, z),
        Command::Bounds(a) => commands::bounds(a.n, a.l, a.z),
        Command::Search(a) => commands::search(&a.into()),
        Command::Export { file, format: ExportFormat::Json } => commands::export_json(&file),
        Command::Import { file, out } => commands::import_json(&file, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

impl From<ConstructArgs> for commands::ConstructRequest {
    fn from(a: ConstructArgs) -> Self {
        Self {
            q: a.q,
            b: a.b,
            m: a.m,
            n: a.n,
            k: a.k,
            blocks: a.blocks,
            beta: a.beta,
            out: a.out,
        }
    }
}

impl From<SearchArgs> for commands::SearchRequest {
    fn from(a: SearchArgs) -> Self {
        Self {
            q: a.q,
            n: a.n_flock,
            l: a.l,
            z: a.z,
            cap: a.cap,
            seed: a.seed,
            allow_partial: a.allow_partial,
            out: a.out,
        }
    }
}
