use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use maxclique::graph::{write_dimacs, GraphSource};
use maxclique::harness::{run_batch_random, run_single, AlgorithmSpec, BatchConfig};
use maxclique::search::SearchBudget;

/// Exit status when the time limit cut a search short (the clique
/// printed is the best found, not necessarily optimal).
const EXIT_TIMEOUT: u8 = 124;

#[derive(Parser)]
#[command(
    name = "maxclique",
    about = "Exact maximum clique solvers (MC, MCQ, MCSa, MCSb, BBMC) with \
             DIMACS I/O, random instance generators and a batch harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a DIMACS clq instance with one algorithm
    Solve {
        /// Algorithm token: MC, or MCQ/MCSa/MCSb/BBMC plus style digit
        /// 1-3 (e.g. MCSa1)
        algorithm: AlgorithmSpec,
        /// Instance file in DIMACS clq format
        file: PathBuf,
        /// Time limit in whole seconds; omitted or 0 means unlimited
        time_limit: Option<u64>,
        /// Report time_ms as 0 so repeated runs are byte-identical
        #[arg(long)]
        zero_times: bool,
    },
    /// Generate a random instance and print it as DIMACS clq
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Sweep G(n,p) instances over a probability range and emit CSV
    Batch {
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// First edge probability of the sweep
        #[arg(long)]
        p_from: f64,
        /// Last edge probability of the sweep
        #[arg(long)]
        p_to: f64,
        /// Sweep step
        #[arg(long, default_value_t = 0.1)]
        p_step: f64,
        /// Graphs generated per sweep point
        #[arg(long)]
        samples: usize,
        /// Comma-separated algorithm tokens
        #[arg(long, value_delimiter = ',', required = true)]
        algorithms: Vec<AlgorithmSpec>,
        /// Base seed; sample s uses seed + s
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-run time limit in whole seconds (0 = unlimited)
        #[arg(long, default_value_t = 0)]
        time_limit: u64,
        /// Write the CSV here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report all times as 0 so repeated runs are byte-identical
        #[arg(long)]
        zero_times: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Erdos-Renyi G(n,p)
    Gnp { n: usize, p: f64, seed: u64 },
    /// Random k-regular graph (n*k must be even)
    Kregular { n: usize, k: usize, seed: u64 },
    /// Watts-Strogatz small world: ring lattice of span k, rewiring
    /// probability p
    Smallworld {
        n: usize,
        k: usize,
        p: f64,
        seed: u64,
    },
}

fn run() -> Result<u8, Box<dyn std::error::Error>> {
    match Cli::parse().command {
        Command::Solve {
            algorithm,
            file,
            time_limit,
            zero_times,
        } => {
            let budget = SearchBudget::from_secs(time_limit.unwrap_or(0));
            let source = GraphSource::DimacsFile(file);
            let (row, text) = run_single(algorithm, &source, budget, zero_times)?;
            print!("{text}");
            Ok(if row.outcome.completed {
                0
            } else {
                EXIT_TIMEOUT
            })
        }
        Command::Gen { kind } => {
            let source = match kind {
                GenKind::Gnp { n, p, seed } => GraphSource::Gnp { n, p, seed },
                GenKind::Kregular { n, k, seed } => GraphSource::KRegular { n, k, seed },
                GenKind::Smallworld { n, k, p, seed } => GraphSource::SmallWorld { n, k, p, seed },
            };
            let g = source.load()?;
            let stdout = std::io::stdout();
            write_dimacs(&g, stdout.lock())?;
            Ok(0)
        }
        Command::Batch {
            n,
            p_from,
            p_to,
            p_step,
            samples,
            algorithms,
            seed,
            time_limit,
            output,
            zero_times,
        } => {
            let cfg = BatchConfig {
                n,
                p_from,
                p_to,
                p_step,
                samples,
                specs: algorithms,
                seed_base: seed,
                budget: SearchBudget::from_secs(time_limit),
                zero_times,
            };
            let csv = run_batch_random(&cfg)?;
            match output {
                Some(path) => std::fs::write(path, csv)?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
