mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Parser)]
#[command(name = "gcm", version, about = "Graph curve matroids of trivalent multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Circuit engine; `both` runs the two engines and diffs their output.
    #[arg(long, value_enum, default_value_t = EngineChoice::Naive, global = true)]
    engine: EngineChoice,

    /// Seed for every randomized step (hyperplane sampling, bond subset sampling).
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Largest ground set enumerated exhaustively (2^K subsets).
    #[arg(long, default_value_t = gcm_core::gcmatroid::DEFAULT_ENUMERATION_BOUND, global = true)]
    max_subset_bits: usize,

    /// Print the report as compact JSON.
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Print the report as indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Naive,
    Structured,
    Both,
}

#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Built-in graph (see `gcm gallery-list`).
    #[arg(long)]
    gallery: Option<String>,
    /// Graph file in `p edge` format or JSON.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
pub struct OtherInput {
    #[arg(long)]
    with_gallery: Option<String>,
    #[arg(long)]
    with_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the circuits of M_G.
    Circuits {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Full matroid summary including basis count and self-duality.
    Matroid {
        #[command(flatten)]
        graph: GraphInput,
        /// Also run the invariant checks; any failure exits with status 1.
        #[arg(long)]
        verify: bool,
    },
    /// Decide identical self-duality and explain a negative answer.
    Isd {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Rank of M_G, or of a vertex subset such as `1,2,3`.
    Rank {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        subset: Option<String>,
    },
    /// Bond matroid rank of delta(A) for a vertex subset, or of an edge subset.
    CographicRank {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
        subset: Option<String>,
        #[arg(long)]
        edges: Option<String>,
    },
    /// Check the cycle matrix realization and the hyperplane-section matroid.
    Realize {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Compare two graphs and their matroids.
    Compare {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        other: OtherInput,
    },
    /// 2-switch two graphs along one edge each and check the direct-sum decomposition.
    TwoSwitch {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        other: OtherInput,
        #[arg(long)]
        e1: usize,
        #[arg(long)]
        e2: usize,
        /// Join a1 with b2 and b1 with a2 instead of a1-a2, b1-b2.
        #[arg(long)]
        crossed: bool,
    },
    /// Find non-isomorphic 2-edge-connected trivalent graphs with isomorphic matroids.
    SearchPairs {
        /// Largest vertex count searched.
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// List the built-in graphs.
    GalleryList,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = commands::Options { engine: cli.engine, seed: cli.seed, bound: cli.max_subset_bits };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Circuits { graph } => commands::circuits(graph, &options),
        Command::Matroid { graph, verify } => commands::matroid(graph, *verify, &options),
        Command::Isd { graph } => commands::isd(graph, &options),
        Command::Rank { graph, subset } => commands::rank(graph, subset.as_deref(), &options),
        Command::CographicRank { graph, subset, edges } => {
            commands::cographic_rank(graph, subset.as_deref(), edges.as_deref(), &options)
        }
        Command::Realize { graph } => commands::realize(graph, &options),
        Command::Compare { graph, other } => commands::compare(graph, other, &options),
        Command::TwoSwitch { graph, other, e1, e2, crossed } => {
            commands::two_switch(graph, other, *e1, *e2, *crossed, &options)
        }
        Command::SearchPairs { n } => commands::search_pairs(*n, &options),
        Command::GalleryList => commands::gallery_list(&options),
    };
    match result {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let text = if cli.pretty {
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else if cli.json {
                serde_json::to_string(&report).expect("report serializes")
            } else {
                report.render_text()
            };
            // a closed pipe (for example `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
            if report.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Verification(message)) => {
            eprintln!("verification failed: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
