//! `treealpha` command-line tool.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition failed,
//! 4 a checked property was violated (sweep violations, invalid
//! decompositions, construction bound failures).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "treealpha", version, about = "Tree-independence number oracles, decompositions and sweeps")]
struct Cli {
    /// key=value file with caps and default parameters.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Leave elapsed times out of reports, for byte-identical reruns.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Default)]
struct Params {
    /// Star size t (K1,t-free, Kt,t-free).
    #[arg(long)]
    t: Option<usize>,
    /// Number of independent cycles k (Ok-free).
    #[arg(long)]
    k: Option<usize>,
    /// Star size s (2K1,s-subgraph-free).
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// One class report per input graph (graph6 or sparse6 lines).
    Classify {
        input: Option<PathBuf>,
        #[command(flatten)]
        params: Params,
        /// Report only this class (repeatable), e.g. --class chordal --class P5-free.
        #[arg(long = "class")]
        classes: Vec<String>,
    },
    /// Tree decomposition of one graph with its measured and guaranteed bound.
    TreeAlpha {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[command(flatten)]
        params: Params,
        /// Vertex cover for --mode star, e.g. 0,1,2 (default: a minimum one).
        #[arg(long)]
        cover: Option<String>,
        /// Side A of the split partition for --mode split (default: an optimal one).
        #[arg(long)]
        split: Option<String>,
        /// Write the .td document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a PACE .td file against a graph.
    VerifyTd {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
    /// Check a registered property on every graph with at most --n vertices.
    Sweep {
        assertion: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the registered properties.
        #[arg(long)]
        list: bool,
    },
    /// Observational search for q7.3-p5-gap or q7.4-clique-chordal.
    Probe {
        question: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a family member as graph6: `gen prism 1 1 2`, `gen 'wheel(2,2,1)'`,
    /// `gen random --n 12 --filter 'K1,3-free & O2-free' --seed 1`, or
    /// `gen --list --n 8`.
    Gen {
        family: Option<String>,
        params: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        list: bool,
    },
    /// Stream one graph6 line per isomorphism class on --n vertices.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        filter: Option<String>,
    },
    /// Graph invariants of each input graph.
    Measure { input: Option<PathBuf> },
    /// The epsilon_k table and c_{k,t} in exact rationals.
    Epsilon {
        /// Comma-separated delta_2, delta_3, ... e.g. 1/10,1/10,1/10.
        #[arg(long)]
        delta: String,
        #[arg(long)]
        t: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    P3p1,
    Star,
    Split,
    Fvs,
    Theta3,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(commands::exit_code(&err))
        }
    }
}
