use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gwprob::io::canonical;
use gwprob::Mode;

mod commands;
mod literal;
mod table;

use commands::{Output, SeriesArg};

/// Symbolic computation in graph W*-probability spaces.
#[derive(Parser)]
#[command(name = "gwprob", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Ck,
    Toeplitz,
}

#[derive(Subcommand)]
enum Command {
    /// List the paths of length at most --max-len, vertices first.
    Paths {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Reduce a word in creation and annihilation letters to normal form.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// Letters separated by whitespace, e.g. "e1 e1*" or "e1.e2 v1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Ck)]
        mode: ModeArg,
    },
    /// Lattice path of a word and its *-axis verdict.
    Lattice {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Conditional expectation of a random variable.
    Expect {
        #[arg(long)]
        var: PathBuf,
    },
    /// n-th moment E(d1 a d2 a ... dn a); unit d's unless --d is given n times.
    Moment {
        #[arg(long)]
        var: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long = "d")]
        d: Vec<PathBuf>,
    },
    /// n-th cumulant by Möbius inversion over NC(n).
    Cumulant {
        #[arg(long)]
        var: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long = "d")]
        d: Vec<PathBuf>,
        /// Include the per-partition breakdown.
        #[arg(long)]
        contributions: bool,
    },
    /// Freeness of two variables: support certificate and bounded-order check.
    Free {
        #[arg(long)]
        var: PathBuf,
        #[arg(long)]
        var2: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
    /// Semicircular, even and R-diagonal verdicts up to --max-order.
    Classify {
        #[arg(long)]
        var: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
    /// Diagonal compression over a comma-separated vertex list.
    Compress {
        #[arg(long)]
        var: PathBuf,
        #[arg(long)]
        vertices: String,
    },
    /// Vertex-compressed moment series or R-transform coefficients.
    Series {
        #[arg(long)]
        var: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SeriesArg::Moment)]
        kind: SeriesArg,
    },
    /// Check operator relations on the truncated Fock space.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        trunc: usize,
    },
    /// Noncrossing partition counts and Möbius values up to n.
    NcDebug { n: usize },
}

fn run(command: Command) -> gwprob::Result<Output> {
    match command {
        Command::Paths { graph, max_len } => commands::paths(&graph, max_len),
        Command::Reduce { graph, word, mode } => {
            let mode = match mode {
                ModeArg::Ck => Mode::CuntzKrieger,
                ModeArg::Toeplitz => Mode::Toeplitz,
            };
            commands::reduce_word(&graph, &word, mode)
        }
        Command::Lattice { graph, word } => commands::lattice(&graph, &word),
        Command::Expect { var } => commands::expect(&var),
        Command::Moment { var, n, d } => commands::moment_cmd(&var, n, &d),
        Command::Cumulant {
            var,
            n,
            d,
            contributions,
        } => commands::cumulant_cmd(&var, n, &d, contributions),
        Command::Free {
            var,
            var2,
            max_order,
        } => commands::free(&var, &var2, max_order),
        Command::Classify { var, max_order } => commands::classify_cmd(&var, max_order),
        Command::Compress { var, vertices } => commands::compress_cmd(&var, &vertices),
        Command::Series {
            var,
            vertex,
            order,
            kind,
        } => commands::series(&var, &vertex, order, kind),
        Command::Oracle { graph, trunc } => commands::oracle(&graph, trunc),
        Command::NcDebug { n } => commands::nc_debug(n),
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
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", canonical(&out.json)),
                Format::Table => print!("{}", out.table),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 3 })
        }
    }
}
