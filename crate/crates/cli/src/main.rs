mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact convex geometry over ordered hyperfields.
#[derive(Parser, Debug)]
#[command(name = "hyperconvex", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArg {
    /// Instance: S, K, Q, H5, T@Q, TR@Q, QxZ, QxQ, SxQ, table:<path>. Falls
    /// back to the tag of the first literal, e.g. "TR:(+1@0,0)".
    #[arg(long = "hyperfield")]
    pub hyperfield: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Convex (or conic) hull of a finite point set over a finite instance.
    Hull {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        points: String,
        #[arg(long)]
        conic: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Whether `query` lies in the convex hull of `points`.
    Member {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        points: String,
        #[arg(long)]
        query: String,
        /// Over Q⋊G, retry non-generic systems under every row order (≤ 6 rows).
        #[arg(long)]
        try_row_orders: bool,
    },
    /// Separate `query` from the hull of `points` by a halfspace.
    Separate {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        points: String,
        #[arg(long)]
        query: String,
        /// Look for a closed halfspace (finite instances).
        #[arg(long)]
        closed: bool,
    },
    /// Whether a point lies in the open or closed halfspace or the variety of a form.
    Halfspace {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        form: String,
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = Query::Open)]
        query: Query,
    },
    /// Hemispace containing `a` and avoiding `b`.
    Kakutani {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Fourier–Motzkin elimination on a system file.
    Fm {
        /// System file: `instance: <spec>` then one inequality per line.
        system: PathBuf,
        /// Eliminate the last k variables and print the reduced system.
        #[arg(long, group = "action")]
        eliminate: Option<usize>,
        /// Decide feasibility and print a solution when there is one.
        #[arg(long, group = "action")]
        feasible: bool,
        /// Print a kernel vector or a separator.
        #[arg(long, group = "action")]
        farkas: bool,
        /// Re-check a certificate printed by `--farkas`.
        #[arg(long, group = "action", value_name = "CERT")]
        verify: Option<PathBuf>,
        #[arg(long)]
        try_row_orders: bool,
    },
    /// Check the hyperfield axioms of a finite instance exhaustively.
    CheckAxioms {
        /// S, K, H5 or table:<path>.
        #[arg(long = "hyperfield")]
        hyperfield: String,
    },
    /// Run a theorem suite or a seeded random cross-check.
    Suite {
        #[arg(long, value_enum)]
        name: SuiteName,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long = "hyperfield", default_value = "S")]
        hyperfield: String,
        /// Overridden by HYPERCONVEX_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 1 runs sequentially, 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Largest generating set tried by the Carathéodory suite.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// SVG schematic of point sets in H² over a finite instance.
    Plot {
        #[command(flatten)]
        instance: InstanceArg,
        /// NAME=POINTS, repeatable; POINTS may be empty.
        #[arg(long = "set")]
        sets: Vec<String>,
        /// Also draw the convex hull of every set.
        #[arg(long)]
        hulls: bool,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    /// Point list in literal syntax, ready for `--points`.
    Literal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Query {
    Open,
    Closed,
    Variety,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Radon,
    Helly,
    Caratheodory,
    Pasch,
    Kakutani,
    Farkas,
    Separation,
    FmSoundness,
}

/// Usage errors, distinct from domain errors (1) and failed checks (2).
const EXIT_USAGE: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
