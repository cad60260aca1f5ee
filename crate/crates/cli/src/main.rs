//! `flagsub`: face enumeration, subdivision checks and the γ-positivity
//! suite from the command line.
//!
//! Exit codes: 0 on success, 2 when a theorem-tier check fails, 3 on
//! malformed input, 1 otherwise.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use flagsub::FieldSpec;

#[derive(Parser)]
#[command(
    name = "flagsub",
    version,
    about = "Flag complexes, subdivisions and local h/γ-polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Grow a random flag sphere from the cross-polytope boundary.
    Generate {
        /// Facet size d; the sphere has dimension d - 1.
        #[arg(long = "dim")]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of edge-subdivide, join-s0.
        #[arg(long, default_value = "edge-subdivide")]
        moves: String,
        /// Also check that the result classifies as a sphere.
        #[arg(long)]
        verify: bool,
        /// Include the subdivision map onto the cross-polytope boundary.
        #[arg(long)]
        map: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run checks on generated instances.
    Suite {
        /// Comma-separated check names, or `all`, `theorem`, `conjecture`.
        #[arg(long, default_value = "gal,local-gamma,monotonicity,unimodality")]
        checks: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Facet sizes to cycle through, comma-separated.
        #[arg(long = "dim", default_value = "3")]
        dims: String,
        /// Upper bound on moves per instance.
        #[arg(long, default_value_t = 6)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated families; defaults to all.
        #[arg(long)]
        families: Option<String>,
        #[arg(long, default_value = "gf2")]
        field: FieldSpec,
        /// Run instances above the face guard.
        #[arg(long)]
        force: bool,
        /// Record per-check wall time (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Also write the TSV summary here.
        #[arg(long)]
        tsv: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// h-polynomial and f-vector of a complex.
    Hvec {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// γ-vector of a complex with symmetric h-polynomial.
    Gamma {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Local h-polynomial of a subdivision of a simplex.
    LocalH {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Local γ-vector of a subdivision of a simplex.
    LocalGamma {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Classify a complex as a homology sphere, ball or neither.
    Classify {
        file: PathBuf,
        #[arg(long, default_value = "gf2")]
        field: FieldSpec,
        #[command(flatten)]
        output: Output,
    },
    /// Validate a subdivision map and place it in the hierarchy.
    CheckSubdivision {
        file: PathBuf,
        /// Skip homology and check the axioms combinatorially.
        #[arg(long)]
        fast: bool,
        #[arg(long, default_value = "gf2")]
        field: FieldSpec,
        #[command(flatten)]
        output: Output,
    },
    /// Both sides of the decomposition of h over the base.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Map a flag sphere onto the cross-polytope boundary.
    SigmaMap {
        file: PathBuf,
        /// Ordered facet, comma-separated; defaults to the first facet.
        #[arg(long)]
        facet: Option<String>,
        /// Check the input is a homology sphere first.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value = "gf2")]
        field: FieldSpec,
        #[command(flatten)]
        output: Output,
    },
    /// Extend a subdivision of a simplex to one of the cross-polytope boundary.
    BallToSphere {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Print a named example subdivision.
    Fixture {
        name: Option<String>,
        /// List the available names.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Stellar subdivision of a complex on one face.
    Stellar {
        file: PathBuf,
        /// Comma-separated vertex names.
        #[arg(long)]
        face: String,
        /// Name of the new vertex.
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Barycentric subdivision of a simplex.
    Barycentric {
        /// Comma-separated vertex names.
        #[arg(long)]
        vertices: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compose `outer` with `inner`, where `inner` subdivides outer's total complex.
    Compose {
        outer: PathBuf,
        inner: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
