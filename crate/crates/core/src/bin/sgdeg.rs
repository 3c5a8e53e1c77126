use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use subgroup_degree::app::{run, BoundsClaim, Command, InputSource, OutputFormat, RunConfig};
use subgroup_degree::bounds::ShapeReading;
use subgroup_degree::{MaxConvention, DEFAULT_MAX_NODES, DEFAULT_MAX_ORDER};

/// Subgroup lattices and commutativity degrees of finite groups.
#[derive(Parser)]
#[command(name = "sgdeg", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Group descriptor, e.g. S4, D6, Z:2,4, S3xC5
    #[arg(long, global = true, conflicts_with = "input")]
    group: Option<String>,
    /// JSON group file (cayley, permutation or named)
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// raw | closed
    #[arg(long, global = true, default_value = "raw")]
    convention: MaxConvention,
    /// table | json | csv
    #[arg(long, global = true, default_value = "table")]
    format: OutputFormat,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: usize,
    /// Directory for cached subgroup lattices
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Include S6 in catalog runs
    #[arg(long, global = true)]
    stretch: bool,
    /// strict | relaxed
    #[arg(long, global = true, default_value = "strict")]
    theorem1_reading: ShapeReading,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, structure flags, Fitting subgroup and its centraliser
    Info,
    /// Every subgroup with its sublattice memberships
    Lattice,
    /// sd, spd and d
    Degrees,
    /// Lower-bound checks
    Bounds {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(BoundsClaim::NAMES))]
        claim: String,
        /// Node index of the normal subgroup N (see `lattice`)
        #[arg(long)]
        normal: Option<usize>,
        /// Node index of the complement H
        #[arg(long)]
        complement: Option<usize>,
    },
    /// mu(1, G) against the closed forms for symmetric groups
    Moebius,
    /// Degree reports for the whole catalog
    Batch,
    /// Run every check against the catalog
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let command = match cli.command {
        Cmd::Info => Command::Info,
        Cmd::Lattice => Command::Lattice,
        Cmd::Degrees => Command::Degrees,
        Cmd::Bounds { claim, normal, complement } => Command::Bounds {
            claim: claim.parse().expect("restricted by clap"),
            normal,
            complement,
        },
        Cmd::Moebius => Command::Moebius,
        Cmd::Batch => Command::Batch,
        Cmd::VerifyPaper => Command::VerifyPaper,
    };
    let o = cli.opts;
    let source = match (o.group, o.input) {
        (Some(g), _) => InputSource::Named(g),
        (None, Some(p)) => InputSource::File(p),
        (None, None) => InputSource::None,
    };
    let cfg = RunConfig {
        source,
        command,
        convention: o.convention,
        format: o.format,
        max_order: o.max_order,
        max_nodes: o.max_nodes,
        cache_dir: o.cache,
        stretch: o.stretch,
        reading: o.theorem1_reading,
    };
    match run(&cfg) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.output);
            if out.success {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
