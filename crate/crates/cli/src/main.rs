mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use config::JobConfig;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] doublealg::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(doublealg::Error::Parse(_) | doublealg::Error::InvalidArgument(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Multiset,
    Set,
    Both,
}

#[derive(Parser, Debug)]
#[command(name = "doublealg", version, about = "Drinfeld doubles, fusion rules and their quadratic module algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Degree bound, overriding `[limits] degree`.
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// Parameter overrides such as `alpha=-1,u2=i`.
    #[arg(long, global = true)]
    params: Option<String>,
    /// Seed for sampled property checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the simple modules of D(G).
    Simples { group: String },
    /// Decompose V_i ⊗ V_j.
    Fuse { group: String, i: usize, j: usize },
    /// The S-matrix of D(G).
    Smatrix { group: String },
    /// Census of minimal inner-faithful sums, or the closure of one sum.
    FaithfulSearch {
        group: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Both)]
        convention: ConventionArg,
        /// Comma-separated simple indices to test instead of a census.
        #[arg(long)]
        sum: Option<String>,
    },
    /// Build or check a featured algebra.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Superpotential from the dual top form.
    Superpotential { config: PathBuf },
    /// Homological determinant on the group generators.
    Hdet { config: PathBuf },
    /// Nakayama automorphism on the generators.
    Nakayama { config: PathBuf },
    /// The invariant ring of the order-eight family.
    Invariants {
        #[command(subcommand)]
        action: InvariantAction,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraAction {
    Build { config: PathBuf },
    Check { config: PathBuf },
}

#[derive(Args, Debug)]
struct OptionalConfig {
    /// Config supplying `[params]`; defaults apply without one.
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum InvariantAction {
    /// Basis of the invariants of one degree.
    Basis {
        #[command(flatten)]
        cfg: OptionalConfig,
    },
    /// The seventeen generators, optionally verified.
    Generators {
        #[command(flatten)]
        cfg: OptionalConfig,
        #[arg(long)]
        verify: bool,
    },
    /// Orbit sum of one exponent vector.
    OrbitSum {
        #[command(flatten)]
        cfg: OptionalConfig,
        #[arg(long)]
        exponent: String,
    },
}

fn load(path: Option<&PathBuf>, cli: &Cli) -> Result<JobConfig, CliError> {
    let mut cfg = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
            JobConfig::parse(&text)?
        }
        None => JobConfig::default(),
    };
    if let Some(p) = &cli.params {
        cfg.override_params(p)?;
    }
    if let Some(d) = cli.degree {
        cfg.set_degree(d);
    }
    Ok(cfg)
}

fn dispatch(cli: &Cli) -> Result<output::Output, CliError> {
    match &cli.command {
        Command::Simples { group } => commands::simples(group),
        Command::Fuse { group, i, j } => commands::fuse(group, *i, *j),
        Command::Smatrix { group } => commands::smatrix(group),
        Command::FaithfulSearch { group, convention, sum } => commands::faithful_search(group, *convention, sum.as_deref()),
        Command::Algebra { action: AlgebraAction::Build { config } } => commands::algebra_build(&load(Some(config), cli)?),
        Command::Algebra { action: AlgebraAction::Check { config } } => commands::algebra_check(&load(Some(config), cli)?, cli.seed),
        Command::Superpotential { config } => commands::superpotential(&load(Some(config), cli)?),
        Command::Hdet { config } => commands::hdet(&load(Some(config), cli)?),
        Command::Nakayama { config } => commands::nakayama(&load(Some(config), cli)?),
        Command::Invariants { action } => match action {
            InvariantAction::Basis { cfg } => commands::invariant_basis(&load(cfg.config.as_ref(), cli)?),
            InvariantAction::Generators { cfg, verify } => commands::invariant_generators(&load(cfg.config.as_ref(), cli)?, *verify),
            InvariantAction::OrbitSum { cfg, exponent } => commands::orbit_sum(&load(cfg.config.as_ref(), cli)?, exponent),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Table => print!("{}", out.text),
                Format::Json => println!("{}", out.render_json()),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
