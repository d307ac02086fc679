use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lhydro::config::{parse_config, RunConfig};
use lhydro::{driver, Error};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Lattice hydrodynamics on the side-2h cubical chain complex of a periodic
/// 3-torus.
#[derive(Parser)]
#[command(name = "lhydro", version)]
struct Cli {
    /// `key = value` run configuration; defaults apply when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Overrides `out_dir` from the configuration.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the chain-complex identities, harmonic ranks, Hodge
    /// decomposition and model operators; exit 1 on any failure.
    Verify {
        /// Overrides `n` from the configuration.
        #[arg(long)]
        n: Option<usize>,
        /// Flips the edge/face duality sign (negative control).
        #[arg(long, hide = true)]
        corrupt_star: bool,
    },
    /// Integrate to `t_end`, writing diagnostics.csv and snapshots.
    Simulate,
    /// Print the Hodge norms and divergence of a snapshot field.
    Decompose {
        #[arg(long, value_name = "PATH")]
        snapshot: PathBuf,
    },
    /// Print the effective configuration in canonical form.
    Config,
}

fn load(cli: &Cli) -> Result<RunConfig, Error> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
                line: 0,
                message: format!("{}: {e}", path.display()),
            })?;
            parse_config(&text)?
        }
        None => RunConfig::default(),
    };
    if let Some(out) = &cli.out {
        config.out_dir = out.clone();
    }
    Ok(config)
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Config { .. }
        | Error::Snapshot { .. }
        | Error::InvalidExtent(_)
        | Error::InvalidSpacing(_)
        | Error::InvalidOptions(_)
        | Error::TooLargeForDense { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let mut config = load(cli)?;
    match &cli.command {
        Command::Verify { n, corrupt_star } => {
            if let Some(n) = n {
                config.n = *n;
                config.lattice()?;
            }
            let report = driver::verify(&config, *corrupt_star)?;
            print!("{report}");
            Ok(if report.all_passed() { 0 } else { EXIT_FAILURE })
        }
        Command::Simulate => {
            let s = driver::simulate(&config)?;
            println!(
                "steps {} dt {:e} rows {} max |∂u|/|u| {:e} out {}",
                s.steps,
                s.dt,
                s.rows.len(),
                s.max_relative_divergence,
                config.out_dir.display()
            );
            Ok(0)
        }
        Command::Decompose { snapshot } => {
            print!("{}", driver::decompose(&config, snapshot)?);
            Ok(0)
        }
        Command::Config => {
            print!("{}", config.to_text());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("lhydro: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
