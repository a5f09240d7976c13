//! `kostant`: centers of Kostant algebras, tensor linkage, verification and plot data.

mod center;
mod error;
mod plot;
mod tensor;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kostant_core::liecore::{RootSystem, Weight};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "kostant", version, about = "Exact centers of Kostant algebras and sl2 linkage data")]
pub struct Cli {
    /// Simple type, e.g. A1, A2, B2, G2.
    #[arg(long, global = true, default_value = "A1")]
    algebra: String,
    /// Highest weight μ as comma-separated integers in fundamental-weight coordinates.
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Weight λ as comma-separated rationals.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CenterCoords {
    Tilde,
    Rozhkovskaya,
    Graded,
    Components,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
    Properties,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Lines,
    CenterTilde,
    CenterRozhkovskaya,
    Graded,
    HcCategory,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Presentation of Spec Z^μ(g).
    Center {
        #[arg(long, value_enum)]
        coords: Option<CenterCoords>,
    },
    /// Same as `center --coords graded`.
    Graded,
    /// Linkage decomposition of M_λ ⊗ V^μ.
    Tensor,
    /// Golden checks or sampled property checks.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: Suite,
        /// JSON file replacing the built-in golden data.
        #[arg(long)]
        goldens: Option<PathBuf>,
    },
    /// Exact plot data as CSV (or JSON), optionally rendered to SVG.
    Plot {
        #[arg(long, value_enum)]
        figure: Figure,
        /// Parameter interval `a:b` with rational ends.
        #[arg(long, default_value = "-8:8", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 65)]
        samples: usize,
        /// Largest odd weight for `hc-category`.
        #[arg(long, default_value_t = 7)]
        cutoff: u32,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

impl Cli {
    fn root_system(&self) -> Result<RootSystem, CliError> {
        Ok(self.algebra.parse::<RootSystem>()?)
    }

    fn mu(&self, rs: &RootSystem) -> Result<Weight, CliError> {
        let text = self.mu.as_deref().ok_or_else(|| CliError::Usage("--mu is required".into()))?;
        let mu = Weight::parse(text)?;
        mu.check_rank(rs.rank())?;
        if !mu.is_dominant_integral() {
            return Err(CliError::Usage(format!("--mu {text} is not dominant integral")));
        }
        Ok(mu)
    }

    fn lambda(&self, rs: &RootSystem) -> Result<Weight, CliError> {
        let text = self.lambda.as_deref().ok_or_else(|| CliError::Usage("--lambda is required".into()))?;
        let lambda = Weight::parse(text)?;
        lambda.check_rank(rs.rank())?;
        Ok(lambda)
    }

    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Center { coords } => center::run(cli, *coords),
        Command::Graded => center::run(cli, Some(CenterCoords::Graded)),
        Command::Tensor => tensor::run(cli),
        Command::Verify { suite, goldens } => verify::run(cli, *suite, goldens.as_deref()),
        Command::Plot { figure, range, samples, cutoff, svg } => {
            plot::run(cli, &plot::PlotArgs { figure: *figure, range, samples: *samples, cutoff: *cutoff, svg: svg.as_deref() })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
