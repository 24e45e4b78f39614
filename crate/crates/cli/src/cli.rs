use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use o2sim_core::dynamics::ComponentWeighting;
use o2sim_core::{EvolutionMode, MolecularConstants, MomentMethod, SignalModel};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "o2sim",
    version,
    about = "Magneto-rotational dynamics of O2 superrotors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeeman sublevel energies of one rotational manifold.
    Levels(LevelsArgs),
    /// Angular distribution of molecular axes on the sphere, with optional images.
    Distribution(DistributionArgs),
    /// Observables over a Cartesian grid of (N, B, t, theta_p).
    Scan(ScanArgs),
    /// Angular-momentum projection weights on the centrifuge axis.
    Raman(RamanArgs),
    /// Run the scans behind one of the published figures and check its qualitative claims.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Adiabatic,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightingArg {
    Equal,
    Degeneracy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MomentsArg {
    Coefficient,
    Quadrature,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// JSON file with molecular constants (defaults to the built-in O2 values).
    #[arg(long, value_name = "PATH")]
    pub constants: Option<PathBuf>,
    /// Time evolution: adiabatic J labels or exact block propagation.
    #[arg(long, value_enum, default_value = "adiabatic")]
    pub mode: ModeArg,
    /// Population of the three centrifuged J components.
    #[arg(long, value_enum, default_value = "equal")]
    pub weighting: WeightingArg,
}

impl ModelArgs {
    pub fn constants(&self) -> Result<MolecularConstants, CliError> {
        match &self.constants {
            Some(path) => Ok(MolecularConstants::from_json_file(path)?),
            None => Ok(MolecularConstants::oxygen()),
        }
    }

    pub fn model(&self) -> Result<SignalModel, CliError> {
        Ok(SignalModel {
            constants: self.constants()?,
            mode: match self.mode {
                ModeArg::Adiabatic => EvolutionMode::AdiabaticLabel,
                ModeArg::Exact => EvolutionMode::Exact,
            },
            weighting: match self.weighting {
                WeightingArg::Equal => ComponentWeighting::Equal,
                WeightingArg::Degeneracy => ComponentWeighting::Degeneracy,
            },
            ..SignalModel::default()
        })
    }
}

#[derive(Debug, Args)]
pub struct LevelsArgs {
    #[arg(long)]
    pub n: u32,
    /// Field in Tesla.
    #[arg(long = "b-field", default_value_t = 0.0, allow_negative_numbers = true)]
    pub b_field: f64,
    #[arg(long, value_name = "PATH")]
    pub constants: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DistributionArgs {
    #[arg(long)]
    pub n: u32,
    /// Field in Tesla.
    #[arg(long = "b-field", default_value_t = 0.0, allow_negative_numbers = true)]
    pub b_field: f64,
    /// Probe delay in ns.
    #[arg(long, default_value_t = 0.0)]
    pub time: f64,
    /// Quadrature grid as THETAxPHI.
    #[arg(long, default_value = "256x512")]
    pub grid: String,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Sphere-map CSV (theta, phi, rho); standard output when omitted.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Projected image as AXIS:PATH (PGM), repeatable.
    #[arg(long, value_name = "AXIS:PATH")]
    pub image: Vec<String>,
    /// Image width and height in pixels.
    #[arg(long, default_value_t = 256)]
    pub image_size: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Manifolds: list (13,33) or range (start:stop:step).
    #[arg(long)]
    pub n: String,
    /// Fields in Tesla: list or range.
    #[arg(long = "b-field", allow_hyphen_values = true)]
    pub b_field: String,
    /// Probe delays in ns: list or range, 1 ps resolution.
    #[arg(long)]
    pub time: String,
    /// Probe polarization angles from the field, radians or with a "deg" suffix.
    #[arg(long = "theta-p", default_value = "0", allow_hyphen_values = true)]
    pub theta_p: String,
    /// Gas pressure in atm.
    #[arg(long, default_value_t = 0.0)]
    pub pressure: f64,
    #[arg(long, default_value = "256x512")]
    pub grid: String,
    /// Moment evaluation path.
    #[arg(long, value_enum, default_value = "coefficient")]
    pub moments: MomentsArg,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct RamanArgs {
    #[arg(long)]
    pub n: String,
    #[arg(long = "b-field", allow_hyphen_values = true)]
    pub b_field: String,
    #[arg(long)]
    pub time: String,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Figure id: fig2, fig3b, fig3c, fig4a or fig4b.
    pub figure: String,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Directory for the CSV, PGM and JSON outputs.
    #[arg(long, value_name = "DIR", default_value = ".")]
    pub out: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

pub fn moment_method(arg: MomentsArg) -> MomentMethod {
    match arg {
        MomentsArg::Coefficient => MomentMethod::Coefficient,
        MomentsArg::Quadrature => MomentMethod::Quadrature,
    }
}
