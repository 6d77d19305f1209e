//! Command-line grammar.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "beamsplit",
    version,
    about = "Entanglement of beam-splitter outputs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Destination file, or `-` for standard output.
    #[arg(long, global = true, default_value = "-")]
    pub output: String,

    /// Output format; figures default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Report entropies in bits instead of nats.
    #[arg(long, global = true)]
    pub bits: bool,
}

impl Cli {
    pub fn output_path(&self) -> Option<PathBuf> {
        (self.output != "-").then(|| PathBuf::from(&self.output))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Splitter phase, in radians or in units of π.
#[derive(Debug, Clone, Copy, Args)]
pub struct Phase {
    /// Splitter phase φ in radians.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "phi_pi")]
    pub phi: Option<f64>,

    /// Splitter phase φ in units of π.
    #[arg(long = "phi-pi", allow_hyphen_values = true)]
    pub phi_pi: Option<f64>,
}

impl Phase {
    pub fn radians(&self) -> Result<f64, CliError> {
        let phi = match (self.phi, self.phi_pi) {
            (Some(p), _) => p,
            (None, Some(k)) => k * PI,
            (None, None) => 0.0,
        };
        finite("phi", phi)
    }
}

/// A parameter swept over an even grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVariable {
    Reflectance,
    S2,
    Nbar,
    S,
    /// Bounds given in units of π.
    Phi,
}

impl SweepVariable {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Reflectance => "R",
            Self::S2 => "s2",
            Self::Nbar => "nbar",
            Self::S => "s",
            Self::Phi => "phi",
        }
    }

    pub fn unit(&self) -> &'static str {
        match self {
            Self::Reflectance => "1",
            Self::S2 | Self::S => "1",
            Self::Nbar => "photons",
            Self::Phi => "rad",
        }
    }
}

/// Optional one-parameter sweep.
#[derive(Debug, Clone, Copy, Args)]
pub struct SweepArgs {
    /// Parameter to sweep; replaces its fixed value.
    #[arg(long, value_enum, requires_all = ["from", "to"])]
    pub sweep: Option<SweepVariable>,

    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<f64>,

    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<f64>,

    #[arg(long = "sweep-steps", default_value_t = 11)]
    pub sweep_steps: usize,
}

/// Evenly spaced points `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self, CliError> {
        if steps < 2 {
            return Err(CliError::usage("a sweep needs at least 2 steps"));
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(CliError::usage("a sweep needs finite bounds with lo < hi"));
        }
        Ok(Self { lo, hi, steps })
    }

    /// The `i`-th point; the last one is exactly `hi`.
    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            self.hi
        } else {
            self.lo + (self.hi - self.lo) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.steps).map(|i| self.point(i)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Two equally squeezed thermal states.
    #[value(name = "sq-thermal-pair")]
    SqThermalPair,
    /// Squeezed thermal state with vacuum.
    #[value(name = "sq-thermal+vacuum")]
    SqThermalVacuum,
    /// Squeezed vacuum with a thermal state.
    #[value(name = "sq-vacuum+thermal")]
    SqVacuumThermal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Output amplitudes and entanglement for Fock inputs |n1, n2⟩.
    #[command(allow_negative_numbers = true)]
    Fock {
        n1: usize,
        n2: usize,
        #[arg(long, default_value_t = 0.5)]
        reflectance: f64,
        #[command(flatten)]
        phase: Phase,
    },
    /// Entropy against reflectance for every input |k, N−k⟩.
    #[command(allow_negative_numbers = true)]
    Figure2 {
        /// Total photon number N.
        #[arg(long, default_value_t = 10)]
        total: usize,
        /// Reflectance grid points over [0, 1].
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[command(flatten)]
        phase: Phase,
    },
    /// Entropy surface over (s2, R) for squeezed-vacuum inputs.
    #[command(allow_negative_numbers = true)]
    Figure3 {
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        s1: f64,
        #[arg(long = "s2-min", default_value_t = 0.0, allow_hyphen_values = true)]
        s2_min: f64,
        #[arg(long = "s2-max", default_value_t = 1.0, allow_hyphen_values = true)]
        s2_max: f64,
        #[arg(long = "s2-steps", default_value_t = 21)]
        s2_steps: usize,
        /// Reflectance grid points over [0, 1].
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[command(flatten)]
        phase: Phase,
    },
    /// Entanglement of two squeezed-vacuum inputs.
    #[command(allow_negative_numbers = true)]
    Squeezed {
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        s1: f64,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        s2: f64,
        /// Squeezing phase of input a, radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        varphi1: f64,
        /// Squeezing phase of input b, radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        varphi2: f64,
        #[arg(long, default_value_t = 0.5)]
        reflectance: f64,
        #[command(flatten)]
        phase: Phase,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Separability verdict for a mixed Gaussian case study.
    #[command(allow_negative_numbers = true)]
    Gaussian {
        #[arg(long, value_enum)]
        preset: Preset,
        #[arg(long, default_value_t = 0.0)]
        nbar: f64,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, default_value_t = 0.5)]
        reflectance: f64,
        #[command(flatten)]
        phase: Phase,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

pub fn finite(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::usage(format!("{name} must be finite")))
    }
}

pub fn reflectance(r: f64) -> Result<f64, CliError> {
    if (0.0..=1.0).contains(&r) {
        Ok(r)
    } else {
        Err(CliError::usage("reflectance must lie in [0, 1]"))
    }
}

pub fn nbar(n: f64) -> Result<f64, CliError> {
    if n.is_finite() && n >= 0.0 {
        Ok(n)
    } else {
        Err(CliError::usage("nbar must be finite and non-negative"))
    }
}
