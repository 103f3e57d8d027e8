use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "mcarma",
    version,
    about = "Exact transfer functions, canonical realizations and simulation of linear state space / MCARMA models",
    after_help = "Exit codes: 0 ok, 1 distinct, 2 parse/usage, 3 dimensions, 4 zero or degenerate transfer function, \
                  5 unstable, 6 pole on the imaginary axis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact transfer function H(z) = C(zI - A)^-1 B as a JSON report.
    Tf {
        model: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Observer or controller canonical form and its matrix fraction description.
    Canonical {
        model: PathBuf,
        #[arg(long, value_enum)]
        form: Form,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the canonical form as a state space model file.
        #[arg(long)]
        model_out: Option<PathBuf>,
    },
    /// Decide whether two models have the same transfer function.
    CheckEquiv {
        model1: PathBuf,
        model2: PathBuf,
        /// Also run a shared-path simulation and report the output gap.
        #[arg(long, value_enum)]
        simulate: Option<EquivSimulation>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long, default_value_t = 0.05)]
        h: f64,
        /// Jump rate of the compound Poisson driver (standard Gaussian jumps).
        #[arg(long, default_value_t = 2.0)]
        rate: f64,
        /// Write a JSON report with the verdict.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Simulate the output process on a regular grid and write it as CSV.
    Simulate {
        model: PathBuf,
        #[arg(long, value_enum)]
        driver: Driver,
        /// Brownian covariance: `identity` or a JSON matrix file.
        #[arg(long, default_value = "identity")]
        sigma: String,
        /// Compound Poisson jump rate.
        #[arg(long, default_value_t = 1.0)]
        rate: f64,
        /// Compound Poisson jump law: `gaussian` (standard) or `atoms:<file>`.
        #[arg(long, default_value = "gaussian")]
        jump: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        h: f64,
        #[arg(long, value_enum, default_value_t = Init::Zero)]
        init: Init,
        /// Output CSV; a `<out>.meta.json` sidecar echoes the configuration.
        #[arg(long)]
        out: PathBuf,
    },
    /// Spectral density f(w) = H(iw) S H(iw)* / 2pi at the given frequencies, as CSV.
    Spectrum {
        model: PathBuf,
        /// Driver covariance: `identity` or a JSON matrix file.
        #[arg(long, default_value = "identity")]
        sigma: String,
        /// Comma-separated angular frequencies.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        omegas: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Observer,
    Controller,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivSimulation {
    Cp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Driver {
    Brownian,
    Cp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Init {
    Zero,
    Stationary,
}
