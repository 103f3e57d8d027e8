use std::fmt::Write as _;
use std::io::{self, Write};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InitialCondition {
    #[default]
    Zero,
    /// `X(0) ~ N(0, Σ_∞)`; Brownian drivers only.
    Stationary,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationConfig {
    /// Grid spacing `h`.
    pub step: f64,
    /// Number of grid points `t_k = k·h`, `k = 0..steps`.
    pub steps: usize,
    pub seed: u64,
    pub init: InitialCondition,
    /// Euler substeps per grid interval for shared-increment Brownian runs.
    pub euler_substeps: usize,
    pub record_states: bool,
}

impl SimulationConfig {
    pub fn new(step: f64, steps: usize, seed: u64) -> Self {
        SimulationConfig {
            step,
            steps,
            seed,
            init: InitialCondition::Zero,
            euler_substeps: 1,
            record_states: false,
        }
    }

    pub fn with_init(mut self, init: InitialCondition) -> Self {
        self.init = init;
        self
    }

    pub fn with_substeps(mut self, substeps: usize) -> Self {
        self.euler_substeps = substeps;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "step size must be positive, got {}",
                self.step
            )));
        }
        if self.steps == 0 {
            return Err(Error::InvalidConfig("need at least one grid point".into()));
        }
        if self.euler_substeps == 0 {
            return Err(Error::InvalidConfig(
                "euler_substeps must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.step
    }
}

/// Output on the grid: row `k` of `outputs` is `Y(t_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePath {
    pub times: Vec<f64>,
    pub outputs: DMatrix<f64>,
    pub states: Option<DMatrix<f64>>,
}

impl SamplePath {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn output_dim(&self) -> usize {
        self.outputs.ncols()
    }

    /// CSV with header `t,y1,…,yd` and 17 significant digits per value.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let mut line = String::from("t");
        for i in 1..=self.output_dim() {
            write!(line, ",y{i}").unwrap();
        }
        writeln!(w, "{line}")?;
        for (k, t) in self.times.iter().enumerate() {
            line.clear();
            write!(line, "{t:.16e}").unwrap();
            for v in self.outputs.row(k).iter() {
                write!(line, ",{v:.16e}").unwrap();
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("ascii output")
    }
}

/// `max |Y1 − Y2|` over all grid points and components.
pub fn sup_norm_gap(a: &SamplePath, b: &SamplePath) -> f64 {
    (&a.outputs - &b.outputs).amax()
}

/// Sup-norm gap divided by the larger sup-norm of the two outputs (zero
/// when both outputs vanish).
pub fn relative_sup_gap(a: &SamplePath, b: &SamplePath) -> f64 {
    let gap = sup_norm_gap(a, b);
    let scale = a.outputs.amax().max(b.outputs.amax());
    if scale == 0.0 {
        gap
    } else {
        gap / scale
    }
}
