//! Brownian-driven simulation: exact Gaussian discretization for single
//! models and shared-increment Euler–Maruyama for model pairs.

use nalgebra::{DMatrix, DVector};

use super::linalg::{check_psd, psd_factor};
use super::model::{gaussian_step_float, FloatModel};
use super::path::{InitialCondition, SamplePath, SimulationConfig};
use super::rng::{standard_normal_vector, stream, STREAM_GAUSSIAN, STREAM_INITIAL};
use crate::error::{Error, Result};
use crate::realization::StateSpaceModel;

fn initial_state(
    model: &FloatModel,
    sigma_l: &DMatrix<f64>,
    cfg: &SimulationConfig,
) -> Result<DVector<f64>> {
    match cfg.init {
        InitialCondition::Zero => Ok(DVector::zeros(model.state_dim())),
        InitialCondition::Stationary => {
            let cov = model.stationary_covariance(sigma_l)?;
            let mut rng = stream(cfg.seed, STREAM_INITIAL);
            let factor = psd_factor(&cov);
            Ok(&factor * standard_normal_vector(&mut rng, factor.ncols()))
        }
    }
}

struct Recorder {
    outputs: DMatrix<f64>,
    states: Option<DMatrix<f64>>,
}

impl Recorder {
    fn new(cfg: &SimulationConfig, d: usize, n: usize) -> Self {
        Recorder {
            outputs: DMatrix::zeros(cfg.steps, d),
            states: cfg.record_states.then(|| DMatrix::zeros(cfg.steps, n)),
        }
    }

    fn record(&mut self, k: usize, model: &FloatModel, x: &DVector<f64>) {
        let y = &model.c * x;
        self.outputs.row_mut(k).copy_from(&y.transpose());
        if let Some(s) = self.states.as_mut() {
            s.row_mut(k).copy_from(&x.transpose());
        }
    }

    fn finish(self, cfg: &SimulationConfig) -> SamplePath {
        SamplePath {
            times: (0..cfg.steps).map(|k| cfg.time(k)).collect(),
            outputs: self.outputs,
            states: self.states,
        }
    }
}

/// `X_{k+1} = Φ X_k + ξ_k`, `ξ_k ~ N(0, Σ_h)` i.i.d., `Y_k = C X_k`.
///
/// Bit-reproducible for a given `(model, Σ_L, cfg)`.
pub fn simulate_brownian(
    ss: &StateSpaceModel,
    sigma_l: &DMatrix<f64>,
    cfg: &SimulationConfig,
) -> Result<SamplePath> {
    cfg.validate()?;
    let model = FloatModel::from_exact(ss);
    let step = gaussian_step_float(&model, sigma_l, cfg.step)?;
    let factor = psd_factor(&step.cov);
    let mut x = initial_state(&model, sigma_l, cfg)?;
    let mut rng = stream(cfg.seed, STREAM_GAUSSIAN);
    let mut rec = Recorder::new(cfg, model.output_dim(), model.state_dim());
    rec.record(0, &model, &x);
    for k in 1..cfg.steps {
        x = &step.phi * &x + &factor * standard_normal_vector(&mut rng, factor.ncols());
        rec.record(k, &model, &x);
    }
    Ok(rec.finish(cfg))
}

/// Brownian increments on a fine grid of step `h / substeps`, stored one
/// column per fine step.
#[derive(Clone, Debug, PartialEq)]
pub struct BrownianIncrements {
    pub step: f64,
    pub substeps: usize,
    pub increments: DMatrix<f64>,
}

impl BrownianIncrements {
    /// Draws `N(0, Σ_L·dt)` increments for `steps − 1` grid intervals from
    /// the Gaussian stream of `seed`.
    pub fn draw(
        sigma_l: &DMatrix<f64>,
        step: f64,
        steps: usize,
        substeps: usize,
        seed: u64,
    ) -> Result<Self> {
        check_psd(sigma_l, "driver covariance")?;
        if substeps == 0 {
            return Err(Error::InvalidConfig(
                "euler_substeps must be at least 1".into(),
            ));
        }
        let m = sigma_l.nrows();
        let total = steps.saturating_sub(1) * substeps;
        let dt = step / substeps as f64;
        let factor = psd_factor(sigma_l) * dt.sqrt();
        let mut rng = stream(seed, STREAM_GAUSSIAN);
        let mut increments = DMatrix::zeros(m, total);
        for j in 0..total {
            increments.set_column(j, &(&factor * standard_normal_vector(&mut rng, m)));
        }
        Ok(BrownianIncrements {
            step,
            substeps,
            increments,
        })
    }

    pub fn dim(&self) -> usize {
        self.increments.nrows()
    }

    /// The same Brownian path seen on a grid with `substeps / factor`
    /// substeps: consecutive blocks of `factor` increments are summed.
    pub fn coarsen(&self, factor: usize) -> Result<Self> {
        if factor == 0 || !self.substeps.is_multiple_of(factor) {
            return Err(Error::InvalidConfig(format!(
                "cannot coarsen {} substeps by a factor of {factor}",
                self.substeps
            )));
        }
        let cols = self.increments.ncols() / factor;
        let increments = DMatrix::from_fn(self.dim(), cols, |i, j| {
            self.increments.row(i).columns(j * factor, factor).sum()
        });
        Ok(BrownianIncrements {
            step: self.step,
            substeps: self.substeps / factor,
            increments,
        })
    }
}

/// Euler–Maruyama `x ← (I + dt·A) x + B ΔL` from `X(0) = 0`, reporting
/// `Y` on the coarse grid.
pub fn integrate_euler(ss: &StateSpaceModel, path: &BrownianIncrements) -> Result<SamplePath> {
    let model = FloatModel::from_exact(ss);
    if model.input_dim() != path.dim() {
        return Err(Error::Dimension(format!(
            "increments have dimension {}, model has m = {}",
            path.dim(),
            model.input_dim()
        )));
    }
    Ok(euler(&model, path))
}

fn euler(model: &FloatModel, path: &BrownianIncrements) -> SamplePath {
    let substeps = path.substeps;
    let steps = path.increments.ncols() / substeps + 1;
    let dt = path.step / substeps as f64;
    let n = model.state_dim();
    let drift = DMatrix::identity(n, n) + &model.a * dt;
    let cfg = SimulationConfig::new(path.step, steps, 0);
    let mut rec = Recorder::new(&cfg, model.output_dim(), n);
    let mut x = DVector::zeros(n);
    rec.record(0, model, &x);
    for k in 1..steps {
        for j in (k - 1) * substeps..k * substeps {
            x = &drift * &x + &model.b * path.increments.column(j);
        }
        rec.record(k, model, &x);
    }
    rec.finish(&cfg)
}

/// Integrates both models with Euler–Maruyama on a fine grid of step
/// `h / euler_substeps`, feeding both the identical Brownian increments.
///
/// Both start from `X(0) = 0`; a stationary start cannot be shared between
/// different state spaces.
pub fn simulate_shared_brownian_pair(
    ss1: &StateSpaceModel,
    ss2: &StateSpaceModel,
    sigma_l: &DMatrix<f64>,
    cfg: &SimulationConfig,
) -> Result<(SamplePath, SamplePath)> {
    cfg.validate()?;
    if ss1.input_dim() != ss2.input_dim() {
        return Err(Error::Dimension(format!(
            "driver dimensions differ: {} vs {}",
            ss1.input_dim(),
            ss2.input_dim()
        )));
    }
    if cfg.init == InitialCondition::Stationary {
        return Err(Error::InvalidConfig(
            "shared-path runs start from X(0) = 0".into(),
        ));
    }
    let m = ss1.input_dim();
    if sigma_l.shape() != (m, m) {
        return Err(Error::Dimension(format!(
            "driver covariance is {:?}, model has m = {m}",
            sigma_l.shape()
        )));
    }
    let path =
        BrownianIncrements::draw(sigma_l, cfg.step, cfg.steps, cfg.euler_substeps, cfg.seed)?;
    Ok((
        euler(&FloatModel::from_exact(ss1), &path),
        euler(&FloatModel::from_exact(ss2), &path),
    ))
}
