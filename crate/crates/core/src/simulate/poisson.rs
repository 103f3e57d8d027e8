//! Compound Poisson drivers with pathwise-exact propagation.
//!
//! Between jumps the state evolves as `X(t+s) = e^{As} X(t)`; at a jump
//! time `τ` it moves by `B·ΔL(τ)`. Outputs on the grid carry only
//! matrix-exponential rounding error, so two realizations of one transfer
//! function fed the same jumps agree to near machine precision.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::Exp;

use super::driver::{JumpDistribution, JumpSampler, LevyDriverSpec};
use super::linalg::expm;
use super::model::FloatModel;
use super::path::{InitialCondition, SamplePath, SimulationConfig};
use super::rng::{stream, STREAM_JUMP_SIZES, STREAM_JUMP_TIMES};
use crate::error::{Error, Result};
use crate::realization::StateSpaceModel;

/// One realized jump path on `[0, horizon]`.
#[derive(Clone, Debug, PartialEq)]
pub struct JumpPath {
    pub times: Vec<f64>,
    pub sizes: Vec<DVector<f64>>,
}

impl JumpPath {
    /// Draws arrival times (exponential gaps, stream 0) and sizes
    /// (stream 1) up to and including `horizon`.
    pub fn draw(rate: f64, jumps: &JumpDistribution, horizon: f64, seed: u64) -> Result<Self> {
        let gaps = Exp::new(rate).map_err(|e| Error::InvalidDriver(e.to_string()))?;
        let sampler = JumpSampler::new(jumps)?;
        let mut time_rng = stream(seed, STREAM_JUMP_TIMES);
        let mut size_rng = stream(seed, STREAM_JUMP_SIZES);
        let mut times = Vec::new();
        let mut sizes = Vec::new();
        let mut t = 0.0;
        loop {
            t += time_rng.sample(gaps);
            if t > horizon {
                break;
            }
            times.push(t);
            sizes.push(sampler.sample(&mut size_rng));
        }
        Ok(JumpPath { times, sizes })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Propagates one model through a shared jump path from `X(0) = 0`.
/// Jumps at `τ ≤ t_k` are included in `Y(t_k)`.
pub fn propagate_jump_path(
    ss: &StateSpaceModel,
    jumps: &JumpPath,
    cfg: &SimulationConfig,
) -> Result<SamplePath> {
    cfg.validate()?;
    let model = FloatModel::from_exact(ss);
    if let Some(size) = jumps.sizes.first() {
        if size.len() != model.input_dim() {
            return Err(Error::Dimension(format!(
                "jump dimension {} vs model m = {}",
                size.len(),
                model.input_dim()
            )));
        }
    }
    Ok(propagate(&model, jumps, cfg))
}

fn propagate(model: &FloatModel, jumps: &JumpPath, cfg: &SimulationConfig) -> SamplePath {
    let n = model.state_dim();
    let phi_h = expm(&(&model.a * cfg.step));
    let flow = |x: &DVector<f64>, dt: f64| -> DVector<f64> {
        if dt == 0.0 {
            x.clone()
        } else {
            expm(&(&model.a * dt)) * x
        }
    };
    let mut outputs = DMatrix::zeros(cfg.steps, model.output_dim());
    let mut states = cfg.record_states.then(|| DMatrix::zeros(cfg.steps, n));
    let mut x = DVector::zeros(n);
    let mut next = 0;
    let mut record = |k: usize, x: &DVector<f64>| {
        outputs.row_mut(k).copy_from(&(&model.c * x).transpose());
        if let Some(s) = states.as_mut() {
            s.row_mut(k).copy_from(&x.transpose());
        }
    };
    record(0, &x);
    for k in 1..cfg.steps {
        let (t0, t1) = (cfg.time(k - 1), cfg.time(k));
        if next >= jumps.len() || jumps.times[next] > t1 {
            x = &phi_h * &x;
        } else {
            let mut t = t0;
            while next < jumps.len() && jumps.times[next] <= t1 {
                let tau = jumps.times[next];
                x = flow(&x, tau - t);
                x += &model.b * &jumps.sizes[next];
                t = tau;
                next += 1;
            }
            x = flow(&x, t1 - t);
        }
        record(k, &x);
    }
    SamplePath {
        times: (0..cfg.steps).map(|k| cfg.time(k)).collect(),
        outputs,
        states,
    }
}

fn cp_parts(driver: &LevyDriverSpec) -> Result<(f64, &JumpDistribution)> {
    match driver {
        LevyDriverSpec::CompoundPoisson { rate, jumps } => Ok((*rate, jumps)),
        LevyDriverSpec::Brownian { .. } => Err(Error::InvalidDriver(
            "compound Poisson simulation needs a compound Poisson driver".into(),
        )),
    }
}

fn check_cfg(cfg: &SimulationConfig) -> Result<()> {
    cfg.validate()?;
    if cfg.init == InitialCondition::Stationary {
        return Err(Error::InvalidConfig(
            "stationary initial law is not available for compound Poisson drivers".into(),
        ));
    }
    Ok(())
}

/// Single-model compound Poisson path.
pub fn simulate_compound_poisson(
    ss: &StateSpaceModel,
    driver: &LevyDriverSpec,
    cfg: &SimulationConfig,
) -> Result<SamplePath> {
    check_cfg(cfg)?;
    driver.validate(ss.input_dim())?;
    let (rate, jumps) = cp_parts(driver)?;
    let path = JumpPath::draw(rate, jumps, cfg.time(cfg.steps - 1), cfg.seed)?;
    Ok(propagate(&FloatModel::from_exact(ss), &path, cfg))
}

/// Both models driven by one shared jump path.
pub fn simulate_compound_poisson_pair(
    ss1: &StateSpaceModel,
    ss2: &StateSpaceModel,
    driver: &LevyDriverSpec,
    cfg: &SimulationConfig,
) -> Result<(SamplePath, SamplePath)> {
    check_cfg(cfg)?;
    if ss1.input_dim() != ss2.input_dim() {
        return Err(Error::Dimension(format!(
            "driver dimensions differ: {} vs {}",
            ss1.input_dim(),
            ss2.input_dim()
        )));
    }
    driver.validate(ss1.input_dim())?;
    let (rate, jumps) = cp_parts(driver)?;
    let path = JumpPath::draw(rate, jumps, cfg.time(cfg.steps - 1), cfg.seed)?;
    Ok((
        propagate(&FloatModel::from_exact(ss1), &path, cfg),
        propagate(&FloatModel::from_exact(ss2), &path, cfg),
    ))
}
