use nalgebra::{DMatrix, DVector};

use super::linalg::{check_psd, psd_factor};
use crate::error::{Error, Result};

/// Jump-size law of a compound Poisson driver.
#[derive(Clone, Debug, PartialEq)]
pub enum JumpDistribution {
    Gaussian {
        mean: DVector<f64>,
        cov: DMatrix<f64>,
    },
    /// Finitely many jump vectors with probabilities summing to one.
    Atoms {
        atoms: Vec<DVector<f64>>,
        probs: Vec<f64>,
    },
}

impl JumpDistribution {
    pub fn standard_gaussian(m: usize) -> Self {
        JumpDistribution::Gaussian {
            mean: DVector::zeros(m),
            cov: DMatrix::identity(m, m),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            JumpDistribution::Gaussian { mean, .. } => mean.len(),
            JumpDistribution::Atoms { atoms, .. } => atoms.first().map_or(0, |a| a.len()),
        }
    }
}

/// The driving Lévy process `L`.
#[derive(Clone, Debug, PartialEq)]
pub enum LevyDriverSpec {
    /// Brownian motion with covariance `Σ_L` per unit time.
    Brownian { sigma: DMatrix<f64> },
    /// Compound Poisson with `rate` jumps per unit time.
    CompoundPoisson { rate: f64, jumps: JumpDistribution },
}

impl LevyDriverSpec {
    pub fn dim(&self) -> usize {
        match self {
            LevyDriverSpec::Brownian { sigma } => sigma.nrows(),
            LevyDriverSpec::CompoundPoisson { jumps, .. } => jumps.dim(),
        }
    }

    /// Checks the driver invariants and that its dimension is `m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        if self.dim() != m {
            return Err(Error::Dimension(format!(
                "driver has dimension {}, model has m = {m}",
                self.dim()
            )));
        }
        match self {
            LevyDriverSpec::Brownian { sigma } => check_psd(sigma, "Brownian covariance"),
            LevyDriverSpec::CompoundPoisson { rate, jumps } => {
                if !(*rate > 0.0 && rate.is_finite()) {
                    return Err(Error::InvalidDriver(format!(
                        "jump rate must be positive, got {rate}"
                    )));
                }
                match jumps {
                    JumpDistribution::Gaussian { mean, cov } => {
                        if cov.shape() != (m, m) || mean.iter().any(|v| !v.is_finite()) {
                            return Err(Error::InvalidDriver("malformed Gaussian jump law".into()));
                        }
                        check_psd(cov, "jump covariance")
                    }
                    JumpDistribution::Atoms { atoms, probs } => {
                        if atoms.is_empty() || atoms.len() != probs.len() {
                            return Err(Error::InvalidDriver(
                                "atoms and probabilities must pair up".into(),
                            ));
                        }
                        if atoms
                            .iter()
                            .any(|a| a.len() != m || a.iter().any(|v| !v.is_finite()))
                        {
                            return Err(Error::InvalidDriver(format!(
                                "every atom must be a finite {m}-vector"
                            )));
                        }
                        if probs.iter().any(|&p| p.is_nan() || p < 0.0) {
                            return Err(Error::InvalidDriver(
                                "atom probabilities must be nonnegative".into(),
                            ));
                        }
                        let total: f64 = probs.iter().sum();
                        if (total - 1.0).abs() > 1e-12 {
                            return Err(Error::InvalidDriver(format!(
                                "atom probabilities sum to {total}"
                            )));
                        }
                        Ok(())
                    }
                }
            }
        }
    }
}

/// Precomputed sampler state for a jump law.
pub(crate) enum JumpSampler {
    Gaussian {
        mean: DVector<f64>,
        factor: DMatrix<f64>,
    },
    Atoms {
        atoms: Vec<DVector<f64>>,
        index: rand::distr::weighted::WeightedIndex<f64>,
    },
}

impl JumpSampler {
    pub(crate) fn new(jumps: &JumpDistribution) -> Result<Self> {
        Ok(match jumps {
            JumpDistribution::Gaussian { mean, cov } => JumpSampler::Gaussian {
                mean: mean.clone(),
                factor: psd_factor(cov),
            },
            JumpDistribution::Atoms { atoms, probs } => JumpSampler::Atoms {
                atoms: atoms.clone(),
                index: rand::distr::weighted::WeightedIndex::new(probs)
                    .map_err(|e| Error::InvalidDriver(e.to_string()))?,
            },
        })
    }

    pub(crate) fn sample(&self, rng: &mut impl rand::Rng) -> DVector<f64> {
        use rand::distr::Distribution;
        match self {
            JumpSampler::Gaussian { mean, factor } => {
                mean + factor * super::rng::standard_normal_vector(rng, factor.ncols())
            }
            JumpSampler::Atoms { atoms, index } => atoms[index.sample(rng)].clone(),
        }
    }
}
