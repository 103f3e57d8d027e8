use nalgebra::DMatrix;

use super::linalg::{self, check_psd};
use crate::error::{Error, Result};
use crate::realization::StateSpaceModel;

/// Eigenvalues must have real part below this to count as stable.
pub const STABILITY_MARGIN: f64 = -1e-10;

/// Nearest-float copy of a state space model. Conversion happens once, on
/// entry to the simulation layer.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatModel {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub c: DMatrix<f64>,
}

impl FloatModel {
    pub fn from_exact(ss: &StateSpaceModel) -> Self {
        FloatModel {
            a: ss.a().to_f64(),
            b: ss.b().to_f64(),
            c: ss.c().to_f64(),
        }
    }

    pub fn state_dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn input_dim(&self) -> usize {
        self.b.ncols()
    }

    pub fn output_dim(&self) -> usize {
        self.c.nrows()
    }

    pub fn is_stable(&self) -> bool {
        linalg::spectral_abscissa(&self.a) < STABILITY_MARGIN
    }

    /// `B Σ_L Bᵀ`.
    pub(crate) fn noise_cov(&self, sigma_l: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if sigma_l.shape() != (self.input_dim(), self.input_dim()) {
            return Err(Error::Dimension(format!(
                "driver covariance is {:?}, model has m = {}",
                sigma_l.shape(),
                self.input_dim()
            )));
        }
        check_psd(sigma_l, "driver covariance")?;
        Ok(linalg::symmetrize(
            &(&self.b * sigma_l * self.b.transpose()),
        ))
    }

    pub(crate) fn stationary_covariance(&self, sigma_l: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if !self.is_stable() {
            return Err(Error::Unstable);
        }
        let q = self.noise_cov(sigma_l)?;
        linalg::lyapunov(&self.a, &q)
    }
}

/// All eigenvalues of `A` have real part below `-1e-10`.
pub fn stability_check(ss: &StateSpaceModel) -> bool {
    FloatModel::from_exact(ss).is_stable()
}

pub use linalg::spectral_abscissa;

/// Stationary state covariance: the solution of `AΣ + ΣAᵀ = −BΣ_LBᵀ`.
pub fn stationary_covariance(ss: &StateSpaceModel, sigma_l: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    FloatModel::from_exact(ss).stationary_covariance(sigma_l)
}

/// Exact one-step discretization of the Gaussian state recursion.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianStep {
    /// `Φ = e^{Ah}`
    pub phi: DMatrix<f64>,
    /// `Σ_h = ∫₀^h e^{Au} BΣ_LBᵀ e^{Aᵀu} du`, symmetric PSD.
    pub cov: DMatrix<f64>,
}

pub fn gaussian_step_params(
    ss: &StateSpaceModel,
    sigma_l: &DMatrix<f64>,
    h: f64,
) -> Result<GaussianStep> {
    gaussian_step_float(&FloatModel::from_exact(ss), sigma_l, h)
}

pub(crate) fn gaussian_step_float(
    model: &FloatModel,
    sigma_l: &DMatrix<f64>,
    h: f64,
) -> Result<GaussianStep> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "step size must be positive, got {h}"
        )));
    }
    let q = model.noise_cov(sigma_l)?;
    let (phi, cov) = linalg::van_loan(&model.a, &q, h);
    Ok(GaussianStep {
        phi,
        cov: linalg::psd_floor(&cov),
    })
}
