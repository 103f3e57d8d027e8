//! Second-order structure: autocovariances and the spectral density.

use std::f64::consts::PI;

use nalgebra::{Complex, DMatrix};

use super::linalg::expm;
use super::model::FloatModel;
use super::path::SamplePath;
use crate::error::{Error, Result};
use crate::exactalg::TransferFunction;
use crate::realization::StateSpaceModel;

/// Stationary output autocovariances `Γ(ℓh) = C e^{Aℓh} Σ_∞ Cᵀ`,
/// `ℓ = 0..=max_lag`, with `Γ(ℓh) = Cov(Y(t+ℓh), Y(t))`.
pub fn theoretical_autocov(
    ss: &StateSpaceModel,
    sigma_l: &DMatrix<f64>,
    h: f64,
    max_lag: usize,
) -> Result<Vec<DMatrix<f64>>> {
    let model = FloatModel::from_exact(ss);
    let sigma_inf = model.stationary_covariance(sigma_l)?;
    let phi = expm(&(&model.a * h));
    let ct = model.c.transpose();
    let mut prop = DMatrix::identity(model.state_dim(), model.state_dim());
    let mut out = Vec::with_capacity(max_lag + 1);
    for _ in 0..=max_lag {
        out.push(&model.c * &prop * &sigma_inf * &ct);
        prop = &phi * prop;
    }
    Ok(out)
}

/// Mean-centered autocovariances with divisor `n`:
/// `Γ̂(ℓ) = (1/n) Σ_{k=0}^{n-1-ℓ} (Y_{k+ℓ} − Ȳ)(Y_k − Ȳ)ᵀ`.
///
/// Negative lags follow from `Γ̂(−ℓ) = Γ̂(ℓ)ᵀ`.
pub fn empirical_autocov(path: &SamplePath, max_lag: usize) -> Result<Vec<DMatrix<f64>>> {
    let n = path.outputs.nrows();
    if max_lag >= n {
        return Err(Error::InvalidConfig(format!(
            "max lag {max_lag} needs more than {n} samples"
        )));
    }
    let mean = path.outputs.row_mean();
    let centered = DMatrix::from_fn(n, path.outputs.ncols(), |i, j| {
        path.outputs[(i, j)] - mean[j]
    });
    Ok((0..=max_lag)
        .map(|lag| {
            let later = centered.rows(lag, n - lag);
            let earlier = centered.rows(0, n - lag);
            later.transpose() * earlier / n as f64
        })
        .collect())
}

/// `f(ω) = H(iω) Σ_L H(iω)* / 2π`.
pub fn spectral_density(
    h: &TransferFunction,
    sigma_l: &DMatrix<f64>,
    omega: f64,
) -> Result<DMatrix<Complex<f64>>> {
    let (d, m) = h.shape();
    if sigma_l.shape() != (m, m) {
        return Err(Error::Dimension(format!(
            "driver covariance is {:?}, transfer function has m = {m}",
            sigma_l.shape()
        )));
    }
    let vals = h
        .eval_complex(Complex::new(0.0, omega))
        .ok_or(Error::PoleOnEvaluationAxis(omega))?;
    let hm = DMatrix::from_row_slice(d, m, &vals);
    let sig = sigma_l.map(|v| Complex::new(v, 0.0));
    let f = &hm * sig * hm.adjoint() / Complex::new(2.0 * PI, 0.0);
    // exact Hermitian symmetry
    Ok((&f + f.adjoint()) * Complex::new(0.5, 0.0))
}
