//! Dense double-precision helpers: matrix exponential, Van Loan integrals,
//! continuous Lyapunov solves and PSD square-root factors.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// `e^M` by Padé approximation with scaling and squaring (nalgebra).
pub fn expm(m: &DMatrix<f64>) -> DMatrix<f64> {
    m.clone().exp()
}

/// Largest real part among the eigenvalues of `a`.
pub fn spectral_abscissa(a: &DMatrix<f64>) -> f64 {
    a.complex_eigenvalues()
        .iter()
        .map(|l| l.re)
        .fold(f64::NEG_INFINITY, f64::max)
}

pub fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

/// Symmetrizes `m` and clamps negative eigenvalues to zero. Eigenvalues
/// below `-1e-12·‖m‖` signal a genuinely indefinite input.
pub fn psd_floor(m: &DMatrix<f64>) -> DMatrix<f64> {
    let s = symmetrize(m);
    let eig = SymmetricEigen::new(s.clone());
    if eig.eigenvalues.iter().all(|&l| l >= 0.0) {
        return s;
    }
    let clamped = eig.eigenvalues.map(|l| l.max(0.0));
    &eig.eigenvectors * DMatrix::from_diagonal(&clamped) * eig.eigenvectors.transpose()
}

/// `L` with `L Lᵀ = m` for a symmetric PSD `m`, via the eigendecomposition
/// (works for singular covariances where Cholesky does not).
pub fn psd_factor(m: &DMatrix<f64>) -> DMatrix<f64> {
    let eig = SymmetricEigen::new(symmetrize(m));
    let roots = eig.eigenvalues.map(|l| l.max(0.0).sqrt());
    &eig.eigenvectors * DMatrix::from_diagonal(&roots)
}

/// Checks symmetry and positive semidefiniteness with tolerance
/// `1e-12·‖m‖`.
pub fn check_psd(m: &DMatrix<f64>, what: &str) -> Result<()> {
    if !m.is_square() {
        return Err(Error::InvalidDriver(format!(
            "{what} must be square, got {:?}",
            m.shape()
        )));
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidDriver(format!(
            "{what} has non-finite entries"
        )));
    }
    let norm = m.norm();
    let tol = 1e-12 * norm.max(f64::MIN_POSITIVE);
    if (m - m.transpose()).amax() > tol {
        return Err(Error::InvalidDriver(format!("{what} is not symmetric")));
    }
    let min = SymmetricEigen::new(symmetrize(m)).eigenvalues.min();
    if min < -1e-12 * norm {
        return Err(Error::InvalidDriver(format!(
            "{what} is not positive semidefinite (eigenvalue {min:e})"
        )));
    }
    Ok(())
}

/// `(e^{Ah}, ∫₀^h e^{Au} Q e^{Aᵀu} du)` for symmetric `q`.
///
/// The integral comes from the upper-right block of
/// `exp([[A, Q], [0, −Aᵀ]]·τ)` at a substep `τ = h/2^s` small enough that
/// `‖A‖₁τ ≤ 1/2`, followed by `s` doublings
/// `Σ_{2τ} = Φ_τ Σ_τ Φ_τᵀ + Σ_τ`, `Φ_{2τ} = Φ_τ²`.
pub fn van_loan(a: &DMatrix<f64>, q: &DMatrix<f64>, h: f64) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let norm1 = a
        .column_iter()
        .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut doublings = 0u32;
    let mut tau = h;
    while norm1 * tau > 0.5 && doublings < 60 {
        tau *= 0.5;
        doublings += 1;
    }
    let mut block = DMatrix::zeros(2 * n, 2 * n);
    block.view_mut((0, 0), (n, n)).copy_from(&(a * tau));
    block.view_mut((0, n), (n, n)).copy_from(&(q * tau));
    block
        .view_mut((n, n), (n, n))
        .copy_from(&(-a.transpose() * tau));
    let e = expm(&block);
    let mut phi = e.view((0, 0), (n, n)).into_owned();
    let mut sigma = symmetrize(&(e.view((0, n), (n, n)) * phi.transpose()));
    for _ in 0..doublings {
        sigma = symmetrize(&(&phi * &sigma * phi.transpose() + &sigma));
        phi = &phi * &phi;
    }
    (phi, sigma)
}

/// Solves `A X + X Aᵀ = −Q` through the Kronecker form
/// `(I ⊗ A + A ⊗ I) vec X = −vec Q`, with one step of iterative refinement.
pub fn lyapunov(a: &DMatrix<f64>, q: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let eye = DMatrix::<f64>::identity(n, n);
    let op = eye.kronecker(a) + a.kronecker(&eye);
    let lu = op.lu();
    let rhs = DMatrix::from_column_slice(n * n, 1, (-q).as_slice());
    let mut x = lu.solve(&rhs).ok_or(Error::Unstable)?;
    let xm = DMatrix::from_column_slice(n, n, x.as_slice());
    let resid = a * &xm + &xm * a.transpose() + q;
    if let Some(dx) = lu.solve(&DMatrix::from_column_slice(n * n, 1, (-resid).as_slice())) {
        x += dx;
    }
    Ok(symmetrize(&DMatrix::from_column_slice(n, n, x.as_slice())))
}
