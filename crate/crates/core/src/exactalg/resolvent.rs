//! Characteristic polynomial and adjugate of `zI − A` by the
//! Leverrier–Faddeev recursion.
//!
//! With `M_0 = 0` and `c_N = 1`, for `k = 1..=N`:
//!
//! ```text
//! M_k     = A·M_{k-1} + c_{N-k+1}·I
//! c_{N-k} = -tr(A·M_k) / k
//! ```
//!
//! Then `det(zI − A) = Σ c_k z^k` and `adj(zI − A) = Σ_k M_k z^{N-k}`.
//! Every division is by a small integer, so the recursion is exact over ℚ.

use super::matrix::RatMatrix;
use super::poly::Poly;
use super::polymatrix::PolyMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficient form of the resolvent numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolvent {
    /// `M_1, …, M_N`; `M_k` multiplies `z^{N-k}` in the adjugate.
    pub adjugate_coeffs: Vec<RatMatrix>,
    /// `det(zI − A)`, monic of degree `N`.
    pub charpoly: Poly,
}

impl Resolvent {
    pub fn new(a: &RatMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!(
                "resolvent of non-square {:?} matrix",
                a.shape()
            )));
        }
        let n = a.rows();
        if n == 0 {
            return Err(Error::Dimension("resolvent of an empty matrix".into()));
        }
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        let mut coeffs = Vec::with_capacity(n);
        let mut m = RatMatrix::identity(n);
        for k in 1..=n {
            if k > 1 {
                m = a.mul(&m)?;
                for i in 0..n {
                    m[(i, i)] += &c[n - k + 1];
                }
            }
            let am = a.mul(&m)?;
            c[n - k] = -(&am.trace() / &Rational::from(k as i64));
            coeffs.push(m.clone());
        }
        Ok(Resolvent {
            adjugate_coeffs: coeffs,
            charpoly: Poly::from_coeffs(c),
        })
    }

    /// `adj(zI − A)` as a polynomial matrix.
    pub fn adjugate(&self) -> PolyMatrix {
        let n = self.adjugate_coeffs.len();
        let ascending: Vec<RatMatrix> = self.adjugate_coeffs.iter().rev().cloned().collect();
        PolyMatrix::from_coeff_matrices(&ascending).unwrap_or_else(|_| PolyMatrix::zeros(n, n))
    }
}

/// `(adj(zI − A), det(zI − A))`.
pub fn resolvent_numerator(a: &RatMatrix) -> Result<(PolyMatrix, Poly)> {
    let r = Resolvent::new(a)?;
    Ok((r.adjugate(), r.charpoly))
}
