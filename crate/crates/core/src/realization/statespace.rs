use crate::error::{Error, Result};
use crate::exactalg::{PolyMatrix, RatMatrix, Resolvent, TransferFunction};

/// `dX = A X dt + B dL`, `Y = C X`, with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpaceModel {
    a: RatMatrix,
    b: RatMatrix,
    c: RatMatrix,
}

impl StateSpaceModel {
    /// Checks `A: N×N`, `B: N×m`, `C: d×N` with `N, m, d ≥ 1`.
    pub fn new(a: RatMatrix, b: RatMatrix, c: RatMatrix) -> Result<Self> {
        let n = a.rows();
        if n == 0 || !a.is_square() {
            return Err(Error::Dimension(format!(
                "A must be square and nonempty, got {:?}",
                a.shape()
            )));
        }
        if b.rows() != n || b.cols() == 0 {
            return Err(Error::Dimension(format!(
                "B is {:?}, expected {n}xm with m >= 1",
                b.shape()
            )));
        }
        if c.cols() != n || c.rows() == 0 {
            return Err(Error::Dimension(format!(
                "C is {:?}, expected dx{n} with d >= 1",
                c.shape()
            )));
        }
        Ok(StateSpaceModel { a, b, c })
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn b(&self) -> &RatMatrix {
        &self.b
    }

    pub fn c(&self) -> &RatMatrix {
        &self.c
    }

    /// State dimension `N`.
    pub fn state_dim(&self) -> usize {
        self.a.rows()
    }

    /// Driver dimension `m`.
    pub fn input_dim(&self) -> usize {
        self.b.cols()
    }

    /// Output dimension `d`.
    pub fn output_dim(&self) -> usize {
        self.c.rows()
    }

    pub fn with_c(&self, c: RatMatrix) -> Result<Self> {
        Self::new(self.a.clone(), self.b.clone(), c)
    }
}

/// `H(z) = C (zI − A)⁻¹ B` in reduced form.
///
/// The numerator `C·adj(zI − A)·B` is assembled coefficient-by-coefficient
/// from the Leverrier–Faddeev matrices, `Σ_k (C M_k B) z^{N-k}`.
pub fn transfer_function(ss: &StateSpaceModel) -> Result<TransferFunction> {
    let res = Resolvent::new(ss.a())?;
    let mut ascending = res
        .adjugate_coeffs
        .iter()
        .map(|m| ss.c().mul(m)?.mul(ss.b()))
        .collect::<Result<Vec<_>>>()?;
    ascending.reverse();
    let num = PolyMatrix::from_coeff_matrices(&ascending)?;
    TransferFunction::reduce(&num, &res.charpoly)
}

/// Every entry has numerator degree below denominator degree.
pub fn strictly_proper(h: &TransferFunction) -> bool {
    h.is_strictly_proper()
}

/// Exact transfer-function identity; models with equal transfer functions
/// produce the same output process under a shared driver.
pub fn tf_equivalent(ss1: &StateSpaceModel, ss2: &StateSpaceModel) -> Result<bool> {
    if ss1.input_dim() != ss2.input_dim() || ss1.output_dim() != ss2.output_dim() {
        return Err(Error::Dimension(format!(
            "(d, m) = ({}, {}) vs ({}, {})",
            ss1.output_dim(),
            ss1.input_dim(),
            ss2.output_dim(),
            ss2.input_dim()
        )));
    }
    Ok(transfer_function(ss1)? == transfer_function(ss2)?)
}
