//! Matrix fraction descriptions with identity leading denominator
//! coefficient.

use crate::error::Result;
use crate::exactalg::{PolyMatrix, RatMatrix, TransferFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `H = den⁻¹ · num`
    Left,
    /// `H = num · den⁻¹`
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// `(P, Q)` for the left description or `(P̃, Q̃)` for the right one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfdPair {
    side: Side,
    den: PolyMatrix,
    num: PolyMatrix,
}

impl MfdPair {
    pub(crate) fn new(side: Side, den: PolyMatrix, num: PolyMatrix) -> Self {
        MfdPair { side, den, num }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn den(&self) -> &PolyMatrix {
        &self.den
    }

    pub fn num(&self) -> &PolyMatrix {
        &self.num
    }

    /// Degree `p` of the denominator.
    pub fn p(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    /// Degree of the numerator (`q` or `q̃`); `None` for a zero numerator.
    pub fn q(&self) -> Option<usize> {
        self.num.degree()
    }

    /// The denominator's `z^p` coefficient is exactly the identity.
    pub fn den_is_monic(&self) -> bool {
        self.den.rows() == self.den.cols()
            && self.den.coeff_matrix(self.p()) == RatMatrix::identity(self.den.rows())
    }

    /// `[I, A_1, …, A_p]`, highest power first.
    pub fn den_descending(&self) -> Vec<RatMatrix> {
        let mut c = self.den.coeff_matrices();
        c.reverse();
        c
    }

    /// `[B_0, …, B_q]` with `B_j` the coefficient of `z^{q-j}`.
    pub fn num_descending(&self) -> Vec<RatMatrix> {
        let mut c = self.num.coeff_matrices();
        c.reverse();
        c
    }

    /// Checks the defining identity exactly, after clearing `H`'s common
    /// denominator: `P·N = Q·d` (left) or `N·P̃ = Q̃·d` (right).
    pub fn represents(&self, h: &TransferFunction) -> Result<bool> {
        let lhs = match self.side {
            Side::Left => self.den.mul(h.common_num())?,
            Side::Right => h.common_num().mul(&self.den)?,
        };
        let rhs = self.num.scale_poly(h.common_den());
        Ok(lhs.shape() == rhs.shape() && lhs == rhs)
    }
}
