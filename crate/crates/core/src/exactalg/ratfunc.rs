//! Rational functions and matrices of them (transfer functions).

use nalgebra::Complex;

use super::poly::{self, Poly};
use super::polymatrix::PolyMatrix;
use crate::error::{Error, Result};

/// Reduced `num/den` with `den` monic and `gcd(num, den) = 1`.
/// Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let lc = den.leading().cloned().ok_or(Error::ZeroDenominator)?;
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly::gcd(&num, &den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        // g is monic, so den/g keeps the leading coefficient lc.
        let inv = lc.recip().expect("nonzero leading coefficient");
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num < deg den`, with the zero function counting as proper.
    pub fn is_strictly_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }

    /// Value at `z`, or `None` when `z` is (numerically) a pole.
    pub fn eval_complex(&self, z: Complex<f64>) -> Option<Complex<f64>> {
        let d = self.den.eval_complex(z);
        let zabs = z.norm();
        let scale: f64 = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().abs() * zabs.powi(k as i32))
            .sum();
        if d.norm() <= 1e-13 * scale {
            return None;
        }
        Some(self.num.eval_complex(z) / d)
    }
}

/// A `rows × cols` matrix of reduced rational functions, together with the
/// common-denominator form `H = common_num / common_den`.
///
/// `common_den` is the monic lcm of the entry denominators. Two values are
/// equal iff their canonical entries agree, which makes `==` a decision
/// procedure for rational-function identity.
#[derive(Clone, Debug, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
    common_den: Poly,
    common_num: PolyMatrix,
}

/// The transfer function `C(zI − A)⁻¹B` of a state space model.
pub type TransferFunction = RationalMatrix;

impl PartialEq for RationalMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl RationalMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} rational matrix",
                entries.len()
            )));
        }
        let mut common_den = Poly::one();
        for e in &entries {
            common_den = poly::lcm(&common_den, e.den())?;
        }
        let nums = entries
            .iter()
            .map(|e| Ok(e.num() * &common_den.div_exact(e.den())?))
            .collect::<Result<Vec<_>>>()?;
        let common_num = PolyMatrix::from_vec(rows, cols, nums)?;
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
            common_den,
            common_num,
        })
    }

    /// Canonical form of `num / den`.
    pub fn reduce(num: &PolyMatrix, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let entries = num
            .entries()
            .iter()
            .map(|n| RationalFunction::new(n.clone(), den.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(num.rows(), num.cols(), entries)
    }

    pub fn from_poly_matrix(p: &PolyMatrix) -> Self {
        Self::reduce(p, &Poly::one()).expect("unit denominator")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    /// Monic lcm `d(z)` of all entry denominators.
    pub fn common_den(&self) -> &Poly {
        &self.common_den
    }

    /// `N(z) = d(z)·H(z)`, an exact polynomial matrix.
    pub fn common_num(&self) -> &PolyMatrix {
        &self.common_num
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_zero)
    }

    pub fn is_strictly_proper(&self) -> bool {
        self.entries
            .iter()
            .all(RationalFunction::is_strictly_proper)
    }

    /// Complex matrix `H(z)` in row-major order, or `None` at a pole.
    pub fn eval_complex(&self, z: Complex<f64>) -> Option<Vec<Complex<f64>>> {
        self.entries.iter().map(|e| e.eval_complex(z)).collect()
    }
}

/// Canonical reduced form of `num / den`.
pub fn ratmat_reduce(num: &PolyMatrix, den: &Poly) -> Result<RationalMatrix> {
    RationalMatrix::reduce(num, den)
}

/// Exact equality of rational matrices.
pub fn ratmat_equal(a: &RationalMatrix, b: &RationalMatrix) -> bool {
    a == b
}
