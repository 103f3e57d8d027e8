//! Matrices whose entries are polynomials in `z`.

use std::ops::{Index, IndexMut};

use super::matrix::RatMatrix;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    /// `p(z)·I_n`.
    pub fn scalar(n: usize, p: &Poly) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = p.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} polynomial matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Constant polynomial matrix.
    pub fn from_constant(m: &RatMatrix) -> Self {
        Self::from_coeff_matrices(std::slice::from_ref(m)).expect("single coefficient")
    }

    /// `Σ_k coeffs[k]·z^k`; every coefficient must share one shape.
    pub fn from_coeff_matrices(coeffs: &[RatMatrix]) -> Result<Self> {
        let (rows, cols) = coeffs
            .first()
            .map(RatMatrix::shape)
            .ok_or_else(|| Error::Dimension("empty coefficient list".into()))?;
        if coeffs.iter().any(|c| c.shape() != (rows, cols)) {
            return Err(Error::Dimension(
                "coefficient matrices differ in shape".into(),
            ));
        }
        let entries = (0..rows * cols)
            .map(|idx| {
                let (i, j) = (idx / cols, idx % cols);
                Poly::from_coeffs(coeffs.iter().map(|c| c[(i, j)].clone()).collect())
            })
            .collect();
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
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

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Maximum entry degree; `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    /// Matrix coefficient of `z^k`.
    pub fn coeff_matrix(&self, k: usize) -> RatMatrix {
        RatMatrix::from_vec(
            self.rows,
            self.cols,
            self.entries.iter().map(|p| p.coeff(k)).collect(),
        )
        .expect("shape preserved")
    }

    /// Ascending coefficient matrices `M_0, …, M_deg` (empty for zero).
    pub fn coeff_matrices(&self) -> Vec<RatMatrix> {
        match self.degree() {
            None => Vec::new(),
            Some(deg) => (0..=deg).map(|k| self.coeff_matrix(k)).collect(),
        }
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {:?} by {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale_poly(&self, p: &Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension(format!(
                "{:?} vs {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.entries[i * self.cols + j]
    }
}
