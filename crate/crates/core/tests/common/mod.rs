//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use mcarma_core::exactalg::{Poly, PolyMatrix, RatMatrix, Rational, TransferFunction};
use mcarma_core::realization::{transfer_function, McarmaSpec, StateSpaceModel};
use mcarma_core::simulate::{spectral_abscissa, FloatModel};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator and denominator uniform in [-9, 9], denominator nonzero.
pub fn rand_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.random_range(-9..=9i64);
    let mut den = 0;
    while den == 0 {
        den = rng.random_range(-9..=9i64);
    }
    Rational::new(num, den).unwrap()
}

pub fn rand_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RatMatrix {
    let data = (0..rows * cols).map(|_| rand_rational(rng)).collect();
    RatMatrix::from_vec(rows, cols, data).unwrap()
}

/// Random model with `N ≤ max_n`, `m ≤ max_m`, `d ≤ max_d` and a transfer
/// function that is not identically zero (rejection sampling).
pub fn rand_model(rng: &mut impl Rng, max_n: usize, max_m: usize, max_d: usize) -> StateSpaceModel {
    loop {
        let n = rng.random_range(1..=max_n);
        let m = rng.random_range(1..=max_m);
        let d = rng.random_range(1..=max_d);
        let ss = StateSpaceModel::new(
            rand_matrix(rng, n, n),
            rand_matrix(rng, n, m),
            rand_matrix(rng, d, n),
        )
        .unwrap();
        if !transfer_function(&ss).unwrap().is_zero() {
            return ss;
        }
    }
}

/// Shifts `A` by an integer multiple of the identity so that its spectral
/// abscissa is at most -1/2.
pub fn stabilize(ss: &StateSpaceModel) -> StateSpaceModel {
    let alpha = spectral_abscissa(&FloatModel::from_exact(ss).a);
    if alpha <= -0.5 {
        return ss.clone();
    }
    let shift = (alpha + 0.5).ceil() as i64 + 1;
    let n = ss.state_dim();
    let a = ss
        .a()
        .sub(&RatMatrix::scalar(n, &Rational::from(shift)))
        .unwrap();
    StateSpaceModel::new(a, ss.b().clone(), ss.c().clone()).unwrap()
}

pub fn rand_stable_model(
    rng: &mut impl Rng,
    max_n: usize,
    max_m: usize,
    max_d: usize,
) -> StateSpaceModel {
    stabilize(&rand_model(rng, max_n, max_m, max_d))
}

/// Random MCARMA(p, q) spec with `B_0 ≠ 0`.
pub fn rand_mcarma(rng: &mut impl Rng, max_p: usize, max_dim: usize) -> McarmaSpec {
    let p = rng.random_range(1..=max_p);
    let q = rng.random_range(0..p);
    let d = rng.random_range(1..=max_dim);
    let m = rng.random_range(1..=max_dim);
    let a = (0..p).map(|_| rand_matrix(rng, d, d)).collect();
    let mut b: Vec<RatMatrix> = (0..=q).map(|_| rand_matrix(rng, d, m)).collect();
    while b[0].is_zero() {
        b[0] = rand_matrix(rng, d, m);
    }
    McarmaSpec::new(a, b).unwrap()
}

/// Fraction-free (Bareiss) determinant: rows are scaled to integers first,
/// then eliminated over ℤ with exact divisions.
pub fn bareiss_det(a: &RatMatrix) -> Rational {
    let n = a.rows();
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let l = a
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &l;
            a.row(i)
                .iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        m[n - 1][n - 1].clone()
    };
    Rational::from_big(sign * det, scale).unwrap()
}

/// Solves `M X = R` exactly by Gauss–Jordan elimination; `None` if singular.
pub fn solve_exact(m: &RatMatrix, r: &RatMatrix) -> Option<RatMatrix> {
    let n = m.rows();
    let k = r.cols();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| m.row(i).iter().chain(r.row(i)).cloned().collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].recip().unwrap();
        for v in aug[col].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i != col && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                let pivot_row = aug[col].clone();
                for (v, p) in aug[i].iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * p);
                }
            }
        }
    }
    let data = aug
        .into_iter()
        .flat_map(|row| row.into_iter().skip(n))
        .collect();
    Some(RatMatrix::from_vec(n, k, data).unwrap())
}

/// `C (z0 I − A)⁻¹ B` at a rational point, by direct linear solve.
pub fn eval_model_at(ss: &StateSpaceModel, z0: &Rational) -> Option<RatMatrix> {
    let n = ss.state_dim();
    let shifted = RatMatrix::scalar(n, z0).sub(ss.a()).unwrap();
    let x = solve_exact(&shifted, ss.b())?;
    Some(ss.c().mul(&x).unwrap())
}

/// Entrywise evaluation of a transfer function at a rational point.
pub fn eval_tf_at(h: &TransferFunction, z0: &Rational) -> Option<RatMatrix> {
    let (d, m) = h.shape();
    let mut out = RatMatrix::zeros(d, m);
    for i in 0..d {
        for j in 0..m {
            let e = h.entry(i, j);
            let den = e.den().eval(z0);
            if den.is_zero() {
                return None;
            }
            out[(i, j)] = &e.num().eval(z0) / &den;
        }
    }
    Some(out)
}

pub fn rand_poly(rng: &mut impl Rng, max_deg: usize) -> Poly {
    let deg = rng.random_range(0..=max_deg);
    Poly::from_coeffs(
        (0..=deg)
            .map(|_| Rational::from(rng.random_range(-9..=9i64)))
            .collect(),
    )
}

/// Random model with exactly the given dimensions and a nonzero transfer
/// function.
pub fn rand_model_with_dims(rng: &mut impl Rng, n: usize, m: usize, d: usize) -> StateSpaceModel {
    loop {
        let ss = StateSpaceModel::new(
            rand_matrix(rng, n, n),
            rand_matrix(rng, n, m),
            rand_matrix(rng, d, n),
        )
        .unwrap();
        if !transfer_function(&ss).unwrap().is_zero() {
            return ss;
        }
    }
}

/// Entrywise evaluation of a polynomial matrix at a rational point.
pub fn eval_polymatrix_at(p: &PolyMatrix, z0: &Rational) -> RatMatrix {
    let data = p.entries().iter().map(|e| e.eval(z0)).collect();
    RatMatrix::from_vec(p.rows(), p.cols(), data).unwrap()
}

/// `‖x‖_F` for residual checks.
pub fn fro(m: &DMatrix<f64>) -> f64 {
    m.norm()
}
