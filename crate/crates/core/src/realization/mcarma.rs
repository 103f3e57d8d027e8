//! MCARMA(p, q) polynomial pairs and the β-recursion linking them to the
//! observer canonical state space form.
//!
//! For `P(z) = I z^p + A_1 z^{p-1} + … + A_p` and
//! `Q(z) = B_0 z^q + … + B_q`, the input blocks of the state space form are
//!
//! ```text
//! β_{p-j} = 1{j ≤ q} · ( B_{q-j} − Σ_{i=1}^{p-j-1} A_i β_{p-j-i} ),  j = p-1, …, 0
//! ```
//!
//! so `β_1, …, β_{p-q-1}` vanish and the rest are filled in index order.

use super::statespace::StateSpaceModel;
use crate::error::{Error, Result};
use crate::exactalg::{PolyMatrix, RatMatrix};

/// MCARMA polynomial pair with cached β blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McarmaSpec {
    p: usize,
    q: usize,
    d: usize,
    m: usize,
    a_coeffs: Vec<RatMatrix>,
    b_coeffs: Vec<RatMatrix>,
    beta: Vec<RatMatrix>,
}

impl McarmaSpec {
    /// `a_coeffs = [A_1, …, A_p]` (each `d×d`), `b_coeffs = [B_0, …, B_q]`
    /// (each `d×m`).
    pub fn new(a_coeffs: Vec<RatMatrix>, b_coeffs: Vec<RatMatrix>) -> Result<Self> {
        let beta = beta_from_mcarma(&a_coeffs, &b_coeffs)?;
        let (d, m) = b_coeffs[0].shape();
        Ok(McarmaSpec {
            p: a_coeffs.len(),
            q: b_coeffs.len() - 1,
            d,
            m,
            a_coeffs,
            b_coeffs,
            beta,
        })
    }

    /// Rebuilds a spec from `A_1..A_p` and β via the inverse recursion.
    pub fn from_beta(a_coeffs: Vec<RatMatrix>, beta: &[RatMatrix]) -> Result<Self> {
        let (_, b_coeffs) = q_and_b_from_beta(&a_coeffs, beta)?;
        Self::new(a_coeffs, b_coeffs)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn output_dim(&self) -> usize {
        self.d
    }

    pub fn input_dim(&self) -> usize {
        self.m
    }

    pub fn a_coeffs(&self) -> &[RatMatrix] {
        &self.a_coeffs
    }

    pub fn b_coeffs(&self) -> &[RatMatrix] {
        &self.b_coeffs
    }

    pub fn beta(&self) -> &[RatMatrix] {
        &self.beta
    }

    /// `P(z) = I z^p + A_1 z^{p-1} + … + A_p`.
    pub fn autoregressive_poly(&self) -> PolyMatrix {
        let mut asc: Vec<RatMatrix> = self.a_coeffs.iter().rev().cloned().collect();
        asc.push(RatMatrix::identity(self.d));
        PolyMatrix::from_coeff_matrices(&asc).expect("uniform d x d blocks")
    }

    /// `Q(z) = B_0 z^q + … + B_q`.
    pub fn moving_average_poly(&self) -> PolyMatrix {
        let asc: Vec<RatMatrix> = self.b_coeffs.iter().rev().cloned().collect();
        PolyMatrix::from_coeff_matrices(&asc).expect("uniform d x m blocks")
    }
}

fn check_blocks(a_coeffs: &[RatMatrix]) -> Result<usize> {
    let d = a_coeffs
        .first()
        .ok_or_else(|| Error::Dimension("MCARMA order p must be at least 1".into()))?
        .rows();
    if d == 0 || a_coeffs.iter().any(|a| a.shape() != (d, d)) {
        return Err(Error::Dimension(
            "autoregressive blocks must all be d x d".into(),
        ));
    }
    Ok(d)
}

/// β_1..β_p from `[A_1..A_p]` and `[B_0..B_q]`; `q = b_coeffs.len() − 1`.
pub fn beta_from_mcarma(a_coeffs: &[RatMatrix], b_coeffs: &[RatMatrix]) -> Result<Vec<RatMatrix>> {
    let d = check_blocks(a_coeffs)?;
    let p = a_coeffs.len();
    let Some(first) = b_coeffs.first() else {
        return Err(Error::Dimension(
            "moving-average polynomial needs at least B_0".into(),
        ));
    };
    let q = b_coeffs.len() - 1;
    if q >= p {
        return Err(Error::InvalidOrder { p, q });
    }
    let m = first.cols();
    if m == 0 || b_coeffs.iter().any(|b| b.shape() != (d, m)) {
        return Err(Error::Dimension(format!(
            "moving-average blocks must all be {d} x m"
        )));
    }

    // beta[k - 1] holds β_k; index k = p - j.
    let mut beta: Vec<RatMatrix> = Vec::with_capacity(p);
    for k in 1..=p {
        let j = p - k;
        if j > q {
            beta.push(RatMatrix::zeros(d, m));
            continue;
        }
        let mut acc = b_coeffs[q - j].clone();
        for i in 1..k {
            acc = acc.sub(&a_coeffs[i - 1].mul(&beta[k - i - 1])?)?;
        }
        beta.push(acc);
    }
    Ok(beta)
}

/// Inverse recursion: `q = p − min{i : β_i ≠ 0}` and
/// `B_{q-j} = β_{p-j} + Σ_{i=1}^{p-j-1} A_i β_{p-j-i}` for `j = 0..=q`.
///
/// Returns `(q, [B_0..B_q])`. The recovered `q` is the reduced one: a
/// spec built with `B_0 = 0` comes back with its leading zero blocks
/// dropped.
pub fn q_and_b_from_beta(
    a_coeffs: &[RatMatrix],
    beta: &[RatMatrix],
) -> Result<(usize, Vec<RatMatrix>)> {
    let d = check_blocks(a_coeffs)?;
    let p = a_coeffs.len();
    if beta.len() != p {
        return Err(Error::Dimension(format!(
            "{} beta blocks for p = {p}",
            beta.len()
        )));
    }
    let m = beta[0].cols();
    if beta.iter().any(|b| b.shape() != (d, m)) {
        return Err(Error::Dimension(format!("beta blocks must all be {d} x m")));
    }
    let first = beta
        .iter()
        .position(|b| !b.is_zero())
        .ok_or(Error::DegenerateTransferFunction)?
        + 1;
    let q = p - first;
    let mut b_coeffs = vec![RatMatrix::zeros(d, m); q + 1];
    for j in 0..=q {
        let k = p - j;
        let mut acc = beta[k - 1].clone();
        for i in 1..k {
            acc = acc.add(&a_coeffs[i - 1].mul(&beta[k - i - 1])?)?;
        }
        b_coeffs[q - j] = acc;
    }
    Ok((q, b_coeffs))
}

/// Block companion matrix with identity blocks on the superdiagonal and
/// last block row `(−A_p, …, −A_1)`.
pub(crate) fn block_companion(coeffs: &[RatMatrix], block: usize) -> RatMatrix {
    let p = coeffs.len();
    let mut out = RatMatrix::zeros(p * block, p * block);
    let eye = RatMatrix::identity(block);
    for r in 0..p.saturating_sub(1) {
        out.set_block(r * block, (r + 1) * block, &eye);
    }
    for (col, a) in coeffs.iter().rev().enumerate() {
        out.set_block((p - 1) * block, col * block, &a.neg());
    }
    out
}

/// The pd-dimensional observer canonical model `(𝒜, ℬ, 𝒞)` of a spec.
///
/// The `A_i` may be arbitrary `d×d` matrices.
pub fn assemble_observer_ss(spec: &McarmaSpec) -> Result<StateSpaceModel> {
    let (p, d, m) = (spec.p, spec.d, spec.m);
    let a = block_companion(&spec.a_coeffs, d);
    let mut b = RatMatrix::zeros(p * d, m);
    for (k, beta) in spec.beta.iter().enumerate() {
        b.set_block(k * d, 0, beta);
    }
    let mut c = RatMatrix::zeros(d, p * d);
    c.set_block(0, 0, &RatMatrix::identity(d));
    StateSpaceModel::new(a, b, c)
}
