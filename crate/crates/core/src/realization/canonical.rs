//! Observer and controller canonical realizations of a strictly proper
//! transfer function.
//!
//! Both use the scalar monic lcm `d(z) = z^p + a_1 z^{p-1} + … + a_p` of the
//! entry denominators and the polynomial numerator `N(z) = d(z)·H(z)`. The
//! denominator blocks are `a_i·I`, so the two forms share the degree `p`;
//! neither is minimal in general.

use super::mcarma::{assemble_observer_ss, block_companion, McarmaSpec};
use super::mfd::{MfdPair, Side};
use super::statespace::StateSpaceModel;
use crate::error::{Error, Result};
use crate::exactalg::{PolyMatrix, RatMatrix, TransferFunction};

/// MCARMA state space form: `𝒞 = (I_d, 0, …, 0)`, `ℬ` stacks β_1..β_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObserverRealization {
    spec: McarmaSpec,
    model: StateSpaceModel,
}

impl ObserverRealization {
    pub fn spec(&self) -> &McarmaSpec {
        &self.spec
    }

    pub fn model(&self) -> &StateSpaceModel {
        &self.model
    }

    pub fn into_model(self) -> StateSpaceModel {
        self.model
    }
}

/// Controller form: `𝔅 = (0, …, 0, I_m)ᵀ`, `ℭ = (N_0, …, N_{p-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControllerRealization {
    a_tilde: Vec<RatMatrix>,
    num_ascending: Vec<RatMatrix>,
    model: StateSpaceModel,
}

impl ControllerRealization {
    pub fn p(&self) -> usize {
        self.a_tilde.len()
    }

    /// `Ã_1, …, Ã_p`, each `m×m`.
    pub fn a_tilde(&self) -> &[RatMatrix] {
        &self.a_tilde
    }

    /// `N_0, …, N_{p-1}` in state-block order (the blocks of `ℭ`).
    pub fn num_ascending(&self) -> &[RatMatrix] {
        &self.num_ascending
    }

    /// `q̃ = max{k : N_k ≠ 0}`.
    pub fn q_tilde(&self) -> usize {
        self.num_ascending
            .iter()
            .rposition(|n| !n.is_zero())
            .unwrap_or(0)
    }

    /// `B̃_0, …, B̃_q̃` with `B̃_j = N_{q̃-j}` (descending degree).
    pub fn b_tilde(&self) -> Vec<RatMatrix> {
        self.num_ascending[..=self.q_tilde()]
            .iter()
            .rev()
            .cloned()
            .collect()
    }

    pub fn model(&self) -> &StateSpaceModel {
        &self.model
    }

    pub fn into_model(self) -> StateSpaceModel {
        self.model
    }
}

fn check_realizable(h: &TransferFunction) -> Result<()> {
    if h.is_zero() {
        return Err(Error::ZeroTransferFunction);
    }
    if !h.is_strictly_proper() {
        return Err(Error::NotStrictlyProper);
    }
    Ok(())
}

/// `[a_1, …, a_p]·I_k` from the monic common denominator.
fn scalar_blocks(h: &TransferFunction, k: usize) -> Vec<RatMatrix> {
    let den = h.common_den();
    let p = den.degree().expect("nonzero common denominator");
    (1..=p)
        .map(|i| RatMatrix::scalar(k, &den.coeff(p - i)))
        .collect()
}

/// Observer canonical (MCARMA) realization and the left description
/// `P = d(z)·I_d`, `Q = N(z)`.
pub fn observer_realization(h: &TransferFunction) -> Result<(ObserverRealization, MfdPair)> {
    check_realizable(h)?;
    let (d, _) = h.shape();
    let a_coeffs = scalar_blocks(h, d);
    let numer = h.common_num();
    let q = numer.degree().expect("nonzero numerator");
    let b_coeffs: Vec<RatMatrix> = (0..=q).map(|j| numer.coeff_matrix(q - j)).collect();
    let spec = McarmaSpec::new(a_coeffs, b_coeffs)?;
    let model = assemble_observer_ss(&spec)?;
    let mfd = MfdPair::new(
        Side::Left,
        PolyMatrix::scalar(d, h.common_den()),
        numer.clone(),
    );
    Ok((ObserverRealization { spec, model }, mfd))
}

/// Controller canonical realization and the right description
/// `P̃ = d(z)·I_m`, `Q̃ = N(z)`.
pub fn controller_realization(h: &TransferFunction) -> Result<(ControllerRealization, MfdPair)> {
    check_realizable(h)?;
    let (d, m) = h.shape();
    let a_tilde = scalar_blocks(h, m);
    let p = a_tilde.len();
    let numer = h.common_num();
    let num_ascending: Vec<RatMatrix> = (0..p).map(|k| numer.coeff_matrix(k)).collect();

    let a = block_companion(&a_tilde, m);
    let mut b = RatMatrix::zeros(p * m, m);
    b.set_block((p - 1) * m, 0, &RatMatrix::identity(m));
    let mut c = RatMatrix::zeros(d, p * m);
    for (k, nk) in num_ascending.iter().enumerate() {
        c.set_block(0, k * m, nk);
    }
    let model = StateSpaceModel::new(a, b, c)?;
    let mfd = MfdPair::new(
        Side::Right,
        PolyMatrix::scalar(m, h.common_den()),
        numer.clone(),
    );
    Ok((
        ControllerRealization {
            a_tilde,
            num_ascending,
            model,
        },
        mfd,
    ))
}

/// `H = P⁻¹Q` with `P` monic.
pub fn left_mfd(h: &TransferFunction) -> Result<MfdPair> {
    observer_realization(h).map(|(_, mfd)| mfd)
}

/// `H = Q̃P̃⁻¹` with `P̃` monic.
pub fn right_mfd(h: &TransferFunction) -> Result<MfdPair> {
    controller_realization(h).map(|(_, mfd)| mfd)
}
