//! Realization theory for Lévy-driven linear state space models.
//!
//! * [`exactalg`]: exact rational polynomial and rational-function matrices.
//! * [`realization`]: transfer functions, the MCARMA β-recursion, observer
//!   and controller canonical forms, and monic left/right matrix fractions.
//! * [`simulate`]: double-precision simulation under Brownian and compound
//!   Poisson drivers, plus second-order moment and spectral oracles.

pub mod error;
pub mod exactalg;
pub mod realization;
pub mod simulate;

pub use error::{Error, Result};
