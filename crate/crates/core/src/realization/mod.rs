//! Transfer functions, MCARMA β-recursion, canonical realizations and
//! monic matrix fraction descriptions, all in exact arithmetic.

mod canonical;
mod mcarma;
mod mfd;
mod statespace;

pub use canonical::{
    controller_realization, left_mfd, observer_realization, right_mfd, ControllerRealization,
    ObserverRealization,
};
pub use mcarma::{assemble_observer_ss, beta_from_mcarma, q_and_b_from_beta, McarmaSpec};
pub use mfd::{MfdPair, Side};
pub use statespace::{strictly_proper, tf_equivalent, transfer_function, StateSpaceModel};
