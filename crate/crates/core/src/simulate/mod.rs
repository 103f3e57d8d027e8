//! Double-precision simulation of `dX = AX dt + B dL`, `Y = CX`.
//!
//! Exact models are rounded to the nearest `f64` once on entry. Brownian
//! drivers use the exact Gaussian transition (single model) or shared
//! Euler increments (model pairs); compound Poisson drivers are propagated
//! exactly between jumps.

mod brownian;
mod driver;
mod linalg;
mod model;
mod moments;
mod path;
mod poisson;
pub mod rng;

pub use brownian::{
    integrate_euler, simulate_brownian, simulate_shared_brownian_pair, BrownianIncrements,
};
pub use driver::{JumpDistribution, LevyDriverSpec};
pub use linalg::{expm, lyapunov, van_loan};
pub use model::{
    gaussian_step_params, spectral_abscissa, stability_check, stationary_covariance, FloatModel,
    GaussianStep, STABILITY_MARGIN,
};
pub use moments::{empirical_autocov, spectral_density, theoretical_autocov};
pub use path::{relative_sup_gap, sup_norm_gap, InitialCondition, SamplePath, SimulationConfig};
pub use poisson::{
    propagate_jump_path, simulate_compound_poisson, simulate_compound_poisson_pair, JumpPath,
};
