//! Exact algebra over ℚ: scalars, polynomials, polynomial matrices and
//! rational-function matrices.
//!
//! Everything here is immutable value semantics; no operation rounds.

mod matrix;
pub mod poly;
mod polymatrix;
mod ratfunc;
mod rational;
mod resolvent;

pub use matrix::RatMatrix;
pub use poly::{gcd, gcd_lcm, lcm, Poly};
pub use polymatrix::PolyMatrix;
pub use ratfunc::{
    ratmat_equal, ratmat_reduce, RationalFunction, RationalMatrix, TransferFunction,
};
pub use rational::Rational;
pub use resolvent::{resolvent_numerator, Resolvent};
