//! Exact scalars, dense matrices and polynomial factorization.

mod matrix;
pub mod poly;
mod quotient;
mod scalar;

pub use matrix::{EchelonBasis, Matrix, Rref};
pub use quotient::QuotientSpace;
pub(crate) use scalar::{mod_inv, rational_reconstruct};
pub use scalar::{Field, Scalar, DEFAULT_PRIME, MIN_PRIME};
