//! Exact scalar and linear-algebra kernel.
//!
//! Arbitrary-precision rationals, Gaussian rationals, dense exact matrices
//! and exact integration of monomials over unit spheres. All arithmetic is
//! exact; nothing in this module ever rounds.

mod gauss;
mod matrix;
mod moments;
mod scalar;

pub use gauss::GaussScalar;
pub use matrix::{
    kernel_basis, psd_check, psd_check_gauss, solve, ExactMatrix, Matrix, MatrixError,
};
pub use moments::{sphere_moment, MomentError};
pub use scalar::{rat, scalar_from_str, Scalar};
