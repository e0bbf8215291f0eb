//! Exact-arithmetic engine for Wolf spaces and their quaternionic
//! bisectional curvature.
//!
//! Everything here is computed over arbitrary-precision rationals: root
//! systems for all compact simple types, Chevalley bases with integer
//! structure constants, the Killing form, the compact real form with its
//! quaternionic structure on the isotropy representation, and the
//! closed-form curvature coefficients together with brute-force Lie-bracket
//! oracles that cross-check them. A flat-model laboratory covers the
//! corresponding tensor identities on `R^{4n}` and the twistor tangent model
//! `R^{4n} ⊕ R²`, and a curvature-endomorphism module handles `q(R)` on
//! exterior and symmetric powers.
//!
//! No floating point is used anywhere in the verification paths; the only
//! approximate output in the whole crate is the sampled line-curvature
//! minimum of [`qk_flat::k_h_lines`], which is explicitly labelled as such.

pub mod chevalley;
pub mod curvop;
pub mod exact;
pub mod qk_flat;
pub mod rootsys;
pub mod sampling;
pub mod wolfcurv;

pub use exact::{psd_check, sphere_moment, GaussScalar, Matrix, Scalar};
pub use rootsys::{RootFamily, RootSystem, RootSystemId, WolfData};
pub use chevalley::{ChevalleyAlgebra, CompactVector, QuaternionOps};
