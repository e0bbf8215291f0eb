use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MomentError {
    #[error("exponent list has length {got}, expected {dim}")]
    LengthMismatch { got: usize, dim: usize },
    #[error("sphere dimension must be at least 2, got {0}")]
    DimTooSmall(usize),
}

/// Normalized moment of a monomial over the unit sphere `S^{dim-1}`:
/// `(1/Vol) ∫ x₁^{a₁} ⋯ x_d^{a_d} dvol`, as an exact rational.
///
/// Vanishes when any exponent is odd; for all-even exponents it equals
/// `∏ᵢ (aᵢ-1)!! / [dim·(dim+2)⋯(dim+|a|-2)]`. Normalizing by the sphere
/// volume keeps every value rational.
pub fn sphere_moment(exponents: &[u32], dim: usize) -> Result<Scalar, MomentError> {
    if dim < 2 {
        return Err(MomentError::DimTooSmall(dim));
    }
    if exponents.len() != dim {
        return Err(MomentError::LengthMismatch { got: exponents.len(), dim });
    }
    if exponents.iter().any(|a| a % 2 == 1) {
        return Ok(Scalar::zero());
    }
    let total: u32 = exponents.iter().sum();
    let mut numer = BigInt::one();
    for &a in exponents {
        numer *= double_factorial(a.saturating_sub(1));
    }
    let mut denom = BigInt::one();
    let mut j = 0u32;
    while j < total {
        denom *= BigInt::from(dim as u32 + j);
        j += 2;
    }
    Ok(Scalar::new(numer, denom))
}

fn double_factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    #[test]
    fn odd_exponent_vanishes() {
        assert_eq!(sphere_moment(&[1, 0], 2).unwrap(), Scalar::zero());
        assert_eq!(sphere_moment(&[2, 1, 0], 3).unwrap(), Scalar::zero());
    }

    #[test]
    fn mean_square_coordinate() {
        // x² + y² + z² = 1 forces the mean of x² to be 1/3.
        assert_eq!(sphere_moment(&[2, 0, 0], 3).unwrap(), rat(1, 3));
        assert_eq!(sphere_moment(&[0, 2], 2).unwrap(), rat(1, 2));
    }

    #[test]
    fn quartic_moment_on_s2() {
        // Independently: ∫ cos⁴θ sinθ dθ / 2 over [0,π] = 1/5.
        assert_eq!(sphere_moment(&[4, 0, 0], 3).unwrap(), rat(1, 5));
        assert_eq!(sphere_moment(&[2, 2, 0], 3).unwrap(), rat(1, 15));
    }

    #[test]
    fn constant_integrates_to_one() {
        assert_eq!(sphere_moment(&[0, 0, 0, 0], 4).unwrap(), rat(1, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(
            sphere_moment(&[2, 0], 3),
            Err(MomentError::LengthMismatch { got: 2, dim: 3 })
        );
        assert_eq!(sphere_moment(&[2], 1), Err(MomentError::DimTooSmall(1)));
    }

    #[test]
    fn squares_sum_to_one() {
        for dim in 2..=6 {
            let mut sum = Scalar::zero();
            for i in 0..dim {
                let mut e = vec![0u32; dim];
                e[i] = 2;
                sum += sphere_moment(&e, dim).unwrap();
            }
            assert_eq!(sum, rat(1, 1));
        }
    }
}
