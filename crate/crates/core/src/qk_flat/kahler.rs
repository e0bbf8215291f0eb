//! Kähler-side algebra on `R^{2m}`: holomorphic bisectional curvature, the
//! bisectional-vs-sectional relation, and the symmetric 4-tensor that
//! encodes holomorphic sectional curvature together with its linear
//! reconstruction of the curvature tensor.

use num_traits::{One, Zero};

use super::tensor::AlgCurvTensor;
use super::FlatError;
use crate::exact::{rat, Matrix, Scalar};

/// The standard complex structure on `R^{2m}`: `e_{2i} ↦ e_{2i+1}`,
/// `e_{2i+1} ↦ -e_{2i}`.
pub fn standard_complex_structure(m_complex: usize) -> Matrix<Scalar> {
    let dim = 2 * m_complex;
    let mut j = Matrix::zeros(dim, dim);
    for i in 0..m_complex {
        j.set(2 * i + 1, 2 * i, Scalar::one());
        j.set(2 * i, 2 * i + 1, -Scalar::one());
    }
    j
}

/// Verifies `[R_{X,Y}, J] = 0` on all basis pairs.
pub fn verify_kahler_type(r: &AlgCurvTensor, j: &Matrix<Scalar>) -> Result<(), FlatError> {
    let m = r.m;
    let basis: Vec<Vec<Scalar>> = (0..m)
        .map(|i| {
            let mut v = vec![Scalar::zero(); m];
            v[i] = Scalar::one();
            v
        })
        .collect();
    for a in 0..m {
        for b in (a + 1)..m {
            let e = r.endo(&basis[a], &basis[b]);
            if e.mul_mat(j) != j.mul_mat(&e) {
                return Err(FlatError::NotKahler);
            }
        }
    }
    Ok(())
}

/// Holomorphic bisectional curvature `K(X,Y) = R(X, JX, JY, Y)`.
pub fn kahler_bisec(
    r: &AlgCurvTensor,
    j: &Matrix<Scalar>,
    x: &[Scalar],
    y: &[Scalar],
) -> Result<Scalar, FlatError> {
    verify_kahler_type(r, j)?;
    let jx = j.mul_vec(x);
    let jy = j.mul_vec(y);
    Ok(r.value(x, &jx, &jy, y))
}

/// Residual of `K(X,Y) = R(X,Y,Y,X) + R(X,JY,JY,X)`; zero for every
/// Kähler-type curvature tensor.
pub fn bihol2_residual(
    r: &AlgCurvTensor,
    j: &Matrix<Scalar>,
    x: &[Scalar],
    y: &[Scalar],
) -> Result<Scalar, FlatError> {
    let k = kahler_bisec(r, j, x, y)?;
    let jy = j.mul_vec(y);
    Ok(k - r.value(x, y, y, x) - r.value(x, &jy, &jy, x))
}

/// Builds the symmetric tensor
/// `S(X,Y,U,V) = 8 (R(X,JY,JU,V) + R(X,JU,JV,Y) + R(X,JV,JY,U))`,
/// reconstructs the curvature tensor via
/// `R'(X,Y,U,V) = (S(X,JY,JU,V) - S(X,JY,U,JV)) / 32`, and returns the
/// largest absolute residual `|R - R'|` over basis 4-tuples. Also checks
/// that `S(X,X,X,X)/4!` reproduces the holomorphic sectional curvature
/// `K(X,X)` on every basis vector. Exactly zero for Kähler-type input.
pub fn s_tensor_roundtrip(r: &AlgCurvTensor, j: &Matrix<Scalar>) -> Result<Scalar, FlatError> {
    verify_kahler_type(r, j)?;
    let m = r.m;
    // R with one slot J-rotated, contracted over the standard basis:
    // jr(a, b) = column b of J, i.e. Je_b = Σ_a J[a][b] e_a.
    let jcol = |b: usize| -> Vec<(usize, Scalar)> {
        (0..m)
            .filter_map(|a| {
                let v = j.at(a, b);
                (!v.is_zero()).then(|| (a, v.clone()))
            })
            .collect()
    };
    let jcols: Vec<Vec<(usize, Scalar)>> = (0..m).map(jcol).collect();

    // r_j(a, b, c, d) = R(e_a, Je_b, Je_c, e_d).
    let r_jj = |a: usize, b: usize, c: usize, d: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for (bb, jb) in &jcols[b] {
            for (cc, jc) in &jcols[c] {
                let v = r.at(a, *bb, *cc, d);
                if !v.is_zero() {
                    acc += jb * jc * v;
                }
            }
        }
        acc
    };

    let eight = rat(8, 1);
    let mut s = AlgCurvTensor::zeros(m);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    // 8 (R(X,JY,JU,V) + R(X,JU,JV,Y) + R(X,JV,JY,U))
                    let v = r_jj(a, b, c, d).clone() + r_jj(a, c, d, b) + r_jj(a, d, b, c);
                    s.set(a, b, c, d, &eight * &v);
                }
            }
        }
    }

    // Reconstruction residual.
    let s_jj = |a: usize, b: usize, c: usize, d: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for (bb, jb) in &jcols[b] {
            for (cc, jc) in &jcols[c] {
                let v = s.at(a, *bb, *cc, d);
                if !v.is_zero() {
                    acc += jb * jc * v;
                }
            }
        }
        acc
    };
    let s_j_last = |a: usize, b: usize, c: usize, d: usize| -> Scalar {
        // S(e_a, Je_b, e_c, Je_d)
        let mut acc = Scalar::zero();
        for (bb, jb) in &jcols[b] {
            for (dd, jd) in &jcols[d] {
                let v = s.at(a, *bb, c, *dd);
                if !v.is_zero() {
                    acc += jb * jd * v;
                }
            }
        }
        acc
    };

    let mut max_residual = Scalar::zero();
    let thirty_two = rat(32, 1);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let reconstructed = (s_jj(a, b, c, d) - s_j_last(a, b, c, d)) / &thirty_two;
                    let mut res = reconstructed - r.at(a, b, c, d);
                    if res < Scalar::zero() {
                        res = -res;
                    }
                    if res > max_residual {
                        max_residual = res;
                    }
                }
            }
        }
    }

    // Diagonal consistency S(X) = S(X,X,X,X)/4! = K(X,X) on basis vectors.
    let twenty_four = rat(24, 1);
    for a in 0..m {
        let mut x = vec![Scalar::zero(); m];
        x[a] = Scalar::one();
        let jx = j.mul_vec(&x);
        let k_diag = r.value(&x, &jx, &jx, &x);
        let s_diag = s.value(&x, &x, &x, &x) / &twenty_four;
        let mut res = s_diag - k_diag;
        if res < Scalar::zero() {
            res = -res;
        }
        if res > max_residual {
            max_residual = res;
        }
    }
    Ok(max_residual)
}
