//! Dense algebraic curvature tensors with exact components.

use num_traits::Zero;

use super::FlatError;
use crate::exact::{Matrix, Scalar};

/// Algebraic curvature tensor on `R^m` in the convention
/// `R(X,Y,U,V) := g(R_{X,Y}U, V)` with the standard dot product.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgCurvTensor {
    pub m: usize,
    comp: Vec<Scalar>,
}

impl AlgCurvTensor {
    pub fn zeros(m: usize) -> Self {
        AlgCurvTensor { m, comp: vec![Scalar::zero(); m * m * m * m] }
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let mut t = AlgCurvTensor::zeros(m);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let v = f(a, b, c, d);
                        t.set(a, b, c, d, v);
                    }
                }
            }
        }
        t
    }

    /// Constant sectional curvature `+1`:
    /// `R(X,Y,U,V) = g(X,V)g(Y,U) - g(X,U)g(Y,V)`.
    pub fn constant_curvature(m: usize) -> Self {
        AlgCurvTensor::from_fn(m, |a, b, c, d| {
            let mut v = Scalar::zero();
            if a == d && b == c {
                v += crate::exact::rat(1, 1);
            }
            if a == c && b == d {
                v -= crate::exact::rat(1, 1);
            }
            v
        })
    }

    /// Block sum of constant-curvature tensors on a partition of the
    /// coordinates (a product-of-spheres curvature tensor).
    pub fn product_of_spheres(m: usize, blocks: &[Vec<usize>]) -> Self {
        let mut block_of = vec![usize::MAX; m];
        for (k, b) in blocks.iter().enumerate() {
            for &i in b {
                block_of[i] = k;
            }
        }
        AlgCurvTensor::from_fn(m, |a, b, c, d| {
            if block_of[a] != block_of[b] || block_of[b] != block_of[c] || block_of[c] != block_of[d]
            {
                return Scalar::zero();
            }
            let mut v = Scalar::zero();
            if a == d && b == c {
                v += crate::exact::rat(1, 1);
            }
            if a == c && b == d {
                v -= crate::exact::rat(1, 1);
            }
            v
        })
    }

    /// The curvature tensor of a single skew endomorphism `W`:
    /// `R(X,Y,U,V) = 2 w(X,Y)w(U,V) + w(X,U)w(Y,V) - w(X,V)w(Y,U)` with
    /// `w(X,Y) = g(WX, Y)`. Satisfies all curvature symmetries and the
    /// first Bianchi identity for every skew `W`.
    pub fn from_skew(w: &Matrix<Scalar>) -> Self {
        let m = w.rows();
        let omega = |a: usize, b: usize| -> Scalar { w.at(b, a).clone() };
        AlgCurvTensor::from_fn(m, |a, b, c, d| {
            crate::exact::rat(2, 1) * omega(a, b) * omega(c, d) + omega(a, c) * omega(b, d)
                - omega(a, d) * omega(b, c)
        })
    }

    #[inline]
    fn idx(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * self.m + b) * self.m + c) * self.m + d
    }

    pub fn at(&self, a: usize, b: usize, c: usize, d: usize) -> &Scalar {
        &self.comp[self.idx(a, b, c, d)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, v: Scalar) {
        let i = self.idx(a, b, c, d);
        self.comp[i] = v;
    }

    pub fn add(&self, other: &AlgCurvTensor) -> AlgCurvTensor {
        assert_eq!(self.m, other.m);
        AlgCurvTensor {
            m: self.m,
            comp: self.comp.iter().zip(&other.comp).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> AlgCurvTensor {
        AlgCurvTensor { m: self.m, comp: self.comp.iter().map(|x| x * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comp.iter().all(Zero::is_zero)
    }

    /// Full contraction `R(X,Y,U,V)` on arbitrary vectors.
    pub fn value(&self, x: &[Scalar], y: &[Scalar], u: &[Scalar], v: &[Scalar]) -> Scalar {
        // Contract one slot at a time to stay O(m^4) overall.
        let m = self.m;
        let mut acc = Scalar::zero();
        for a in 0..m {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..m {
                if y[b].is_zero() {
                    continue;
                }
                let xy = &x[a] * &y[b];
                for c in 0..m {
                    if u[c].is_zero() {
                        continue;
                    }
                    let xyu = &xy * &u[c];
                    for d in 0..m {
                        if v[d].is_zero() {
                            continue;
                        }
                        let r = self.at(a, b, c, d);
                        if !r.is_zero() {
                            acc += &xyu * &v[d] * r;
                        }
                    }
                }
            }
        }
        acc
    }

    /// Endomorphism matrix of `R_{X,Y}`.
    pub fn endo(&self, x: &[Scalar], y: &[Scalar]) -> Matrix<Scalar> {
        let m = self.m;
        let mut out = Matrix::zeros(m, m);
        for c in 0..m {
            for d in 0..m {
                let mut acc = Scalar::zero();
                for a in 0..m {
                    if x[a].is_zero() {
                        continue;
                    }
                    for b in 0..m {
                        if y[b].is_zero() {
                            continue;
                        }
                        let r = self.at(a, b, c, d);
                        if !r.is_zero() {
                            acc += &x[a] * &y[b] * r;
                        }
                    }
                }
                out.set(d, c, acc);
            }
        }
        out
    }

    /// Checks antisymmetry in the first and last pairs, pair symmetry, and
    /// the first Bianchi identity, all exactly.
    pub fn verify_curvature_symmetries(&self) -> Result<(), FlatError> {
        let m = self.m;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let r = self.at(a, b, c, d);
                        if *r != -self.at(b, a, c, d).clone()
                            || *r != -self.at(a, b, d, c).clone()
                            || r != self.at(c, d, a, b)
                        {
                            return Err(FlatError::InvalidTensor(
                                "curvature symmetries violated".into(),
                            ));
                        }
                        let bianchi = self.at(a, b, c, d).clone()
                            + self.at(b, c, a, d)
                            + self.at(c, a, b, d);
                        if !bianchi.is_zero() {
                            return Err(FlatError::InvalidTensor(
                                "first Bianchi identity violated".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Curvature tensor of hyperkähler type: all curvature symmetries, the
/// first Bianchi identity, and `[R_{X,Y}, F] = 0` for `F ∈ {I, J, K}`.
/// A vanishing Ricci trace is not required.
#[derive(Clone, Debug)]
pub struct HyperTypeCurvature {
    pub tensor: AlgCurvTensor,
}

impl HyperTypeCurvature {
    /// Validates the defining invariants against the model's quaternionic
    /// triple before accepting the tensor.
    pub fn new(
        tensor: AlgCurvTensor,
        i_mat: &Matrix<Scalar>,
        j_mat: &Matrix<Scalar>,
        k_mat: &Matrix<Scalar>,
    ) -> Result<Self, FlatError> {
        tensor.verify_curvature_symmetries()?;
        let m = tensor.m;
        let basis: Vec<Vec<Scalar>> = (0..m)
            .map(|i| {
                let mut v = vec![Scalar::zero(); m];
                v[i] = crate::exact::rat(1, 1);
                v
            })
            .collect();
        for a in 0..m {
            for b in (a + 1)..m {
                let e = tensor.endo(&basis[a], &basis[b]);
                for f in [i_mat, j_mat, k_mat] {
                    if e.mul_mat(f) != f.mul_mat(&e) {
                        return Err(FlatError::InvalidTensor(
                            "hyperkähler-type tensor must commute with I, J, K".into(),
                        ));
                    }
                }
            }
        }
        Ok(HyperTypeCurvature { tensor })
    }
}
