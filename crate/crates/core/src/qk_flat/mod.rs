//! Flat-model tensor laboratory: the closed-form curvature tensors of the
//! quaternionic projective space on `R^{4n}` and of the complex projective
//! space on the twistor tangent model `R^{4n} ⊕ R²`, with exact
//! verification of the bisectional-curvature identities and the Kähler
//! reconstruction algebra.

mod kahler;
mod lines;
mod tensor;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rat, Matrix, Scalar};

pub use kahler::{bihol2_residual, kahler_bisec, s_tensor_roundtrip, standard_complex_structure};
pub use lines::k_h_lines;
pub use tensor::{AlgCurvTensor, HyperTypeCurvature};

#[derive(Debug, Error)]
pub enum FlatError {
    #[error("invalid tensor: {0}")]
    InvalidTensor(String),
    #[error("dimension mismatch: {0}")]
    ShapeMismatch(String),
    #[error("quaternionic dimension must be at least {0}")]
    DimensionTooSmall(usize),
    #[error("scale parameter must be positive")]
    NonPositiveScale,
    #[error("zero seed vector")]
    ZeroSeed,
    #[error("tensor does not commute with the complex structure")]
    NotKahler,
}

/// The flat model of quaternionic dimension `n`: `R^{4n}` with the standard
/// left-multiplication triple `I, J, K`, the dot-product metric, a free
/// positive scale `κ`, and an optional hyperkähler-type summand.
#[derive(Clone, Debug)]
pub struct FlatQKModel {
    pub n: usize,
    pub dim: usize,
    pub kappa: Scalar,
    i_mat: Matrix<Scalar>,
    j_mat: Matrix<Scalar>,
    k_mat: Matrix<Scalar>,
    r_hyper: Option<HyperTypeCurvature>,
}

/// Tangent vector of the twistor model: a base vector in `R^{4n}` plus
/// fiber coordinates over `span{J, K}` at the base point `(p, I)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistorVector {
    pub base: Vec<Scalar>,
    pub fiber: [Scalar; 2],
}

impl TwistorVector {
    pub fn new(base: Vec<Scalar>, fiber: [Scalar; 2]) -> Self {
        TwistorVector { base, fiber }
    }

    pub fn horizontal(base: Vec<Scalar>) -> Self {
        TwistorVector { base, fiber: [Scalar::zero(), Scalar::zero()] }
    }

    pub fn vertical(dim: usize, fiber: [Scalar; 2]) -> Self {
        TwistorVector { base: vec![Scalar::zero(); dim], fiber }
    }

    fn concat(&self) -> Vec<Scalar> {
        let mut v = self.base.clone();
        v.push(self.fiber[0].clone());
        v.push(self.fiber[1].clone());
        v
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

/// `(A ∧ B) C = g(A,C) B - g(B,C) A`, accumulated with weights into `acc`.
fn wedge_apply(acc: &mut [Scalar], a: &[Scalar], b: &[Scalar], c: &[Scalar], ga: &[Scalar]) {
    // `ga` holds the metric weights: g(x, y) = Σ x_i y_i ga_i.
    let mut gac = Scalar::zero();
    let mut gbc = Scalar::zero();
    for i in 0..a.len() {
        if !c[i].is_zero() {
            let w = &c[i] * &ga[i];
            gac += &a[i] * &w;
            gbc += &b[i] * &w;
        }
    }
    axpy(acc, &gac, b);
    gbc = -gbc;
    axpy(acc, &gbc, a);
}

impl FlatQKModel {
    /// Model with the default scale `κ = 16n(n+2)`, which normalizes the
    /// projective-space prefactor to 1.
    pub fn new(n: usize) -> Result<Self, FlatError> {
        let kappa = rat((16 * n * (n + 2)) as i64, 1);
        FlatQKModel::with_kappa(n, kappa)
    }

    pub fn with_kappa(n: usize, kappa: Scalar) -> Result<Self, FlatError> {
        if n < 1 {
            return Err(FlatError::DimensionTooSmall(1));
        }
        if kappa <= Scalar::zero() {
            return Err(FlatError::NonPositiveScale);
        }
        let dim = 4 * n;
        // Left quaternion multiplication per coordinate block (1, i, j, k).
        let mut i_mat = Matrix::zeros(dim, dim);
        let mut j_mat = Matrix::zeros(dim, dim);
        let mut k_mat = Matrix::zeros(dim, dim);
        for q in 0..n {
            let o = 4 * q;
            let one = Scalar::one;
            // i: 1↦i, i↦-1, j↦k, k↦-j
            i_mat.set(o + 1, o, one());
            i_mat.set(o, o + 1, -one());
            i_mat.set(o + 3, o + 2, one());
            i_mat.set(o + 2, o + 3, -one());
            // j: 1↦j, i↦-k, j↦-1, k↦i
            j_mat.set(o + 2, o, one());
            j_mat.set(o + 3, o + 1, -one());
            j_mat.set(o, o + 2, -one());
            j_mat.set(o + 1, o + 3, one());
            // k: 1↦k, i↦j, j↦-i, k↦-1
            k_mat.set(o + 3, o, one());
            k_mat.set(o + 2, o + 1, one());
            k_mat.set(o + 1, o + 2, -one());
            k_mat.set(o, o + 3, -one());
        }
        Ok(FlatQKModel { n, dim, kappa, i_mat, j_mat, k_mat, r_hyper: None })
    }

    /// Installs a hyperkähler-type summand after validating its invariants.
    pub fn with_hyper(mut self, tensor: AlgCurvTensor) -> Result<Self, FlatError> {
        if tensor.m != self.dim {
            return Err(FlatError::ShapeMismatch(format!(
                "tensor on R^{} vs model R^{}",
                tensor.m, self.dim
            )));
        }
        let h = HyperTypeCurvature::new(tensor, &self.i_mat, &self.j_mat, &self.k_mat)?;
        self.r_hyper = Some(h);
        Ok(self)
    }

    pub fn hyper(&self) -> Option<&HyperTypeCurvature> {
        self.r_hyper.as_ref()
    }

    pub fn i_mat(&self) -> &Matrix<Scalar> {
        &self.i_mat
    }

    pub fn j_mat(&self) -> &Matrix<Scalar> {
        &self.j_mat
    }

    pub fn k_mat(&self) -> &Matrix<Scalar> {
        &self.k_mat
    }

    // The quaternion actions are signed block permutations; applying them
    // directly avoids dense matrix-vector products in the hot loops.
    pub fn apply_i(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.dim);
        for q in 0..self.n {
            let o = 4 * q;
            out.push(-v[o + 1].clone());
            out.push(v[o].clone());
            out.push(-v[o + 3].clone());
            out.push(v[o + 2].clone());
        }
        out
    }

    pub fn apply_j(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.dim);
        for q in 0..self.n {
            let o = 4 * q;
            out.push(-v[o + 2].clone());
            out.push(v[o + 3].clone());
            out.push(v[o].clone());
            out.push(-v[o + 1].clone());
        }
        out
    }

    pub fn apply_k(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.dim);
        for q in 0..self.n {
            let o = 4 * q;
            out.push(-v[o + 3].clone());
            out.push(-v[o + 2].clone());
            out.push(v[o + 1].clone());
            out.push(v[o].clone());
        }
        out
    }

    /// Prefactor `κ / (16 n (n+2))`.
    pub fn c_scale(&self) -> Scalar {
        &self.kappa / rat((16 * self.n * (self.n + 2)) as i64, 1)
    }

    /// Fiber weight of the twistor metric, `16 n (n+2) / κ`.
    pub fn fiber_weight(&self) -> Scalar {
        rat((16 * self.n * (self.n + 2)) as i64, 1) / &self.kappa
    }

    /// `R^{HP}_{X,Y}` applied to `U` (the projective-space tensor of
    /// `R^{4n}`):
    /// `-c [ X∧Y + IX∧IY + JX∧JY + KX∧KY
    ///       + 2g(IX,Y) I + 2g(JX,Y) J + 2g(KX,Y) K ] U`.
    pub fn r_hp_apply(&self, x: &[Scalar], y: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        let ones = vec![Scalar::one(); self.dim];
        let mut acc = vec![Scalar::zero(); self.dim];
        let ix = self.apply_i(x);
        let iy = self.apply_i(y);
        let jx = self.apply_j(x);
        let jy = self.apply_j(y);
        let kx = self.apply_k(x);
        let ky = self.apply_k(y);
        wedge_apply(&mut acc, x, y, u, &ones);
        wedge_apply(&mut acc, &ix, &iy, u, &ones);
        wedge_apply(&mut acc, &jx, &jy, u, &ones);
        wedge_apply(&mut acc, &kx, &ky, u, &ones);
        let two = rat(2, 1);
        let ci = &two * &dot(&ix, y);
        let cj = &two * &dot(&jx, y);
        let ck = &two * &dot(&kx, y);
        axpy(&mut acc, &ci, &self.apply_i(u));
        axpy(&mut acc, &cj, &self.apply_j(u));
        axpy(&mut acc, &ck, &self.apply_k(u));
        let neg_c = -self.c_scale();
        acc.into_iter().map(|v| v * &neg_c).collect()
    }

    /// The endomorphism `R^{HP}_{X,Y}` as a matrix.
    pub fn r_hp(&self, x: &[Scalar], y: &[Scalar]) -> Matrix<Scalar> {
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim);
        for c in 0..self.dim {
            let mut e = vec![Scalar::zero(); self.dim];
            e[c] = Scalar::one();
            cols.push(self.r_hp_apply(x, y, &e));
        }
        Matrix::from_fn(self.dim, self.dim, |r, c| cols[c][r].clone())
    }

    /// `R(X,Y,U,V) = g(R_{X,Y}U, V)` with `R = R^{HP} + R^{hyper}`.
    pub fn r_total_value(
        &self,
        x: &[Scalar],
        y: &[Scalar],
        u: &[Scalar],
        v: &[Scalar],
    ) -> Scalar {
        let mut val = dot(&self.r_hp_apply(x, y, u), v);
        if let Some(h) = &self.r_hyper {
            val += h.tensor.value(x, y, u, v);
        }
        val
    }

    /// The endomorphism `R_{X,Y}` of the full tensor `R^{HP} + R^{hyper}`.
    pub fn r_total_endo(&self, x: &[Scalar], y: &[Scalar]) -> Matrix<Scalar> {
        let mut m = self.r_hp(x, y);
        if let Some(h) = &self.r_hyper {
            m = m.add_mat(&h.tensor.endo(x, y));
        }
        m
    }

    /// Twistor metric weights: 1 on the base block, `16n(n+2)/κ` on the
    /// two fiber coordinates.
    fn gz_weights(&self) -> Vec<Scalar> {
        let mut w = vec![Scalar::one(); self.dim + 2];
        let fw = self.fiber_weight();
        w[self.dim] = fw.clone();
        w[self.dim + 1] = fw;
        w
    }

    pub fn gz(&self, a: &TwistorVector, b: &TwistorVector) -> Scalar {
        dot(&a.base, &b.base)
            + self.fiber_weight()
                * (&a.fiber[0] * &b.fiber[0] + &a.fiber[1] * &b.fiber[1])
    }

    /// `I^Z (X ⊕ x) = IX ⊕ Ix`, the fiber rotated by a quarter turn.
    pub fn apply_iz(&self, a: &TwistorVector) -> TwistorVector {
        TwistorVector {
            base: self.apply_i(&a.base),
            fiber: [-a.fiber[1].clone(), a.fiber[0].clone()],
        }
    }

    fn apply_iz_flat(&self, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = self.apply_i(&v[..d]);
        out.push(-v[d + 1].clone());
        out.push(v[d].clone());
        out
    }

    /// `R^{CP}_{A,B}` applied to a twistor vector `U`:
    /// `-c [ A ∧ᶻ B + I^Z A ∧ᶻ I^Z B + 2 g^Z(I^Z A, B) I^Z ] U`.
    pub fn r_cp_apply(&self, a: &TwistorVector, b: &TwistorVector, u: &TwistorVector) -> TwistorVector {
        let wz = self.gz_weights();
        let af = a.concat();
        let bf = b.concat();
        let uf = u.concat();
        let iza = self.apply_iz_flat(&af);
        let izb = self.apply_iz_flat(&bf);
        let mut acc = vec![Scalar::zero(); self.dim + 2];
        wedge_apply(&mut acc, &af, &bf, &uf, &wz);
        wedge_apply(&mut acc, &iza, &izb, &uf, &wz);
        let mut giab = Scalar::zero();
        for i in 0..self.dim + 2 {
            giab += &iza[i] * &bf[i] * &wz[i];
        }
        let coeff = rat(2, 1) * giab;
        axpy(&mut acc, &coeff, &self.apply_iz_flat(&uf));
        let neg_c = -self.c_scale();
        let scaled: Vec<Scalar> = acc.into_iter().map(|v| v * &neg_c).collect();
        TwistorVector {
            base: scaled[..self.dim].to_vec(),
            fiber: [scaled[self.dim].clone(), scaled[self.dim + 1].clone()],
        }
    }

    /// The endomorphism `R^{CP}_{A,B}` of `R^{4n} ⊕ R²` as a matrix.
    pub fn r_cp(&self, a: &TwistorVector, b: &TwistorVector) -> Matrix<Scalar> {
        let full = self.dim + 2;
        let mut cols = Vec::with_capacity(full);
        for c in 0..full {
            let mut e = vec![Scalar::zero(); full];
            e[c] = Scalar::one();
            let u = TwistorVector {
                base: e[..self.dim].to_vec(),
                fiber: [e[self.dim].clone(), e[self.dim + 1].clone()],
            };
            cols.push(self.r_cp_apply(a, b, &u).concat());
        }
        Matrix::from_fn(full, full, |r, c| cols[c][r].clone())
    }

    /// Holomorphic bisectional curvature of the projective-space tensor on
    /// the twistor model: `K^{CP}(A,B) = g^Z(R^{CP}_{A, I^Z A} I^Z B, B)`.
    pub fn k_cp(&self, a: &TwistorVector, b: &TwistorVector) -> Scalar {
        let iza = self.apply_iz(a);
        let izb = self.apply_iz(b);
        let r = self.r_cp_apply(a, &iza, &izb);
        self.gz(&r, b)
    }

    /// Holomorphic bisectional curvature of the full twistor tensor
    /// `R^Z = R^{hyper}(horizontal) + R^{CP}`: the hyperkähler part acts on
    /// base components only and produces no fiber component.
    pub fn k_z(&self, a: &TwistorVector, b: &TwistorVector) -> Scalar {
        let mut val = self.k_cp(a, b);
        if let Some(h) = &self.r_hyper {
            let ix = self.apply_i(&a.base);
            let iy = self.apply_i(&b.base);
            val += h.tensor.value(&a.base, &ix, &iy, &b.base);
        }
        val
    }

    /// Quaternionic bisectional curvature of the flat model:
    /// `K_{H,I}(X,Y) = R(X,IX,IY,Y) + κ/(8n(n+2)) (g(JX,Y)² + g(KX,Y)²)`
    /// with `R = R^{HP} + R^{hyper}`.
    pub fn k_bisec(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let ix = self.apply_i(x);
        let iy = self.apply_i(y);
        let mut val = self.r_total_value(x, &ix, &iy, y);
        let gj = dot(&self.apply_j(x), y);
        let gk = dot(&self.apply_k(x), y);
        val += self.kappa.clone() / rat((8 * self.n * (self.n + 2)) as i64, 1)
            * (&gj * &gj + &gk * &gk);
        val
    }

    /// `K_{H,I}` with an explicit orthonormal frame `(J', K')` of the
    /// complement of `I`; the value does not depend on the choice.
    pub fn k_bisec_with_frame(
        &self,
        x: &[Scalar],
        y: &[Scalar],
        j_mat: &Matrix<Scalar>,
        k_mat: &Matrix<Scalar>,
    ) -> Scalar {
        let ix = self.apply_i(x);
        let iy = self.apply_i(y);
        let mut val = self.r_total_value(x, &ix, &iy, y);
        let gj = dot(&j_mat.mul_vec(x), y);
        let gk = dot(&k_mat.mul_vec(x), y);
        val += self.kappa.clone() / rat((8 * self.n * (self.n + 2)) as i64, 1)
            * (&gj * &gj + &gk * &gk);
        val
    }

    /// Residual of the twistor bisectional identity
    /// `K^Z(A,B) = K_{H,I}(X,Y) + K^{CP}(A,B) - K^{CP}(X⊕0, Y⊕0)`;
    /// vanishes identically for every valid hyperkähler summand.
    pub fn twistor_identity_residual(&self, a: &TwistorVector, b: &TwistorVector) -> Scalar {
        let lhs = self.k_z(a, b);
        let horizontal_a = TwistorVector::horizontal(a.base.clone());
        let horizontal_b = TwistorVector::horizontal(b.base.clone());
        let rhs = self.k_bisec(&a.base, &b.base) + self.k_cp(a, b)
            - self.k_cp(&horizontal_a, &horizontal_b);
        lhs - rhs
    }

    /// `K^{CP}(A,B) - K^{CP}(X⊕0,Y⊕0)` twice: once via the curvature
    /// tensor, once as the expanded sum of squares with the scaling factor
    /// `Λ = γ(x,x)/g(X,X)` (squares expanded so only `Λ^{±1}` appears).
    /// Both are exact and equal; the value is non-negative for all inputs.
    pub fn cp_difference(&self, a: &TwistorVector, b: &TwistorVector) -> (Scalar, Scalar) {
        let horizontal_a = TwistorVector::horizontal(a.base.clone());
        let horizontal_b = TwistorVector::horizontal(b.base.clone());
        let value = self.k_cp(a, b) - self.k_cp(&horizontal_a, &horizontal_b);

        let gamma = |x: &[Scalar; 2], y: &[Scalar; 2]| -> Scalar {
            &x[0] * &y[0] + &x[1] * &y[1]
        };
        let i_fib = |x: &[Scalar; 2]| -> [Scalar; 2] { [-x[1].clone(), x[0].clone()] };

        let x = &a.base;
        let y = &b.base;
        let xf = &a.fiber;
        let yf = &b.fiber;
        let gxx = dot(x, x);
        let gyy = dot(y, y);
        let gxy = dot(x, y);
        let gixy = dot(&self.apply_i(x), y);
        let gfxx = gamma(xf, xf);
        let gfyy = gamma(yf, yf);
        let gfxy = gamma(xf, yf);
        let gfixy = gamma(&i_fib(xf), yf);
        let big = rat((64 * self.n * (self.n + 2)) as i64, 1) / &self.kappa;
        let two = rat(2, 1);
        let four = rat(4, 1);

        let sos = if !gfxx.is_zero() && !gxx.is_zero() {
            // Λ-expanded sum of squares: 2(Λ^{1/2} a + Λ^{-1/2} b)² is
            // evaluated as 2Λa² + 4ab + 2Λ⁻¹b², so no square roots appear.
            let lambda = &gfxx / &gxx;
            let y_perp = &gyy - (&gxy * &gxy + &gixy * &gixy) / &gxx;
            let sq = |p: &Scalar, q: &Scalar| -> Scalar {
                &two * &lambda * p * p
                    + &four * p * q
                    + &two * (q * q) / &lambda
            };
            &big * &gfxx * &gfyy + &two * &gfxx * &y_perp + sq(&gxy, &gfxy) + sq(&gixy, &gfixy)
        } else {
            // Degenerate case x = 0 or X = 0: the direct expansion, already
            // a sum of non-negative terms.
            &big * &gfxx * &gfyy
                + &two * &gfxx * &gyy
                + &two * &gxx * &gfyy
                + &four * &gfxy * &gxy
                + &four * &gfixy * &gixy
        };
        (value, sos)
    }

    /// Residual of the bisectional-vs-sectional relation on the flat model:
    /// `g(R_{X,IX}IY,Y) + κ/(2n(n+2)) (g(JX,Y)² + g(KX,Y)²)
    ///  - g(R_{X,Y}Y,X) - g(R_{X,IY}IY,X)`; identically zero.
    pub fn qbs_residual(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let ix = self.apply_i(x);
        let iy = self.apply_i(y);
        let gj = dot(&self.apply_j(x), y);
        let gk = dot(&self.apply_k(x), y);
        let lhs = self.r_total_value(x, &ix, &iy, y)
            + self.kappa.clone() / rat((2 * self.n * (self.n + 2)) as i64, 1)
                * (&gj * &gj + &gk * &gk);
        let rhs = self.r_total_value(x, y, y, x) + self.r_total_value(x, &iy, &iy, x);
        lhs - rhs
    }

    /// The commutator identity behind the previous relation:
    /// `[R_{X,Y}, I] - κ/(4n(n+2)) (g(JX,Y) K - g(KX,Y) J)`, as a matrix;
    /// identically the zero matrix.
    pub fn qbs_commutator_residual(&self, x: &[Scalar], y: &[Scalar]) -> Matrix<Scalar> {
        let r = self.r_total_endo(x, y);
        let comm = r.mul_mat(&self.i_mat).sub_mat(&self.i_mat.mul_mat(&r));
        let gj = dot(&self.apply_j(x), y);
        let gk = dot(&self.apply_k(x), y);
        let scale = self.kappa.clone() / rat((4 * self.n * (self.n + 2)) as i64, 1);
        let expected = self
            .k_mat
            .scale(&(&scale * &gj))
            .sub_mat(&self.j_mat.scale(&(&scale * &gk)));
        comm.sub_mat(&expected)
    }
}

#[cfg(test)]
mod tests;
