//! The curvature endomorphism `q(R) = ½ Σ (E_μ ∧ E_ν)_* ∘ R_{E_μ,E_ν}` on
//! exterior and symmetric powers, its sphere-moment pairing, and exact
//! positivity checks.
//!
//! Conventions: `(A)_*` acts on covectors by `(A·ξ)(X) = -ξ(AX)` and is
//! extended to tensor powers as a derivation; the wedge endomorphism is
//! `(A ∧ B)C = g(A,C)B - g(B,C)A`. With these choices the integral pairing
//! `g̃(q(R)ψ₁, ψ₂) = ∮ R(X, dψ̂₁, dψ̂₂, X)` holds exactly over normalized
//! sphere moments, which is what pins the sign of the dual action.

mod poly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{psd_check, rat, Matrix, Scalar};
use crate::qk_flat::AlgCurvTensor;
use crate::sampling::RationalStream;
pub use poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurvopError {
    #[error("representation dimension {0} exceeds the supported bound 10000")]
    DimensionOverflow(usize),
    #[error("tensor degrees do not match: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("base dimensions do not match: {0} vs {1}")]
    BaseMismatch(usize, usize),
    #[error("degree must be at least 1")]
    DegreeTooSmall,
}

/// Which associated bundle the operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Exterior,
    Symmetric,
}

/// An exterior or symmetric power of the (co)tangent space of `R^m`.
#[derive(Clone, Debug)]
pub struct BundleRep {
    pub kind: RepKind,
    pub k: u32,
    pub m: usize,
    /// Basis index sets: sorted `k`-subsets (exterior) or sorted
    /// `k`-multisets (symmetric) of `{0..m}`.
    basis: Vec<Vec<usize>>,
    index: std::collections::BTreeMap<Vec<usize>, usize>,
}

impl BundleRep {
    pub fn new(kind: RepKind, k: u32, m: usize) -> Result<Self, CurvopError> {
        if k == 0 {
            return Err(CurvopError::DegreeTooSmall);
        }
        let mut basis = Vec::new();
        let mut current = Vec::new();
        enumerate(kind, k as usize, m, 0, &mut current, &mut basis);
        if basis.len() > 10_000 {
            return Err(CurvopError::DimensionOverflow(basis.len()));
        }
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        Ok(BundleRep { kind, k, m, basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, key: &[usize]) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Multiplicity weight of a basis element in the standard tensor inner
    /// product: `k!/∏(count_i!)` for multisets, `1` for subsets. The Gram
    /// matrix of the component basis is the diagonal of these weights.
    pub fn weight(&self, idx: usize) -> Scalar {
        match self.kind {
            RepKind::Exterior => Scalar::one(),
            RepKind::Symmetric => {
                let mut counts = std::collections::BTreeMap::new();
                for &i in &self.basis[idx] {
                    *counts.entry(i).or_insert(0u64) += 1;
                }
                let mut numer = BigInt::one();
                for j in 1..=(self.k as u64) {
                    numer *= BigInt::from(j);
                }
                let mut denom = BigInt::one();
                for c in counts.values() {
                    for j in 1..=*c {
                        denom *= BigInt::from(j);
                    }
                }
                Scalar::new(numer, denom)
            }
        }
    }

    /// Matrix of the induced action of a skew endomorphism `a` of `R^m`,
    /// acting on covector components by `(A·ξ)(X) = -ξ(AX)` extended as a
    /// derivation.
    pub fn action_matrix(&self, a: &Matrix<Scalar>) -> Matrix<Scalar> {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (col, key) in self.basis.iter().enumerate() {
            for slot in 0..key.len() {
                let old = key[slot];
                for new in 0..self.m {
                    let c = a.at(new, old);
                    if c.is_zero() {
                        continue;
                    }
                    let mut replaced = key.clone();
                    replaced[slot] = new;
                    let (row, sign) = match self.kind {
                        RepKind::Symmetric => {
                            replaced.sort_unstable();
                            (self.index_of(&replaced), 1i64)
                        }
                        RepKind::Exterior => {
                            if replaced.iter().filter(|&&x| x == new).count() > 1 {
                                (None, 1)
                            } else {
                                let sign = sort_sign(&mut replaced);
                                (self.index_of(&replaced), sign)
                            }
                        }
                    };
                    if let Some(row) = row {
                        let delta = -(c * rat(sign, 1));
                        let cur = out.at(row, col).clone();
                        out.set(row, col, cur + delta);
                    }
                }
            }
        }
        out
    }
}

fn enumerate(
    kind: RepKind,
    k: usize,
    m: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for i in start..m {
        current.push(i);
        let next = match kind {
            RepKind::Exterior => i + 1,
            RepKind::Symmetric => i,
        };
        enumerate(kind, k, m, next, current, out);
        current.pop();
    }
}

fn sort_sign(v: &mut [usize]) -> i64 {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// Wedge endomorphism `E_μ ∧ E_ν` of `R^m`.
fn wedge_endo(m: usize, mu: usize, nu: usize) -> Matrix<Scalar> {
    let mut w = Matrix::zeros(m, m);
    w.set(nu, mu, Scalar::one());
    w.set(mu, nu, -Scalar::one());
    w
}

/// The curvature endomorphism `q(R)` as an operator matrix on the component
/// basis of the representation. The operator is symmetric with respect to
/// the weighted inner product of the basis; `q_form` carries the literally
/// symmetric bilinear-form matrix.
pub fn q_of_r(r: &AlgCurvTensor, rep: &BundleRep) -> Result<Matrix<Scalar>, CurvopError> {
    if r.m != rep.m {
        return Err(CurvopError::BaseMismatch(r.m, rep.m));
    }
    let d = rep.dim();
    let mut acc = Matrix::zeros(d, d);
    let basis_vec = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); rep.m];
        v[i] = Scalar::one();
        v
    };
    for mu in 0..rep.m {
        for nu in 0..rep.m {
            if mu == nu {
                continue;
            }
            let r_endo = r.endo(&basis_vec(mu), &basis_vec(nu));
            if r_endo.is_zero() {
                continue;
            }
            let lhs = rep.action_matrix(&wedge_endo(rep.m, mu, nu));
            let rhs = rep.action_matrix(&r_endo);
            acc = acc.add_mat(&lhs.mul_mat(&rhs));
        }
    }
    Ok(acc.scale(&rat(1, 2)))
}

/// The symmetric bilinear-form matrix `⟨q(R)·,·⟩` over the component basis
/// (the operator matrix conjugated by the diagonal Gram weights).
pub fn q_form(r: &AlgCurvTensor, rep: &BundleRep) -> Result<Matrix<Scalar>, CurvopError> {
    let q = q_of_r(r, rep)?;
    let d = rep.dim();
    let weights: Vec<Scalar> = (0..d).map(|i| rep.weight(i)).collect();
    Ok(Matrix::from_fn(d, d, |i, j| &weights[i] * q.at(i, j)))
}

/// Symmetric tensor of degree `k` on `R^m`, stored over the multiset basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTensor {
    pub m: usize,
    pub k: u32,
    pub comp: Vec<Scalar>,
}

impl SymTensor {
    pub fn zeros(rep: &BundleRep) -> Self {
        assert_eq!(rep.kind, RepKind::Symmetric);
        SymTensor { m: rep.m, k: rep.k, comp: vec![Scalar::zero(); rep.dim()] }
    }

    /// The metric as a symmetric 2-tensor.
    pub fn metric(rep: &BundleRep) -> Self {
        assert_eq!((rep.kind, rep.k), (RepKind::Symmetric, 2));
        let mut t = SymTensor::zeros(rep);
        for (i, key) in rep.basis().iter().enumerate() {
            if key[0] == key[1] {
                t.comp[i] = Scalar::one();
            }
        }
        t
    }

    pub fn random(rep: &BundleRep, stream: &mut RationalStream) -> Self {
        assert_eq!(rep.kind, RepKind::Symmetric);
        SymTensor { m: rep.m, k: rep.k, comp: stream.next_vector(rep.dim()) }
    }

    /// The polynomial `ψ̂(X) = ψ(X,…,X)/k!`.
    pub fn hat_polynomial(&self, rep: &BundleRep) -> Poly {
        let mut p = Poly::zero();
        let mut kfact = BigInt::one();
        for j in 1..=(self.k as u64) {
            kfact *= BigInt::from(j);
        }
        for (i, key) in rep.basis().iter().enumerate() {
            if self.comp[i].is_zero() {
                continue;
            }
            let mut exp = vec![0u32; self.m];
            for &v in key {
                exp[v] += 1;
            }
            // mult(M)/k! = 1/∏ count_i!.
            let coeff = &self.comp[i] * rep.weight(i) / Scalar::from(kfact.clone());
            p.add_term(exp, coeff);
        }
        p
    }
}

/// Integral pairing `g̃(φ, ψ) = ∮ φ̂ ψ̂` over the normalized sphere measure.
pub fn moment_pairing(rep: &BundleRep, phi: &SymTensor, psi: &SymTensor) -> Scalar {
    phi.hat_polynomial(rep).mul(&psi.hat_polynomial(rep)).sphere_integral(rep.m)
}

/// Residual of the integral identity
/// `g̃(q(R)ψ₁, ψ₂) = ∮ R(X, dψ̂₁(X), dψ̂₂(X), X)`;
/// identically zero for every algebraic curvature tensor.
pub fn weitzenboeck_integral_residual(
    r: &AlgCurvTensor,
    rep: &BundleRep,
    psi1: &SymTensor,
    psi2: &SymTensor,
) -> Result<Scalar, CurvopError> {
    if psi1.k != psi2.k {
        return Err(CurvopError::DegreeMismatch(psi1.k, psi2.k));
    }
    if r.m != rep.m || psi1.m != rep.m || psi2.m != rep.m {
        return Err(CurvopError::BaseMismatch(r.m, rep.m));
    }
    let q = q_of_r(r, rep)?;
    let q_psi1 = SymTensor { m: psi1.m, k: psi1.k, comp: q.mul_vec(&psi1.comp) };
    let lhs = moment_pairing(rep, &q_psi1, psi2);

    let hat1 = psi1.hat_polynomial(rep);
    let hat2 = psi2.hat_polynomial(rep);
    let grads1: Vec<Poly> = (0..rep.m).map(|v| hat1.diff(v)).collect();
    let grads2: Vec<Poly> = (0..rep.m).map(|v| hat2.diff(v)).collect();
    let mut integrand = Poly::zero();
    for b in 0..rep.m {
        if grads1[b].terms.is_empty() {
            continue;
        }
        for c in 0..rep.m {
            if grads2[c].terms.is_empty() {
                continue;
            }
            // P_{bc}(X) = Σ_{a,d} R(a,b,c,d) X_a X_d.
            let mut pbc = Poly::zero();
            for a in 0..rep.m {
                for d in 0..rep.m {
                    let coeff = r.at(a, b, c, d);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut exp = vec![0u32; rep.m];
                    exp[a] += 1;
                    exp[d] += 1;
                    pbc.add_term(exp, coeff.clone());
                }
            }
            if pbc.terms.is_empty() {
                continue;
            }
            let prod = grads1[b].mul(&grads2[c]).mul(&pbc);
            for (e, cfc) in prod.terms {
                integrand.add_term(e, cfc);
            }
        }
    }
    let rhs = integrand.sphere_integral(rep.m);
    Ok(lhs - rhs)
}

/// How the non-negativity of the input's sectional curvature was
/// established: the shipped sample families are certified in closed form,
/// everything else is sampled only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionalStatus {
    /// All sampled planes had non-negative sectional numerator.
    SampledNonNegative,
    /// Some sampled plane was negative; the check still ran.
    SampledIndefinite,
}

/// Positive-semidefiniteness of `q(R)` on the representation, decided
/// exactly on the weighted form matrix, together with a sampled sectional
/// sign report for the input.
pub fn nonneg_spectrum_check(
    r: &AlgCurvTensor,
    rep: &BundleRep,
) -> Result<(bool, SectionalStatus), CurvopError> {
    let form = q_form(r, rep)?;
    let psd = psd_check(&form).expect("q-form is square and symmetric");

    let mut status = SectionalStatus::SampledNonNegative;
    let mut stream = RationalStream::new(0x5345_4354);
    let mut planes: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    for i in 0..rep.m {
        for j in (i + 1)..rep.m {
            let mut x = vec![Scalar::zero(); rep.m];
            let mut y = vec![Scalar::zero(); rep.m];
            x[i] = Scalar::one();
            y[j] = Scalar::one();
            planes.push((x, y));
        }
    }
    for _ in 0..24 {
        planes.push((
            stream.next_nonzero_vector(rep.m),
            stream.next_nonzero_vector(rep.m),
        ));
    }
    for (x, y) in planes {
        if r.value(&x, &y, &y, &x) < Scalar::zero() {
            status = SectionalStatus::SampledIndefinite;
            break;
        }
    }
    Ok((psd, status))
}

/// Metric-trace contraction `Sym^k → Sym^{k-2}` as a matrix over the
/// multiset bases; `q(R)` commutes with it for every curvature tensor.
pub fn trace_map(rep_k: &BundleRep, rep_km2: &BundleRep) -> Matrix<Scalar> {
    assert_eq!(rep_k.kind, RepKind::Symmetric);
    assert_eq!(rep_km2.kind, RepKind::Symmetric);
    assert_eq!(rep_k.k, rep_km2.k + 2);
    let mut out = Matrix::zeros(rep_km2.dim(), rep_k.dim());
    for (row, key) in rep_km2.basis().iter().enumerate() {
        for mu in 0..rep_k.m {
            let mut lifted = key.clone();
            lifted.push(mu);
            lifted.push(mu);
            lifted.sort_unstable();
            let col = rep_k.index_of(&lifted).unwrap();
            let cur = out.at(row, col).clone();
            out.set(row, col, cur + Scalar::one());
        }
    }
    out
}

#[cfg(test)]
mod tests;
