//! The complex simple Lie algebra from structure constants: exact Killing
//! form, compact real form, Cartan decomposition `g = k ⊕ m` and the
//! quaternionic operators `I`, `J`, `K` on the isotropy representation.

mod compact;
mod constants;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{GaussScalar, Matrix, Scalar};
use crate::rootsys::{dot, Root, RootSystem, WolfData};

pub use compact::{
    cartan_i_vector, curvature_value, in_centralizer, in_isotropy, line_vector,
    quaternion_ops, to_m_coords, u_alpha, v_alpha, CompactVector, QuaternionOps,
};

#[derive(Debug, Error)]
pub enum ChevalleyError {
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("algebra dimension {0} exceeds the supported bound 248")]
    RankUnsupported(usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("vector does not lie in the isotropy summand m")]
    NotInIsotropy,
    #[error("vector is zero or not supported on the requested root spaces")]
    NotRootSupported,
}

/// Sparse coordinates over the Chevalley basis.
pub type Coords = Vec<(usize, GaussScalar)>;

/// The complex simple Lie algebra in its Chevalley basis: `h_1..h_r`
/// (simple coroots) followed by `e_a` for every root `a`, with integer
/// structure constants and the exact Killing form.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    rank: usize,
    dim: usize,
    /// Root attached to each e-basis slot (positives first, then negatives).
    basis_roots: Vec<Root>,
    root_to_basis: BTreeMap<Root, usize>,
    /// Full bracket table: `table[i * dim + j]` lists `(k, c)` with
    /// `[b_i, b_j] = Σ c · b_k`.
    table: Vec<Vec<(usize, i64)>>,
    /// Exact Killing Gram matrix on the full basis.
    killing: Matrix<Scalar>,
    /// `b_a = B(e_a, e_{-a})`, per root.
    b_alpha: BTreeMap<Root, Scalar>,
}

impl ChevalleyAlgebra {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis index of the root vector `e_a`.
    pub fn e_index(&self, root: &[Scalar]) -> Option<usize> {
        self.root_to_basis.get(root).copied()
    }

    /// Root carried by basis slot `k`, if it is a root vector slot.
    pub fn basis_root(&self, k: usize) -> Option<&Root> {
        (k >= self.rank).then(|| &self.basis_roots[k - self.rank])
    }

    pub fn killing_gram(&self) -> &Matrix<Scalar> {
        &self.killing
    }

    pub fn b_alpha(&self, root: &[Scalar]) -> &Scalar {
        &self.b_alpha[root]
    }

    /// Bracket of two sparse coordinate vectors.
    pub fn bracket(&self, x: &Coords, y: &Coords) -> Coords {
        let mut acc: BTreeMap<usize, GaussScalar> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let entry = &self.table[i * self.dim + j];
                if entry.is_empty() {
                    continue;
                }
                let ab = a * b;
                for &(k, c) in entry {
                    let term = ab.scale(&Scalar::from(BigInt::from(c)));
                    match acc.get_mut(&k) {
                        Some(v) => *v += &term,
                        None => {
                            acc.insert(k, term);
                        }
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Killing pairing of two coordinate vectors, complex bilinear.
    pub fn killing_pair_complex(&self, x: &Coords, y: &Coords) -> GaussScalar {
        let mut acc = GaussScalar::zero();
        for (i, a) in x {
            for (j, b) in y {
                let g = self.killing.at(*i, *j);
                if g.is_zero() {
                    continue;
                }
                acc += (a * b).scale(g);
            }
        }
        acc
    }

    /// `B(x, y) = trace(ad x · ad y)`; real for compact-form arguments.
    pub fn killing_pair(&self, x: &CompactVector, y: &CompactVector) -> Scalar {
        let v = self.killing_pair_complex(&x.coords, &y.coords);
        debug_assert!(v.is_real(), "Killing pairing of compact vectors must be real");
        v.re
    }

    /// Coordinates over `h_1..h_r` of the Killing dual `H_a` of a root
    /// (`B(H, H_a) = a(H)` for all Cartan `H`).
    pub fn h_dual(&self, root: &[Scalar]) -> Vec<Scalar> {
        let gram_h = Matrix::from_fn(self.rank, self.rank, |i, j| self.killing.at(i, j).clone());
        let rhs: Vec<Scalar> = (0..self.rank)
            .map(|i| self.root_action_on_h(root, i))
            .collect();
        crate::exact::solve(&gram_h, &rhs)
            .expect("Killing form is nondegenerate on the Cartan subalgebra")
    }

    /// `a(h_i)`, the Cartan integer of `a` against the i-th simple coroot.
    pub fn root_action_on_h(&self, root: &[Scalar], i: usize) -> Scalar {
        let simple = &self.rs.simple_roots[i];
        crate::exact::rat(2, 1) * dot(root, simple) / dot(simple, simple)
    }

    /// Killing-normalized inner product of two roots,
    /// `<a,b>_B = B(H_a, H_b)`.
    pub fn killing_root_product(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let ha = self.h_dual(a);
        let mut acc = Scalar::zero();
        for (i, c) in ha.iter().enumerate() {
            acc += c * &self.root_action_on_h(b, i);
        }
        acc
    }

    /// Dense ad-matrix of a basis element (integer entries).
    pub fn ad_matrix(&self, k: usize) -> Matrix<Scalar> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for &(i, c) in &self.table[k * self.dim + j] {
                m.set(i, j, Scalar::from(BigInt::from(c)));
            }
        }
        m
    }

    /// Structure constants as CSV rows `alpha_index,beta_index,n` over the
    /// root order of the basis, for external cross-checking.
    pub fn structure_constants_csv(&self) -> String {
        let mut out = String::from("alpha_index,beta_index,n\n");
        let nroots = self.basis_roots.len();
        for i in 0..nroots {
            for j in 0..nroots {
                let entry = &self.table[(self.rank + i) * self.dim + (self.rank + j)];
                let sum: Root = self.basis_roots[i]
                    .iter()
                    .zip(&self.basis_roots[j])
                    .map(|(a, b)| a + b)
                    .collect();
                if self.rs.contains(&sum) {
                    let n = entry.first().map_or(0, |&(_, c)| c);
                    out.push_str(&format!("{i},{j},{n}\n"));
                }
            }
        }
        out
    }

    /// Clone with the sign of one root-root structure constant flipped,
    /// leaving every cached invariant (Killing form, `b_a`) untouched.
    /// This is the fault-injection hook used to demonstrate that the
    /// curvature oracles actually detect broken algebras; the result is
    /// deliberately NOT a Lie algebra.
    pub fn with_perturbed_constant(&self, fault_index: usize) -> ChevalleyAlgebra {
        let mut out = self.clone();
        let mut seen = 0usize;
        for i in self.rank..self.dim {
            for j in self.rank..self.dim {
                let cell = i * self.dim + j;
                let is_root_root = self
                    .basis_root(i)
                    .zip(self.basis_root(j))
                    .map(|(a, b)| {
                        let sum: Root = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        self.rs.contains(&sum)
                    })
                    .unwrap_or(false);
                if is_root_root && !self.table[cell].is_empty() {
                    if seen == fault_index {
                        for entry in &mut out.table[cell] {
                            entry.1 = -entry.1;
                        }
                        return out;
                    }
                    seen += 1;
                }
            }
        }
        panic!("fault index {fault_index} out of range ({seen} candidates)");
    }

    fn jacobi_sweep(&self) -> Result<(), ChevalleyError> {
        for i in 0..self.dim {
            let ei: Coords = vec![(i, GaussScalar::one())];
            for j in (i + 1)..self.dim {
                let ej: Coords = vec![(j, GaussScalar::one())];
                let bij = self.bracket(&ei, &ej);
                for k in (j + 1)..self.dim {
                    let ek: Coords = vec![(k, GaussScalar::one())];
                    let t1 = self.bracket(&bij, &ek);
                    let t2 = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let t3 = self.bracket(&self.bracket(&ek, &ei), &ej);
                    let mut acc: BTreeMap<usize, GaussScalar> = BTreeMap::new();
                    for (idx, v) in t1.into_iter().chain(t2).chain(t3) {
                        *acc.entry(idx).or_insert_with(GaussScalar::zero) += v;
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        return Err(ChevalleyError::JacobiFailure(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the Chevalley algebra of an irreducible root system: structure
/// constants by the extraspecial-pair sign algorithm, full bracket table,
/// exhaustive Jacobi validation and the exact Killing form.
pub fn build_chevalley(rs: &RootSystem) -> Result<ChevalleyAlgebra, ChevalleyError> {
    let rank = rs.rank();
    let nroots = rs.roots.len();
    let dim = rank + nroots;
    if dim > 248 {
        return Err(ChevalleyError::RankUnsupported(dim));
    }

    let pos_table = constants::build_positive_table(rs);
    let positives = pos_table.positives.clone();
    let nplus = positives.len();

    let mut basis_roots: Vec<Root> = positives.clone();
    basis_roots.extend(positives.iter().map(|r| neg_root(r)));
    let root_to_basis: BTreeMap<Root, usize> = basis_roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, rank + i))
        .collect();

    // Coroot coordinates over the simple coroots, integral by construction.
    let ambient = rs.ambient_dim;
    let simple_coroot_mat = Matrix::from_fn(ambient, rank, |r, c| {
        let s = &rs.simple_roots[c];
        crate::exact::rat(2, 1) * s[r].clone() / dot(s, s)
    });
    let coroot_coords = |root: &Root| -> Vec<i64> {
        let target: Vec<Scalar> = root
            .iter()
            .map(|x| crate::exact::rat(2, 1) * x / dot(root, root))
            .collect();
        let sol = crate::exact::solve(&simple_coroot_mat, &target)
            .expect("coroot lies in the coroot lattice");
        sol.into_iter()
            .map(|v| {
                assert!(v.is_integer(), "coroot coordinate not integral");
                i64::try_from(&v.into_raw().0).unwrap()
            })
            .collect()
    };

    let mut table: Vec<Vec<(usize, i64)>> = vec![Vec::new(); dim * dim];
    let cartan_int = |root: &Root, i: usize| -> i64 {
        let s = &rs.simple_roots[i];
        let v = crate::exact::rat(2, 1) * dot(root, s) / dot(s, s);
        assert!(v.is_integer());
        i64::try_from(&v.into_raw().0).unwrap()
    };

    for (ei, root) in basis_roots.iter().enumerate() {
        let e = rank + ei;
        for i in 0..rank {
            let c = cartan_int(root, i);
            if c != 0 {
                table[i * dim + e] = vec![(e, c)];
                table[e * dim + i] = vec![(e, -c)];
            }
        }
    }

    for (i, a) in basis_roots.iter().enumerate() {
        let bi = rank + i;
        for (j, b) in basis_roots.iter().enumerate() {
            let bj = rank + j;
            let sum: Root = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if sum.iter().all(Zero::is_zero) {
                // [e_a, e_{-a}] = a^∨ (for a positive), = -(-a)^∨ otherwise.
                let (base, sign) = if i < nplus { (a.clone(), 1) } else { (neg_root(a), -1) };
                let coords = coroot_coords(&base);
                table[bi * dim + bj] = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(h, &c)| (h, sign * c))
                    .collect();
            } else if rs.contains(&sum) {
                let n = pos_table.full_constant(rs, a, b);
                if n != 0 {
                    table[bi * dim + bj] = vec![(root_to_basis[&sum], n)];
                }
            }
        }
    }

    let killing = killing_gram_from_table(&table, dim);
    let mut b_alpha = BTreeMap::new();
    for (i, a) in basis_roots.iter().enumerate() {
        let neg = neg_root(a);
        let j = root_to_basis[&neg];
        let b = killing.at(rank + i, j).clone();
        if b <= Scalar::zero() {
            return Err(ChevalleyError::InvariantViolation(format!(
                "b_alpha must be positive, got {b}"
            )));
        }
        b_alpha.insert(a.clone(), b);
    }

    let alg = ChevalleyAlgebra {
        rs: rs.clone(),
        rank,
        dim,
        basis_roots,
        root_to_basis,
        table,
        killing,
        b_alpha,
    };
    alg.jacobi_sweep()?;

    // The Killing-normalized root products must reproduce the Euclidean
    // ratios of the realization.
    let lambda = &alg.rs.roots[0];
    let ll_b = alg.killing_root_product(lambda, lambda);
    let ll_e = dot(lambda, lambda);
    for probe in alg.rs.roots.iter().take(4) {
        let lhs = alg.killing_root_product(probe, lambda) / &ll_b;
        let rhs = dot(probe, lambda) / &ll_e;
        if lhs != rhs {
            return Err(ChevalleyError::InvariantViolation(
                "Killing and Euclidean root ratios disagree".into(),
            ));
        }
    }
    Ok(alg)
}

/// `<l,l>_B`, the Killing-normalized squared length of the Wolf root.
pub fn wolf_killing_norm(alg: &ChevalleyAlgebra, wd: &WolfData) -> Scalar {
    alg.killing_root_product(&wd.lambda, &wd.lambda)
}

fn neg_root(r: &[Scalar]) -> Root {
    r.iter().map(|x| -x.clone()).collect()
}

fn killing_gram_from_table(table: &[Vec<(usize, i64)>], dim: usize) -> Matrix<Scalar> {
    // B(b_i, b_j) = trace(ad b_i ∘ ad b_j), accumulated sparsely: follow
    // b_k -> [b_j, b_k] -> [b_i, ·] and read off the b_k coefficient.
    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..=i {
            let mut acc: i64 = 0;
            for k in 0..dim {
                for &(l, c1) in &table[j * dim + k] {
                    for &(back, c2) in &table[i * dim + l] {
                        if back == k {
                            acc += c1 * c2;
                        }
                    }
                }
            }
            let v = Scalar::from(BigInt::from(acc));
            gram.set(i, j, v.clone());
            gram.set(j, i, v);
        }
    }
    gram
}

#[cfg(test)]
mod tests;
