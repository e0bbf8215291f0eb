//! The compact real form and the quaternionic structure on the isotropy
//! summand `m`.
//!
//! The compact form is spanned by `i h`, `u_a = e_a - e_{-a}` and
//! `v_a = i (e_a + e_{-a})`. The root vectors are kept unnormalized; every
//! curvature assertion downstream is a homogeneous ratio, so the whole
//! pipeline stays inside exact rational arithmetic.

use num_traits::{One, Zero};

use super::{ChevalleyAlgebra, ChevalleyError, Coords};
use crate::exact::{GaussScalar, Matrix, Scalar};
use crate::rootsys::{Root, WolfData};

/// Element of the compact real form, held as sparse Gaussian coordinates
/// over the Chevalley basis. Fixed by the compact conjugation
/// `e_a ↦ -e_{-a}`, `h ↦ -h` composed with coordinate conjugation.
#[derive(Clone, Debug, PartialEq)]
pub struct CompactVector {
    pub coords: Coords,
}

impl CompactVector {
    pub fn zero() -> Self {
        CompactVector { coords: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return CompactVector::zero();
        }
        CompactVector {
            coords: self.coords.iter().map(|(i, c)| (*i, c.scale(s))).collect(),
        }
    }

    pub fn add(&self, other: &CompactVector) -> Self {
        let mut acc: std::collections::BTreeMap<usize, GaussScalar> =
            self.coords.iter().cloned().collect();
        for (i, c) in &other.coords {
            match acc.get_mut(i) {
                Some(v) => *v += c,
                None => {
                    acc.insert(*i, c.clone());
                }
            }
        }
        CompactVector {
            coords: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Verifies the defining fixed-point property of the compact form.
    pub fn is_compact(&self, alg: &ChevalleyAlgebra) -> bool {
        let mut image: std::collections::BTreeMap<usize, GaussScalar> =
            std::collections::BTreeMap::new();
        for (i, c) in &self.coords {
            // theta(c · b) = conj(c) · theta(b); theta(e_a) = -e_{-a},
            // theta(h) = -h.
            let target = match alg.basis_root(*i) {
                Some(root) => {
                    let neg: Root = root.iter().map(|x| -x.clone()).collect();
                    alg.e_index(&neg).unwrap()
                }
                None => *i,
            };
            *image.entry(target).or_insert_with(GaussScalar::zero) += -c.conj();
        }
        let this: std::collections::BTreeMap<usize, GaussScalar> =
            self.coords.iter().cloned().collect();
        image.retain(|_, v| !v.is_zero());
        image == this
    }
}

/// `u_a = e_a - e_{-a}`.
pub fn u_alpha(alg: &ChevalleyAlgebra, alpha: &[Scalar]) -> CompactVector {
    let neg: Root = alpha.iter().map(|x| -x.clone()).collect();
    let i = alg.e_index(alpha).expect("alpha must be a root");
    let j = alg.e_index(&neg).unwrap();
    CompactVector {
        coords: sorted(vec![
            (i, GaussScalar::one()),
            (j, -GaussScalar::one()),
        ]),
    }
}

/// `v_a = i (e_a + e_{-a})`.
pub fn v_alpha(alg: &ChevalleyAlgebra, alpha: &[Scalar]) -> CompactVector {
    let neg: Root = alpha.iter().map(|x| -x.clone()).collect();
    let i = alg.e_index(alpha).expect("alpha must be a root");
    let j = alg.e_index(&neg).unwrap();
    CompactVector {
        coords: sorted(vec![(i, GaussScalar::i()), (j, GaussScalar::i())]),
    }
}

/// `a·u_alpha + b·v_alpha`, a rational vector in the line summand `L_a`.
pub fn line_vector(
    alg: &ChevalleyAlgebra,
    alpha: &[Scalar],
    a: &Scalar,
    b: &Scalar,
) -> CompactVector {
    u_alpha(alg, alpha).scale(a).add(&v_alpha(alg, alpha).scale(b))
}

/// `i H` for Cartan coordinates `x` over `h_1..h_r`.
pub fn cartan_i_vector(x: &[Scalar]) -> CompactVector {
    CompactVector {
        coords: x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, GaussScalar::i().scale(c)))
            .collect(),
    }
}

fn sorted(mut v: Coords) -> Coords {
    v.sort_by_key(|(i, _)| *i);
    v
}

/// The quaternionic triple on `m`: `I = ad(2iH_l / <l,l>)`,
/// `J_raw = ad(u_l)`, `K_raw = ad(v_l)`, restricted to `m` and expressed
/// over the basis `(u_a, v_a)`, `a ∈ S`.
#[derive(Clone, Debug)]
pub struct QuaternionOps {
    /// Basis of `m`: `u_{a_0}, v_{a_0}, u_{a_1}, v_{a_1}, …` following the
    /// canonical order of `s_roots`.
    pub m_basis: Vec<CompactVector>,
    pub i_mat: Matrix<Scalar>,
    pub j_raw: Matrix<Scalar>,
    pub k_raw: Matrix<Scalar>,
    /// `J_raw² = -s²·id`; equal to `K_raw²`'s scalar and constant across
    /// quaternionic lines (verified on construction).
    pub s_squared: Scalar,
    /// Diagonal of the metric `g = -B` on the m-basis.
    pub m_norms: Vec<Scalar>,
}

impl QuaternionOps {
    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    /// `g(x, y) = -B(x, y)` in m-basis coordinates (the basis is
    /// g-orthogonal, so this is a weighted dot product).
    pub fn g_m(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..x.len() {
            if !x[i].is_zero() && !y[i].is_zero() {
                acc += &x[i] * &y[i] * &self.m_norms[i];
            }
        }
        acc
    }
}

/// Expresses a compact vector supported on the isotropy root spaces in
/// m-basis coordinates.
pub fn to_m_coords(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    v: &CompactVector,
) -> Result<Vec<Scalar>, ChevalleyError> {
    let mut acc = vec![GaussScalar::zero(); 4 * wd.n];
    let half = crate::exact::rat(1, 2);
    for (idx, c) in &v.coords {
        let Some(root) = alg.basis_root(*idx) else {
            return Err(ChevalleyError::NotInIsotropy);
        };
        let (s_pos, sign) = match wd.s_index(root) {
            Some(p) => (p, 1),
            None => {
                let neg: Root = root.iter().map(|x| -x.clone()).collect();
                match wd.s_index(&neg) {
                    Some(p) => (p, -1),
                    None => return Err(ChevalleyError::NotInIsotropy),
                }
            }
        };
        // Inverting u_a = e_a - e_{-a}, v_a = i(e_a + e_{-a}): a coordinate
        // c·e_a contributes (c/2, -i c/2) over (u_a, v_a), and c·e_{-a}
        // contributes (-c/2, -i c/2). Imaginary parts cancel only in the
        // total, so realness is checked after accumulation.
        let cu = if sign > 0 { c.scale(&half) } else { -c.scale(&half) };
        let cv = (GaussScalar::i() * c.clone()).scale(&-half.clone());
        acc[2 * s_pos] += cu;
        acc[2 * s_pos + 1] += cv;
    }
    acc.into_iter()
        .map(|z| z.expect_real().ok_or(ChevalleyError::NotInIsotropy))
        .collect()
}

/// Builds the three operator matrices on `m` and verifies the quaternion
/// relations exactly.
pub fn quaternion_ops(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
) -> Result<QuaternionOps, ChevalleyError> {
    let mdim = 4 * wd.n;
    let mut m_basis = Vec::with_capacity(mdim);
    for a in &wd.s_roots {
        m_basis.push(u_alpha(alg, a));
        m_basis.push(v_alpha(alg, a));
    }

    // I = ad(2 i H_l / <l,l>): Cartan coordinates of H_l, rescaled.
    let ll = super::wolf_killing_norm(alg, wd);
    let h_l = alg.h_dual(&wd.lambda);
    let scale = crate::exact::rat(2, 1) / &ll;
    let i_gen = cartan_i_vector(
        &h_l.iter().map(|c| c * &scale).collect::<Vec<_>>(),
    );
    let j_gen = u_alpha(alg, &wd.lambda);
    let k_gen = v_alpha(alg, &wd.lambda);

    let restrict = |gen: &CompactVector| -> Result<Matrix<Scalar>, ChevalleyError> {
        let mut m = Matrix::zeros(mdim, mdim);
        for (col, b) in m_basis.iter().enumerate() {
            let image = CompactVector { coords: alg.bracket(&gen.coords, &b.coords) };
            let coords = to_m_coords(alg, wd, &image)?;
            for (row, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(row, col, c);
                }
            }
        }
        Ok(m)
    };

    let i_mat = restrict(&i_gen)?;
    let j_raw = restrict(&j_gen)?;
    let k_raw = restrict(&k_gen)?;

    // I² = -id and I u_a = v_a, I v_a = -u_a exactly.
    let minus_id = Matrix::<Scalar>::identity(mdim).scale(&crate::exact::rat(-1, 1));
    if i_mat.mul_mat(&i_mat) != minus_id {
        return Err(ChevalleyError::InvariantViolation("I^2 != -id on m".into()));
    }
    for p in 0..(2 * wd.n) {
        for row in 0..mdim {
            let expect_u = if row == 2 * p + 1 { Scalar::one() } else { Scalar::zero() };
            let expect_v = if row == 2 * p { -Scalar::one() } else { Scalar::zero() };
            if *i_mat.at(row, 2 * p) != expect_u || *i_mat.at(row, 2 * p + 1) != expect_v {
                return Err(ChevalleyError::InvariantViolation(
                    "I must act as u_a ↦ v_a, v_a ↦ -u_a".into(),
                ));
            }
        }
    }

    // J_raw² = K_raw² = -s²·id with one and the same s² on every line.
    // An empty isotropy summand (quaternionic dimension zero) is degenerate
    // but legal; the scalar is 1 by convention there.
    let jj = j_raw.mul_mat(&j_raw);
    let s_squared = if mdim == 0 { Scalar::one() } else { -jj.at(0, 0).clone() };
    if s_squared <= Scalar::zero() {
        return Err(ChevalleyError::InvariantViolation("s² must be positive".into()));
    }
    let expected = Matrix::<Scalar>::identity(mdim).scale(&-s_squared.clone());
    if jj != expected || k_raw.mul_mat(&k_raw) != expected {
        return Err(ChevalleyError::InvariantViolation(
            "J_raw², K_raw² must equal -s²·id with a single s²".into(),
        ));
    }

    // J and K map the span of (u_a, v_a) into the span of (u_{l-a}, v_{l-a}).
    for (p, a) in wd.s_roots.iter().enumerate() {
        let partner = wd.s_index(&wd.line_partner(a)).unwrap();
        for m in [&j_raw, &k_raw] {
            for row in 0..mdim {
                if row / 2 != partner && !(m.at(row, 2 * p).is_zero() && m.at(row, 2 * p + 1).is_zero()) {
                    return Err(ChevalleyError::InvariantViolation(
                        "J, K must exchange the paired line summands".into(),
                    ));
                }
            }
        }
    }

    let m_norms: Vec<Scalar> = m_basis
        .iter()
        .map(|b| -alg.killing_pair(b, b))
        .collect();
    if m_norms.iter().any(|n| *n <= Scalar::zero()) {
        return Err(ChevalleyError::InvariantViolation(
            "g = -B must be positive on m".into(),
        ));
    }

    Ok(QuaternionOps { m_basis, i_mat, j_raw, k_raw, s_squared, m_norms })
}

/// Membership test: supported on the root spaces `g^{±a}`, `a ∈ S`, only.
pub fn in_isotropy(alg: &ChevalleyAlgebra, wd: &WolfData, v: &CompactVector) -> bool {
    v.coords.iter().all(|(i, _)| {
        alg.basis_root(*i).is_some_and(|root| {
            wd.s_index(root).is_some() || {
                let neg: Root = root.iter().map(|x| -x.clone()).collect();
                wd.s_index(&neg).is_some()
            }
        })
    })
}

/// Support inside `k` only: Cartan slots and root spaces outside `±S`.
pub fn in_centralizer(alg: &ChevalleyAlgebra, wd: &WolfData, v: &CompactVector) -> bool {
    v.coords.iter().all(|(i, _)| match alg.basis_root(*i) {
        None => true,
        Some(root) => {
            let neg: Root = root.iter().map(|x| -x.clone()).collect();
            wd.s_index(root).is_none() && wd.s_index(&neg).is_none()
        }
    })
}

/// `g(R_{X,Y} U, V) = -g([X,Y],[U,V])` with `g = -B`, for vectors in `m`.
/// The bracket of two m-vectors is verified to land in `k`.
pub fn curvature_value(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    x: &CompactVector,
    y: &CompactVector,
    u: &CompactVector,
    v: &CompactVector,
) -> Result<Scalar, ChevalleyError> {
    for w in [x, y, u, v] {
        if !in_isotropy(alg, wd, w) {
            return Err(ChevalleyError::NotInIsotropy);
        }
    }
    let bxy = CompactVector { coords: alg.bracket(&x.coords, &y.coords) };
    let buv = CompactVector { coords: alg.bracket(&u.coords, &v.coords) };
    for b in [&bxy, &buv] {
        if !in_centralizer(alg, wd, b) {
            return Err(ChevalleyError::InvariantViolation(
                "[m, m] must land in k".into(),
            ));
        }
    }
    // -g([X,Y],[U,V]) with g = -B is +B([X,Y],[U,V]).
    let val = alg.killing_pair_complex(&bxy.coords, &buv.coords);
    val.expect_real()
        .ok_or_else(|| ChevalleyError::InvariantViolation("curvature value must be real".into()))
}
