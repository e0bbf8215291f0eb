//! Closed-form quaternionic bisectional curvature of Wolf spaces, negative
//! witness search, and brute-force Lie-bracket oracles that cross-validate
//! every coefficient.
//!
//! With the metric `g = -B` the curvature of the symmetric space is
//! `g(R_{X,Y}U,V) = -g([X,Y],[U,V])`, the scalar curvature comes out as
//! `κ = 2n(n+2)·<l,l>_B`, and for root-aligned arguments `X ∈ L_a`,
//! `Y ∈ L_b` the bisectional combination collapses to the dimensionless
//! coefficient `c(a,b) = <a,b>/<l,l> + δ_{b,l-a}/4`.

use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{
    self, curvature_value, line_vector, quaternion_ops, to_m_coords, ChevalleyAlgebra,
    ChevalleyError, CompactVector, QuaternionOps,
};
use crate::exact::{rat, Matrix, Scalar};
use crate::rootsys::{
    self, build_root_system, dot, long_nonorthogonal_witness, wolf_decomposition, Root,
    RootSystemError, RootSystemId, WolfData,
};
use crate::sampling::RationalStream;

#[derive(Debug, Error)]
pub enum CurvatureError {
    #[error("root is not an isotropy root of this Wolf space")]
    NotSRoot,
    #[error("argument vector is zero")]
    ZeroVector,
    #[error("argument is not supported on a single root-space pair")]
    NotLineSupported,
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Root(#[from] RootSystemError),
}

/// How much of the bracket oracle to run when building a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Closed-form scan only.
    Off,
    /// Deterministic subset of coefficient pairs.
    Spot,
    /// Every pair in `s_roots × s_roots`.
    Full,
}

impl OracleMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            OracleMode::Off => "off",
            OracleMode::Spot => "spot",
            OracleMode::Full => "full",
        }
    }
}

/// Dimensionless closed-form coefficient
/// `c(a,b) = <a,b>/<l,l> + δ_{b,l-a}/4`; the curvature value is
/// `κ/(2n(n+2)) · c(a,b) · g(X,X)g(Y,Y)` for `X ∈ L_a`, `Y ∈ L_b`.
pub fn closed_coefficient(
    wd: &WolfData,
    alpha: &[Scalar],
    beta: &[Scalar],
) -> Result<Scalar, CurvatureError> {
    if wd.s_index(alpha).is_none() || wd.s_index(beta).is_none() {
        return Err(CurvatureError::NotSRoot);
    }
    let mut c = dot(alpha, beta) / dot(&wd.lambda, &wd.lambda);
    if wd.line_partner(alpha).as_slice() == beta {
        c += rat(1, 4);
    }
    Ok(c)
}

fn expect_line_supported(
    alg: &ChevalleyAlgebra,
    x: &CompactVector,
) -> Result<Root, CurvatureError> {
    if x.is_zero() {
        return Err(CurvatureError::ZeroVector);
    }
    let mut support: Option<Root> = None;
    for (i, _) in &x.coords {
        let root = alg.basis_root(*i).ok_or(CurvatureError::NotLineSupported)?;
        let canon = if alg.rs.height(root) > rat(0, 1) {
            root.clone()
        } else {
            root.iter().map(|c| -c.clone()).collect()
        };
        match &support {
            None => support = Some(canon),
            Some(prev) if *prev == canon => {}
            _ => return Err(CurvatureError::NotLineSupported),
        }
    }
    support.ok_or(CurvatureError::ZeroVector)
}

fn apply_m_operator(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    qo: &QuaternionOps,
    op: &Matrix<Scalar>,
    x: &CompactVector,
) -> Result<CompactVector, CurvatureError> {
    let coords = to_m_coords(alg, wd, x)?;
    let image = op.mul_vec(&coords);
    Ok(vector_from_m_coords(qo, &image))
}

/// Linear combination of the m-basis with real coordinates.
pub fn vector_from_m_coords(qo: &QuaternionOps, coords: &[Scalar]) -> CompactVector {
    let mut acc = CompactVector::zero();
    for (k, c) in coords.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            acc = acc.add(&qo.m_basis[k].scale(c));
        }
    }
    acc
}

/// `g(R_{X,IX}IY, Y) / (g(X,X)g(Y,Y))`, computed purely by brackets and
/// Killing pairings with `g = -B`. Equals `<a,b>_B` for `X ∈ L_a`,
/// `Y ∈ L_b`, independent of the representatives.
pub fn oracle_ratio(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    qo: &QuaternionOps,
    x: &CompactVector,
    y: &CompactVector,
) -> Result<Scalar, CurvatureError> {
    expect_line_supported(alg, x)?;
    expect_line_supported(alg, y)?;
    let ix = apply_m_operator(alg, wd, qo, &qo.i_mat, x)?;
    let iy = apply_m_operator(alg, wd, qo, &qo.i_mat, y)?;
    let num = curvature_value(alg, wd, x, &ix, &iy, y)?;
    let gx = -alg.killing_pair(x, x);
    let gy = -alg.killing_pair(y, y);
    Ok(num / (gx * gy))
}

/// Full quaternionic bisectional combination for root-aligned arguments,
/// normalized by `g(X,X)g(Y,Y)`:
/// `[g(R_{X,IX}IY,Y) + (<l,l>_B/4)(g(JX,Y)² + g(KX,Y)²)] / (g(X,X)g(Y,Y))`
/// with `J = J_raw/s`, `K = K_raw/s`. Equals `<l,l>_B · c(a,b)`.
pub fn k_bisec_oracle(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    qo: &QuaternionOps,
    x: &CompactVector,
    y: &CompactVector,
) -> Result<Scalar, CurvatureError> {
    expect_line_supported(alg, x)?;
    expect_line_supported(alg, y)?;
    let ll = chevalley::wolf_killing_norm(alg, wd);
    let ix = apply_m_operator(alg, wd, qo, &qo.i_mat, x)?;
    let iy = apply_m_operator(alg, wd, qo, &qo.i_mat, y)?;
    let num = curvature_value(alg, wd, x, &ix, &iy, y)?;
    let jx = apply_m_operator(alg, wd, qo, &qo.j_raw, x)?;
    let kx = apply_m_operator(alg, wd, qo, &qo.k_raw, x)?;
    let gj = -alg.killing_pair(&jx, y);
    let gk = -alg.killing_pair(&kx, y);
    let corr = (ll / rat(4, 1)) * (&gj * &gj + &gk * &gk) / &qo.s_squared;
    let gx = -alg.killing_pair(x, x);
    let gy = -alg.killing_pair(y, y);
    Ok((num + corr) / (gx * gy))
}

/// Brute-force scalar curvature: the normalized double sum of sectional
/// numerators over the g-orthogonal m-basis. Equals `2n(n+2)·<l,l>_B`.
pub fn scalar_curvature_oracle(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    qo: &QuaternionOps,
) -> Result<Scalar, CurvatureError> {
    let mut kappa = rat(0, 1);
    let mdim = qo.m_dim();
    for i in 0..mdim {
        for j in 0..mdim {
            if i == j {
                continue;
            }
            let num = curvature_value(
                alg,
                wd,
                &qo.m_basis[i],
                &qo.m_basis[j],
                &qo.m_basis[j],
                &qo.m_basis[i],
            )?;
            kappa += num / (&qo.m_norms[i] * &qo.m_norms[j]);
        }
    }
    Ok(kappa)
}

/// Residual of the bisectional-vs-sectional identity evaluated on a Wolf
/// space by pure bracket computations: for any `X, Y ∈ m`,
/// `g(R_{X,IX}IY,Y) + <l,l>_B(g(JX,Y)² + g(KX,Y)²)
///  - g(R_{X,Y}Y,X) - g(R_{X,IY}IY,X)`
/// must vanish (`κ/(2n(n+2)) = <l,l>_B`).
pub fn qbs_wolf_residual(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    qo: &QuaternionOps,
    x: &CompactVector,
    y: &CompactVector,
) -> Result<Scalar, CurvatureError> {
    let ll = chevalley::wolf_killing_norm(alg, wd);
    let ix = apply_m_operator(alg, wd, qo, &qo.i_mat, x)?;
    let iy = apply_m_operator(alg, wd, qo, &qo.i_mat, y)?;
    let jx = apply_m_operator(alg, wd, qo, &qo.j_raw, x)?;
    let kx = apply_m_operator(alg, wd, qo, &qo.k_raw, x)?;
    let gj = -alg.killing_pair(&jx, y);
    let gk = -alg.killing_pair(&kx, y);
    let lhs = curvature_value(alg, wd, x, &ix, &iy, y)?
        + ll * (&gj * &gj + &gk * &gk) / &qo.s_squared;
    let rhs = curvature_value(alg, wd, x, y, y, x)?
        + curvature_value(alg, wd, x, &iy, &iy, x)?;
    Ok(lhs - rhs)
}

/// Report over the full coefficient matrix of a Wolf space.
#[derive(Clone, Debug)]
pub struct CurvatureReport {
    pub id: RootSystemId,
    pub n: usize,
    pub dim: usize,
    pub wolf_root: Root,
    pub s_roots: Vec<Root>,
    pub coefficient_matrix: Vec<Vec<Scalar>>,
    pub min_coefficient: Option<Scalar>,
    pub witness: Option<(Root, Scalar)>,
    pub oracle_mode: OracleMode,
    /// `Some(true)` when every checked entry matched the bracket oracle;
    /// `None` when the oracle was not run.
    pub oracle_verified: Option<bool>,
}

/// Argument choices used for every oracle pair: four distinct rational
/// combinations `a·u + b·v` on each side.
const ARG_CHOICES: [((i64, i64), (i64, i64)); 4] =
    [((1, 0), (0, 1)), ((0, 1), (1, 1)), ((1, 1), (2, -3)), ((2, -3), (1, 0))];

/// Verifies oracle equality for the listed pair indices (all pairs when
/// `None`): `oracle_ratio = <a,b>_B` and
/// `k_bisec_oracle = <l,l>_B · c(a,b)` for four argument choices each,
/// the line-projection identity behind the closed formula, representative
/// independence, the brute-force scalar curvature, and the
/// bisectional-vs-sectional residual on pseudo-random m-vectors.
pub fn verify_oracles(
    alg: &ChevalleyAlgebra,
    wd: &WolfData,
    qo: &QuaternionOps,
    subset: Option<&[usize]>,
) -> Result<usize, CurvatureError> {
    let ll = chevalley::wolf_killing_norm(alg, wd);
    let indices: Vec<usize> = match subset {
        Some(s) => s.to_vec(),
        None => (0..wd.s_roots.len()).collect(),
    };
    let mut checked = 0usize;
    for &ia in &indices {
        let a = wd.s_roots[ia].clone();
        for &ib in &indices {
            let b = wd.s_roots[ib].clone();
            let expected_ratio = alg.killing_root_product(&a, &b);
            let expected_bisec = &ll * &closed_coefficient(wd, &a, &b)?;
            let delta = if wd.line_partner(&a) == b { rat(1, 1) } else { rat(0, 1) };
            for ((xa, xb), (ya, yb)) in ARG_CHOICES {
                let x = line_vector(alg, &a, &rat(xa, 1), &rat(xb, 1));
                let y = line_vector(alg, &b, &rat(ya, 1), &rat(yb, 1));
                let got = oracle_ratio(alg, wd, qo, &x, &y)?;
                if got != expected_ratio {
                    return Err(CurvatureError::OracleMismatch(format!(
                        "ratio for pair ({ia},{ib}): got {got}, expected {expected_ratio}"
                    )));
                }
                let got = k_bisec_oracle(alg, wd, qo, &x, &y)?;
                if got != expected_bisec {
                    return Err(CurvatureError::OracleMismatch(format!(
                        "bisectional value for pair ({ia},{ib}): got {got}, expected {expected_bisec}"
                    )));
                }
                // Projection identity: (g(JX,Y)² + g(KX,Y)²)/s² equals
                // δ_{b,l-a} g(X,X)g(Y,Y).
                let jx = apply_m_operator(alg, wd, qo, &qo.j_raw, &x)?;
                let kx = apply_m_operator(alg, wd, qo, &qo.k_raw, &x)?;
                let gj = -alg.killing_pair(&jx, &y);
                let gk = -alg.killing_pair(&kx, &y);
                let gx = -alg.killing_pair(&x, &x);
                let gy = -alg.killing_pair(&y, &y);
                if (&gj * &gj + &gk * &gk) / &qo.s_squared != &delta * &(gx * gy) {
                    return Err(CurvatureError::OracleMismatch(format!(
                        "line projection identity failed for pair ({ia},{ib})"
                    )));
                }
                checked += 1;
            }
        }
    }

    // Representative independence on an anchor pair: rational combinations
    // from the deterministic stream leave the ratio unchanged.
    if !wd.s_roots.is_empty() {
        let a = wd.s_roots[0].clone();
        let b = wd.s_roots[wd.s_roots.len() - 1].clone();
        let expected = alg.killing_root_product(&a, &b);
        let mut stream = RationalStream::new(0x0041_4C47);
        for _ in 0..4 {
            let x = loop {
                let v = line_vector(alg, &a, &stream.next_rational(), &stream.next_rational());
                if !v.is_zero() {
                    break v;
                }
            };
            let y = loop {
                let v = line_vector(alg, &b, &stream.next_rational(), &stream.next_rational());
                if !v.is_zero() {
                    break v;
                }
            };
            let got = oracle_ratio(alg, wd, qo, &x, &y)?;
            if got != expected {
                return Err(CurvatureError::OracleMismatch(
                    "oracle ratio depends on the line representative".into(),
                ));
            }
        }
    }

    // Scalar curvature by brute force.
    let kappa = scalar_curvature_oracle(alg, wd, qo)?;
    let expected_kappa = rat(2 * wd.n as i64 * (wd.n as i64 + 2), 1) * &ll;
    if kappa != expected_kappa {
        return Err(CurvatureError::OracleMismatch(format!(
            "scalar curvature: got {kappa}, expected {expected_kappa}"
        )));
    }

    // Bisectional-vs-sectional identity on pseudo-random m-vectors.
    if qo.m_dim() > 0 {
        let mut stream = RationalStream::new(0x5157_4253);
        for _ in 0..6 {
            let cx = stream.next_nonzero_vector(qo.m_dim());
            let cy = stream.next_nonzero_vector(qo.m_dim());
            let x = vector_from_m_coords(qo, &cx);
            let y = vector_from_m_coords(qo, &cy);
            let res = qbs_wolf_residual(alg, wd, qo, &x, &y)?;
            if !num_traits::Zero::is_zero(&res) {
                return Err(CurvatureError::OracleMismatch(format!(
                    "bisectional-vs-sectional residual is {res}, expected 0"
                )));
            }
        }
    }
    Ok(checked)
}

/// Deterministic index subset for spot checks: at most eight root indices
/// spread evenly over `s_roots`.
pub fn spot_subset(len: usize) -> Vec<usize> {
    if len <= 8 {
        return (0..len).collect();
    }
    let stride = len.div_ceil(8);
    (0..len).step_by(stride).collect()
}

/// Builds the full closed-form coefficient matrix, locates the negative
/// witness, and optionally cross-validates against the bracket oracle.
pub fn build_report(id: RootSystemId, mode: OracleMode) -> Result<CurvatureReport, CurvatureError> {
    let rs = build_root_system(id)?;
    let wd = wolf_decomposition(&rs)?;
    let lambda = wd.lambda.clone();

    let k = wd.s_roots.len();
    let mut matrix = vec![vec![rat(0, 1); k]; k];
    let mut min: Option<Scalar> = None;
    for i in 0..k {
        for j in 0..k {
            let c = closed_coefficient(&wd, &wd.s_roots[i], &wd.s_roots[j])?;
            if min.as_ref().is_none_or(|m| &c < m) {
                min = Some(c.clone());
            }
            matrix[i][j] = c;
        }
    }

    let witness = long_nonorthogonal_witness(&rs, &lambda)?
        .map(|alpha| {
            let partner = wd.line_partner(&alpha);
            closed_coefficient(&wd, &alpha, &partner).map(|c| (alpha, c))
        })
        .transpose()?;

    let oracle_verified = match mode {
        OracleMode::Off => None,
        _ => {
            let alg = chevalley::build_chevalley(&rs)?;
            let qo = quaternion_ops(&alg, &wd)?;
            let subset = match mode {
                OracleMode::Spot => Some(spot_subset(k)),
                _ => None,
            };
            verify_oracles(&alg, &wd, &qo, subset.as_deref())?;
            Some(true)
        }
    };

    Ok(CurvatureReport {
        id,
        n: wd.n,
        dim: wd.dim_m(),
        wolf_root: lambda,
        s_roots: wd.s_roots.clone(),
        coefficient_matrix: matrix,
        min_coefficient: min,
        witness,
        oracle_mode: mode,
        oracle_verified,
    })
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub root: Vec<String>,
    pub coefficient: String,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub family: String,
    pub rank: usize,
    pub n: usize,
    pub dim: usize,
    pub wolf_root: Vec<String>,
    pub min_coefficient: Option<String>,
    pub witness: Option<WitnessJson>,
    pub oracle: String,
    pub oracle_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient_matrix: Option<Vec<Vec<String>>>,
}

impl CurvatureReport {
    pub fn to_json(&self, include_matrix: bool) -> ReportJson {
        ReportJson {
            family: self.id.family.to_string(),
            rank: self.id.rank,
            n: self.n,
            dim: self.dim,
            wolf_root: self.wolf_root.iter().map(|c| c.to_string()).collect(),
            min_coefficient: self.min_coefficient.as_ref().map(|c| c.to_string()),
            witness: self.witness.as_ref().map(|(root, c)| WitnessJson {
                root: root.iter().map(|x| x.to_string()).collect(),
                coefficient: c.to_string(),
            }),
            oracle: self.oracle_mode.as_str().to_string(),
            oracle_verified: self.oracle_verified,
            coefficient_matrix: include_matrix.then(|| {
                self.coefficient_matrix
                    .iter()
                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                    .collect()
            }),
        }
    }

    /// Coefficient matrix as CSV with root indices as headers.
    pub fn matrix_csv(&self) -> String {
        let k = self.s_roots.len();
        let mut out = String::from("alpha");
        for j in 0..k {
            out.push_str(&format!(",{j}"));
        }
        out.push('\n');
        for i in 0..k {
            out.push_str(&i.to_string());
            for j in 0..k {
                out.push_str(&format!(",{}", self.coefficient_matrix[i][j]));
            }
            out.push('\n');
        }
        out
    }
}

/// One row of the Wolf-space table, with the quaternionic dimension
/// recomputed from root data for every verified rank.
#[derive(Serialize)]
pub struct TableRow {
    pub group: String,
    pub isotropy: String,
    pub dim: String,
    pub verified: Vec<TableEntry>,
}

#[derive(Serialize)]
pub struct TableEntry {
    pub rank: usize,
    pub n: usize,
    pub dim: usize,
}

/// Reproduces the classical table of compact Wolf spaces: three infinite
/// families and five exceptional rows, with `n = |S|/2` recomputed from
/// the root systems.
pub fn wolf_table() -> Result<Vec<TableRow>, CurvatureError> {
    use rootsys::RootFamily::{A, B, C, D, E, F, G};
    let entry = |family, rank| -> Result<TableEntry, CurvatureError> {
        let rs = build_root_system(RootSystemId::new(family, rank))?;
        let wd = wolf_decomposition(&rs)?;
        Ok(TableEntry { rank, n: wd.n, dim: wd.dim_m() })
    };
    let rows = vec![
        TableRow {
            group: "SU(n+2)".into(),
            isotropy: "S(U(n)U(2))".into(),
            dim: "4n (n>=1)".into(),
            verified: (2..=8).map(|r| entry(A, r)).collect::<Result<_, _>>()?,
        },
        TableRow {
            group: "SO(n+4)".into(),
            isotropy: "SO(n)SO(4)".into(),
            dim: "4n (n>=3)".into(),
            verified: (3..=8)
                .map(|r| entry(B, r))
                .chain((4..=8).map(|r| entry(D, r)))
                .collect::<Result<_, _>>()?,
        },
        TableRow {
            group: "Sp(n+1)".into(),
            isotropy: "Sp(n)Sp(1)".into(),
            dim: "4n (n>=1)".into(),
            verified: (2..=8).map(|r| entry(C, r)).collect::<Result<_, _>>()?,
        },
        TableRow {
            group: "E6".into(),
            isotropy: "SU(6)Sp(1)".into(),
            dim: "40".into(),
            verified: vec![entry(E, 6)?],
        },
        TableRow {
            group: "E7".into(),
            isotropy: "Spin(12)Sp(1)".into(),
            dim: "64".into(),
            verified: vec![entry(E, 7)?],
        },
        TableRow {
            group: "E8".into(),
            isotropy: "E7Sp(1)".into(),
            dim: "112".into(),
            verified: vec![entry(E, 8)?],
        },
        TableRow {
            group: "F4".into(),
            isotropy: "Sp(3)Sp(1)".into(),
            dim: "28".into(),
            verified: vec![entry(F, 4)?],
        },
        TableRow {
            group: "G2".into(),
            isotropy: "SO(4)".into(),
            dim: "8".into(),
            verified: vec![entry(G, 2)?],
        },
    ];
    for row in &rows {
        for e in &row.verified {
            if e.dim != 4 * e.n {
                return Err(CurvatureError::OracleMismatch(format!(
                    "table row {} has dim {} != 4n for n = {}",
                    row.group, e.dim, e.n
                )));
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{build_chevalley, u_alpha};
    use crate::rootsys::RootFamily;

    fn setup(f: RootFamily, rank: usize) -> (ChevalleyAlgebra, WolfData, QuaternionOps) {
        let rs = build_root_system(RootSystemId::new(f, rank)).unwrap();
        let wd = wolf_decomposition(&rs).unwrap();
        let alg = build_chevalley(&rs).unwrap();
        let qo = quaternion_ops(&alg, &wd).unwrap();
        (alg, wd, qo)
    }

    #[test]
    fn closed_coefficient_values() {
        // Long witness pair gives 1/2 - 1 + 1/4 = -1/4; the diagonal of a
        // long root gives 1 and of a half-length root 1/2; the C3 line
        // pair gives 0 + 1/4.
        let rs = build_root_system(RootSystemId::new(RootFamily::B, 3)).unwrap();
        let wd = wolf_decomposition(&rs).unwrap();
        let lambda = wd.lambda.clone();
        let alpha = long_nonorthogonal_witness(&rs, &lambda).unwrap().unwrap();
        let partner = wd.line_partner(&alpha);
        assert_eq!(closed_coefficient(&wd, &alpha, &partner).unwrap(), rat(-1, 4));
        assert_eq!(closed_coefficient(&wd, &alpha, &alpha).unwrap(), rat(1, 1));

        let rs = build_root_system(RootSystemId::new(RootFamily::C, 3)).unwrap();
        let wd = wolf_decomposition(&rs).unwrap();
        let alpha: Root = vec![rat(1, 1), rat(1, 1), rat(0, 1)];
        let beta: Root = vec![rat(1, 1), rat(-1, 1), rat(0, 1)];
        assert_eq!(closed_coefficient(&wd, &alpha, &beta).unwrap(), rat(1, 4));
        assert_eq!(closed_coefficient(&wd, &alpha, &alpha).unwrap(), rat(1, 2));

        // Roots outside S are rejected.
        assert!(matches!(
            closed_coefficient(&wd, &wd.lambda.clone(), &alpha),
            Err(CurvatureError::NotSRoot)
        ));
    }

    #[test]
    fn coefficient_symmetry_under_line_swap() {
        let rs = build_root_system(RootSystemId::new(RootFamily::G, 2)).unwrap();
        let wd = wolf_decomposition(&rs).unwrap();
        for a in &wd.s_roots {
            for b in &wd.s_roots {
                let c1 = closed_coefficient(&wd, a, b).unwrap();
                let c2 =
                    closed_coefficient(&wd, &wd.line_partner(a), &wd.line_partner(b)).unwrap();
                assert_eq!(c1, c2);
            }
        }
    }

    #[test]
    fn oracle_ratio_matches_killing_product_a2() {
        let (alg, wd, qo) = setup(RootFamily::A, 2);
        for a in &wd.s_roots {
            for b in &wd.s_roots {
                let x = u_alpha(&alg, a);
                let y = u_alpha(&alg, b);
                let got = oracle_ratio(&alg, &wd, &qo, &x, &y).unwrap();
                assert_eq!(got, alg.killing_root_product(a, b));
            }
        }
    }

    #[test]
    fn scalar_curvature_golden_values() {
        // A2 (n=1): 6·<l,l> = 2; C2 (n=1): 6·(1/3) = 2; G2 (n=2): 16·(1/4) = 4.
        for (f, rank, expected) in [
            (RootFamily::A, 2, rat(2, 1)),
            (RootFamily::C, 2, rat(2, 1)),
            (RootFamily::G, 2, rat(4, 1)),
        ] {
            let (alg, wd, qo) = setup(f, rank);
            assert_eq!(
                scalar_curvature_oracle(&alg, &wd, &qo).unwrap(),
                expected,
                "{f}{rank}"
            );
        }
    }

    #[test]
    fn full_oracle_suite_on_small_types() {
        for (f, rank) in [(RootFamily::A, 2), (RootFamily::C, 2), (RootFamily::G, 2)] {
            let (alg, wd, qo) = setup(f, rank);
            verify_oracles(&alg, &wd, &qo, None).unwrap();
        }
    }

    #[test]
    fn witness_bisectional_value_is_minus_quarter_of_norm() {
        // For G2 the witness pair realizes -<l,l>_B/4 via the bracket oracle.
        let (alg, wd, qo) = setup(RootFamily::G, 2);
        let alpha = long_nonorthogonal_witness(&alg.rs, &wd.lambda).unwrap().unwrap();
        let partner = wd.line_partner(&alpha);
        let x = u_alpha(&alg, &alpha);
        let y = u_alpha(&alg, &partner);
        let ll = chevalley::wolf_killing_norm(&alg, &wd);
        assert_eq!(k_bisec_oracle(&alg, &wd, &qo, &x, &y).unwrap(), -ll / rat(4, 1));
    }

    #[test]
    fn report_for_c_family_and_exceptionals() {
        let report =
            build_report(RootSystemId::new(RootFamily::C, 3), OracleMode::Full).unwrap();
        assert!(report.witness.is_none());
        assert_eq!(report.min_coefficient, Some(rat(1, 4)));
        assert_eq!(report.oracle_verified, Some(true));
        assert_eq!(report.n, 2);

        let report =
            build_report(RootSystemId::new(RootFamily::G, 2), OracleMode::Full).unwrap();
        let (_, c) = report.witness.clone().unwrap();
        assert_eq!(c, rat(-1, 4));
        assert_eq!(report.min_coefficient, Some(rat(-1, 4)));
        assert_eq!(report.oracle_verified, Some(true));

        // F4: n = 7, dim 28, witness present.
        let report =
            build_report(RootSystemId::new(RootFamily::F, 4), OracleMode::Off).unwrap();
        assert_eq!((report.n, report.dim), (7, 28));
        assert!(report.witness.is_some());
        assert_eq!(report.oracle_verified, None);
    }

    #[test]
    fn report_handles_the_empty_isotropy_of_a1() {
        let report =
            build_report(RootSystemId::new(RootFamily::A, 1), OracleMode::Full).unwrap();
        assert_eq!(report.n, 0);
        assert!(report.min_coefficient.is_none());
        assert!(report.witness.is_none());
    }

    #[test]
    fn injected_fault_is_detected() {
        let rs = build_root_system(RootSystemId::new(RootFamily::A, 2)).unwrap();
        let wd = wolf_decomposition(&rs).unwrap();
        let alg = build_chevalley(&rs).unwrap();
        let qo = quaternion_ops(&alg, &wd).unwrap();
        let broken = alg.with_perturbed_constant(0);
        // The quaternion operators were built on the clean algebra; the
        // verification must now fail somewhere.
        assert!(verify_oracles(&broken, &wd, &qo, None).is_err());
    }

    #[test]
    fn table_matches_the_eight_rows() {
        let rows = wolf_table().unwrap();
        assert_eq!(rows.len(), 8);
        let exceptional: Vec<(String, usize)> = rows[3..]
            .iter()
            .map(|r| (r.group.clone(), r.verified[0].dim))
            .collect();
        assert_eq!(
            exceptional,
            vec![
                ("E6".to_string(), 40),
                ("E7".to_string(), 64),
                ("E8".to_string(), 112),
                ("F4".to_string(), 28),
                ("G2".to_string(), 8),
            ]
        );
    }

    #[test]
    fn json_and_csv_shapes() {
        let report =
            build_report(RootSystemId::new(RootFamily::C, 2), OracleMode::Off).unwrap();
        let j = serde_json::to_value(report.to_json(false)).unwrap();
        assert_eq!(j["min_coefficient"], "1/4");
        assert_eq!(j["witness"], serde_json::Value::Null);
        assert!(j.get("coefficient_matrix").is_none());
        let full = serde_json::to_value(report.to_json(true)).unwrap();
        assert_eq!(full["coefficient_matrix"].as_array().unwrap().len(), 2);

        let csv = report.matrix_csv();
        let lines: Vec<&str> = csv.trim().lines().collect();
        assert_eq!(lines[0], "alpha,0,1");
        assert_eq!(lines.len(), 3);
    }
}
