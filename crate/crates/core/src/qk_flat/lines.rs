//! Sampled quaternionic bisectional curvature of a pair of quaternionic
//! lines: a deterministic low-discrepancy grid over unit vectors in each
//! line and over the sphere of compatible complex structures, with one
//! local refinement pass around the best grid point.
//!
//! The result is an exact rational evaluated at sampled arguments, hence an
//! upper bound for the true infimum. This is the only approximate quantity
//! in the crate.

use num_traits::Zero;

use super::{dot, FlatError, FlatQKModel};
use crate::exact::{rat, Scalar};

/// Grid coordinates in `(-1, 1)`: midpoints of `s` equal subdivisions.
fn midpoints(s: usize) -> Vec<Scalar> {
    (0..s).map(|k| rat(2 * k as i64 + 1 - s as i64, s as i64)).collect()
}

struct LineSampler {
    /// Orthogonal basis `{X0, IX0, JX0, KX0}` of the line.
    basis: [Vec<Scalar>; 4],
}

impl LineSampler {
    fn new(model: &FlatQKModel, seed: &[Scalar]) -> Result<Self, FlatError> {
        if seed.iter().all(Zero::is_zero) {
            return Err(FlatError::ZeroSeed);
        }
        if seed.len() != model.dim {
            return Err(FlatError::ShapeMismatch(format!(
                "seed length {} vs model dimension {}",
                seed.len(),
                model.dim
            )));
        }
        Ok(LineSampler {
            basis: [
                seed.to_vec(),
                model.apply_i(seed),
                model.apply_j(seed),
                model.apply_k(seed),
            ],
        })
    }

    /// Stereographic point of the line 3-sphere at parameter `t ∈ (-1,1)³`,
    /// unnormalized (all downstream quantities are scale-invariant).
    fn vector_at(&self, t: &[Scalar; 3]) -> Vec<Scalar> {
        let norm2: Scalar = t.iter().map(|x| x * x).sum();
        let c0 = rat(1, 1) - norm2;
        let two = rat(2, 1);
        let mut v = vec![Scalar::zero(); self.basis[0].len()];
        for (i, val) in v.iter_mut().enumerate() {
            *val = &c0 * &self.basis[0][i]
                + &two * (&t[0] * &self.basis[1][i] + &t[1] * &self.basis[2][i] + &t[2] * &self.basis[3][i]);
        }
        v
    }
}

/// Precomputed data for one sampled argument pair.
struct PairData {
    /// `R(X, FX, GY, Y)` for `F, G ∈ {I, J, K}`.
    r_fg: [[Scalar; 3]; 3],
    /// `g(FX, Y)` for `F ∈ {I, J, K}`.
    g_f: [Scalar; 3],
    /// `g(X,X)·g(Y,Y)`.
    norm_prod: Scalar,
}

fn pair_data(model: &FlatQKModel, x: &[Scalar], y: &[Scalar]) -> PairData {
    let fx = [model.apply_i(x), model.apply_j(x), model.apply_k(x)];
    let gy = [model.apply_i(y), model.apply_j(y), model.apply_k(y)];
    let mut r_fg: [[Scalar; 3]; 3] = Default::default();
    for (f, fxv) in fx.iter().enumerate() {
        for (g, gyv) in gy.iter().enumerate() {
            r_fg[f][g] = model.r_total_value(x, fxv, gyv, y);
        }
    }
    let g_f = [dot(&fx[0], y), dot(&fx[1], y), dot(&fx[2], y)];
    PairData { r_fg, g_f, norm_prod: dot(x, x) * dot(y, y) }
}

/// `K_{H,I'}(X,Y)/(g(X,X)g(Y,Y))` for the unit structure
/// `I' = a·I + b·J + c·K`. The frame correction uses the basis-free form
/// `Σ_F g(FX,Y)² - g(I'X,Y)²` of the two-term sum over the complement of
/// `I'`.
fn k_bisec_normalized(model: &FlatQKModel, p: &PairData, coeffs: &[Scalar; 3]) -> Scalar {
    let mut r_val = Scalar::zero();
    for f in 0..3 {
        if coeffs[f].is_zero() {
            continue;
        }
        for g in 0..3 {
            if coeffs[g].is_zero() {
                continue;
            }
            r_val += &coeffs[f] * &coeffs[g] * &p.r_fg[f][g];
        }
    }
    let phi_sq: Scalar = p.g_f.iter().map(|v| v * v).sum();
    let gip: Scalar = (0..3).map(|f| &coeffs[f] * &p.g_f[f]).sum();
    let corr = model.kappa.clone() / rat((8 * model.n * (model.n + 2)) as i64, 1)
        * (phi_sq - &gip * &gip);
    (r_val + corr) / &p.norm_prod
}

/// Unit sphere point of `span{I,J,K}` at stereographic parameter `(p,q)`.
fn structure_at(p: &Scalar, q: &Scalar) -> [Scalar; 3] {
    let norm2 = p * p + q * q;
    let denom = rat(1, 1) + &norm2;
    let two = rat(2, 1);
    [
        (rat(1, 1) - norm2) / &denom,
        &two * p / &denom,
        &two * q / &denom,
    ]
}

/// Sampled minimum of the quaternionic bisectional curvature over unit
/// `X ∈ L1`, `Y ∈ L2` and unit structures `I'`; `samples` is the grid
/// resolution per parameter axis. Deterministic, exact at each sample, and
/// an upper bound for the infimum.
pub fn k_h_lines(
    model: &FlatQKModel,
    l1_seed: &[Scalar],
    l2_seed: &[Scalar],
    samples: usize,
) -> Result<Scalar, FlatError> {
    if model.n < 2 {
        return Err(FlatError::DimensionTooSmall(2));
    }
    let s = samples.clamp(1, 5);
    let l1 = LineSampler::new(model, l1_seed)?;
    let l2 = LineSampler::new(model, l2_seed)?;

    let grid = midpoints(s);
    let mut ts: Vec<[Scalar; 3]> = Vec::new();
    for a in &grid {
        for b in &grid {
            for c in &grid {
                ts.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }

    let mut structures: Vec<(Scalar, Scalar)> = Vec::new();
    for a in &grid {
        for b in &grid {
            structures.push((a.clone(), b.clone()));
        }
    }

    let mut best: Option<(Scalar, usize, usize, usize)> = None;
    for (ix, tx) in ts.iter().enumerate() {
        for (iy, ty) in ts.iter().enumerate() {
            let x = l1.vector_at(tx);
            let y = l2.vector_at(ty);
            let data = pair_data(model, &x, &y);
            for (ip, pq) in structures.iter().enumerate() {
                let coeffs = structure_at(&pq.0, &pq.1);
                let v = k_bisec_normalized(model, &data, &coeffs);
                if best.as_ref().is_none_or(|(b, _, _, _)| &v < b) {
                    best = Some((v, ix, iy, ip));
                }
            }
        }
    }
    let (mut min_val, bx, by, bp) = best.expect("grid is nonempty");

    // One local refinement pass: a half-step neighborhood of the best grid
    // point in all eight parameters.
    let step = rat(1, s as i64);
    let offsets = [-&step / rat(2, 1), rat(0, 1), step.clone() / rat(2, 1)];
    let refine = |center: &[Scalar], k: usize| -> Vec<Scalar> {
        offsets.iter().map(|o| &center[k] + o).collect()
    };
    let tx0: Vec<Scalar> = ts[bx].to_vec();
    let ty0: Vec<Scalar> = ts[by].to_vec();
    let pq0 = vec![structures[bp].0.clone(), structures[bp].1.clone()];
    let refined_structures: Vec<[Scalar; 3]> = refine(&pq0, 0)
        .iter()
        .flat_map(|p| refine(&pq0, 1).iter().map(|q| structure_at(p, q)).collect::<Vec<_>>())
        .collect();
    for a in refine(&tx0, 0) {
        for b in refine(&tx0, 1) {
            for c in refine(&tx0, 2) {
                let tx = [a.clone(), b.clone(), c.clone()];
                let x = l1.vector_at(&tx);
                for d in refine(&ty0, 0) {
                    for e in refine(&ty0, 1) {
                        for f in refine(&ty0, 2) {
                            let ty = [d.clone(), e.clone(), f.clone()];
                            let y = l2.vector_at(&ty);
                            let data = pair_data(model, &x, &y);
                            for coeffs in &refined_structures {
                                let v = k_bisec_normalized(model, &data, coeffs);
                                if v < min_val {
                                    min_val = v;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(min_val)
}
