use super::kahler::verify_kahler_type;
use super::*;
use crate::exact::rat;
use crate::sampling::RationalStream;

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

/// The constant-holomorphic-curvature tensor on `R^{2m}` (prefactor 1):
/// `R_{X,Y} = -(X∧Y + JX∧JY + 2g(JX,Y)J)`.
pub fn constant_holomorphic_tensor(m_complex: usize) -> AlgCurvTensor {
    let j = standard_complex_structure(m_complex);
    let dim = 2 * m_complex;
    let g = |a: usize, b: usize| -> Scalar {
        if a == b {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    };
    let jv = |a: usize, b: usize| -> Scalar { j.at(a, b).clone() };
    AlgCurvTensor::from_fn(dim, |a, b, c, d| {
        // g(J e_a, e_c) = J[c][a] etc.
        let t1 = g(a, c) * g(b, d) - g(b, c) * g(a, d);
        let t2 = jv(c, a) * jv(d, b) - jv(c, b) * jv(d, a);
        let t3 = rat(2, 1) * jv(b, a) * jv(d, c);
        -(t1 + t2 + t3)
    })
}

#[test]
fn quaternion_relations() {
    let m = FlatQKModel::new(2).unwrap();
    let id = Matrix::<Scalar>::identity(m.dim);
    let minus_id = id.scale(&rat(-1, 1));
    for f in [m.i_mat(), m.j_mat(), m.k_mat()] {
        assert_eq!(f.mul_mat(f), minus_id);
        // Compatibility g(FX, Y) = -g(X, FY) means skewness.
        assert_eq!(f.transpose(), f.scale(&rat(-1, 1)));
    }
    assert_eq!(
        m.i_mat().mul_mat(m.j_mat()).mul_mat(m.k_mat()),
        minus_id
    );
    assert_eq!(m.i_mat().mul_mat(m.j_mat()), *m.k_mat());

    // The fast permutation paths agree with the matrices.
    let mut stream = RationalStream::new(3);
    for _ in 0..5 {
        let v = stream.next_vector(m.dim);
        assert_eq!(m.apply_i(&v), m.i_mat().mul_vec(&v));
        assert_eq!(m.apply_j(&v), m.j_mat().mul_vec(&v));
        assert_eq!(m.apply_k(&v), m.k_mat().mul_vec(&v));
    }
}

#[test]
fn r_hp_golden_values() {
    let m = FlatQKModel::new(2).unwrap();
    // Default κ = 16n(n+2) makes c = 1.
    let x = unit(m.dim, 0);
    let y = unit(m.dim, 4); // different quaternionic block: y ⊥ {x, Ix, Jx, Kx}
    let sec = dot(&m.r_hp_apply(&x, &y, &y), &x);
    assert_eq!(sec, rat(1, 1));

    // Holomorphic plane: g(R_{X,IX}IX, X) = 4c.
    let ix = m.apply_i(&x);
    assert_eq!(dot(&m.r_hp_apply(&x, &ix, &ix), &x), rat(4, 1));

    // Antisymmetry.
    assert!(m.r_hp(&x, &x).is_zero());
}

#[test]
fn r_hp_satisfies_curvature_symmetries() {
    let m = FlatQKModel::new(1).unwrap();
    let basis: Vec<Vec<Scalar>> = (0..m.dim).map(|i| unit(m.dim, i)).collect();
    let t = AlgCurvTensor::from_fn(m.dim, |a, b, c, d| {
        dot(&m.r_hp_apply(&basis[a], &basis[b], &basis[c]), &basis[d])
    });
    t.verify_curvature_symmetries().unwrap();
}

#[test]
fn k_cp_horizontal_expansion() {
    // K^CP(X⊕0, Y⊕0) = κ/(8n(n+2)) (g(X,X)g(Y,Y) + g(X,Y)² + g(IX,Y)²).
    let m = FlatQKModel::new(2).unwrap();
    let mut stream = RationalStream::new(11);
    for _ in 0..20 {
        let x = stream.next_vector(m.dim);
        let y = stream.next_vector(m.dim);
        let a = TwistorVector::horizontal(x.clone());
        let b = TwistorVector::horizontal(y.clone());
        let gxy = dot(&x, &y);
        let gixy = dot(&m.apply_i(&x), &y);
        let expected = m.kappa.clone() / rat((8 * m.n * (m.n + 2)) as i64, 1)
            * (dot(&x, &x) * dot(&y, &y) + &gxy * &gxy + &gixy * &gixy);
        assert_eq!(m.k_cp(&a, &b), expected);
    }
}

#[test]
fn k_cp_vertical_golden_value() {
    // Unit fibers: K^CP(0⊕x, 0⊕y) = 2cw²(γ(x,y)² + γ(Ix,y)² + γ(y,y)),
    // which is 64n(n+2)/κ = 4 for unit pairs at the default scale — the
    // same as the horizontal holomorphic diagonal 4c, as it must be for a
    // constant-holomorphic-curvature tensor. Rational unit pair (3/5, 4/5).
    let m = FlatQKModel::new(2).unwrap();
    let a = TwistorVector::vertical(m.dim, [rat(1, 1), rat(0, 1)]);
    let b = TwistorVector::vertical(m.dim, [rat(3, 5), rat(4, 5)]);
    assert_eq!(m.k_cp(&a, &b), rat(4, 1));
    // Horizontal holomorphic diagonal agrees.
    let xh = TwistorVector::horizontal(unit(m.dim, 0));
    assert_eq!(m.k_cp(&xh, &xh), rat(4, 1));
    // A = B vanishes under the curvature antisymmetry only in the wedge
    // part; the holomorphic diagonal is positive. R^CP_{A,A} itself is 0.
    assert!(m.r_cp(&a, &a).is_zero());
}

#[test]
fn k_bisec_golden_values() {
    let m = FlatQKModel::new(2).unwrap();
    let x = unit(m.dim, 0);
    // Y = JX: value (κ/(2n(n+2)))·(1/4) = κ/(8n(n+2)).
    let jx = m.apply_j(&x);
    let expected = m.kappa.clone() / rat((8 * m.n * (m.n + 2)) as i64, 1);
    assert_eq!(m.k_bisec(&x, &jx), expected);
    // Y = X: the holomorphic sectional value 4κ/(16n(n+2)).
    assert_eq!(m.k_bisec(&x, &x), rat(4, 1) * m.c_scale());
}

#[test]
fn k_bisec_frame_rotation_invariance() {
    // Rotating (J,K) by the rational 3-4-5 rotation leaves K_{H,I} fixed.
    let m = FlatQKModel::new(2).unwrap();
    let (c, s) = (rat(3, 5), rat(4, 5));
    let j2 = m.j_mat().scale(&c).add_mat(&m.k_mat().scale(&s));
    let k2 = m.j_mat().scale(&-s.clone()).add_mat(&m.k_mat().scale(&c));
    let mut stream = RationalStream::new(23);
    for _ in 0..10 {
        let x = stream.next_vector(m.dim);
        let y = stream.next_vector(m.dim);
        assert_eq!(m.k_bisec(&x, &y), m.k_bisec_with_frame(&x, &y, &j2, &k2));
    }
}

#[test]
fn twistor_identity_residual_vanishes() {
    for n in [2usize, 3] {
        let m = FlatQKModel::new(n).unwrap();
        let mut stream = RationalStream::new(31 + n as u64);
        for _ in 0..25 {
            let a = TwistorVector::new(
                stream.next_vector(m.dim),
                [stream.next_rational(), stream.next_rational()],
            );
            let b = TwistorVector::new(
                stream.next_vector(m.dim),
                [stream.next_rational(), stream.next_rational()],
            );
            assert!(m.twistor_identity_residual(&a, &b).is_zero());
        }
    }
}

#[test]
fn twistor_identity_trivial_cases() {
    let m = FlatQKModel::new(2).unwrap();
    let zero = TwistorVector::horizontal(vec![Scalar::zero(); m.dim]);
    let b = TwistorVector::new(unit(m.dim, 3), [rat(1, 2), rat(-1, 3)]);
    assert!(m.twistor_identity_residual(&zero, &b).is_zero());
    // Purely horizontal arguments reduce to K^CP(X⊕0,Y⊕0) = K_{H,I}(X,Y)
    // for the projective-space tensor.
    let a = TwistorVector::horizontal(unit(m.dim, 0));
    let bh = TwistorVector::horizontal(unit(m.dim, 5));
    assert!(m.twistor_identity_residual(&a, &bh).is_zero());
    assert_eq!(m.k_cp(&a, &bh), m.k_bisec(&a.base, &bh.base));
}

#[test]
fn cp_difference_cases() {
    let m = FlatQKModel::new(2).unwrap();
    let mut stream = RationalStream::new(47);
    for _ in 0..25 {
        let a = TwistorVector::new(
            stream.next_vector(m.dim),
            [stream.next_rational(), stream.next_rational()],
        );
        let b = TwistorVector::new(
            stream.next_vector(m.dim),
            [stream.next_rational(), stream.next_rational()],
        );
        let (value, sos) = m.cp_difference(&a, &b);
        assert_eq!(value, sos);
        assert!(value >= Scalar::zero());
        // The twistor bisectional curvature dominates the quaternionic one.
        assert!(m.k_z(&a, &b) >= m.k_bisec(&a.base, &b.base));
    }
    // x = 0 degenerate branch: value = 2 g(X,X) γ(y,y).
    let a = TwistorVector::horizontal(unit(m.dim, 1));
    let b = TwistorVector::new(stream.next_vector(m.dim), [rat(2, 3), rat(-1, 2)]);
    let (value, sos) = m.cp_difference(&a, &b);
    assert_eq!(value, sos);
    assert_eq!(value, rat(2, 1) * (rat(4, 9) + rat(1, 4)));
    // All-zero fibers.
    let bh = TwistorVector::horizontal(b.base.clone());
    let (value, sos) = m.cp_difference(&a, &bh);
    assert!(value.is_zero() && sos.is_zero());
}

#[test]
fn qbs_residual_and_commutator() {
    let m = FlatQKModel::new(2).unwrap();
    let mut stream = RationalStream::new(59);
    for _ in 0..25 {
        let x = stream.next_vector(m.dim);
        let y = stream.next_vector(m.dim);
        assert!(m.qbs_residual(&x, &y).is_zero());
        assert!(m.qbs_commutator_residual(&x, &y).is_zero());
    }
    // Special cases Y ∈ {X, IX}.
    let x = stream.next_vector(m.dim);
    assert!(m.qbs_residual(&x, &x).is_zero());
    assert!(m.qbs_residual(&x, &m.apply_i(&x)).is_zero());
}

#[test]
fn k_h_lines_perpendicular_and_diagonal() {
    let m = FlatQKModel::new(2).unwrap();
    // Perpendicular quaternionic lines: the value is constantly
    // κ/(8n(n+2)) = 2 at the default scale, so any grid finds it exactly.
    let min = k_h_lines(&m, &unit(m.dim, 0), &unit(m.dim, 4), 2).unwrap();
    assert_eq!(min, rat(2, 1));
    // A line against itself stays positive.
    let min = k_h_lines(&m, &unit(m.dim, 0), &unit(m.dim, 0), 2).unwrap();
    assert!(min > Scalar::zero());

    assert!(matches!(
        k_h_lines(&m, &vec![Scalar::zero(); m.dim], &unit(m.dim, 0), 2),
        Err(FlatError::ZeroSeed)
    ));
    let m1 = FlatQKModel::new(1).unwrap();
    assert!(matches!(
        k_h_lines(&m1, &unit(4, 0), &unit(4, 0), 2),
        Err(FlatError::DimensionTooSmall(2))
    ));
}

#[test]
fn bihol2_residual_for_kahler_tensors() {
    for mc in [2usize, 3] {
        let r = constant_holomorphic_tensor(mc);
        let j = standard_complex_structure(mc);
        r.verify_curvature_symmetries().unwrap();
        verify_kahler_type(&r, &j).unwrap();
        let mut stream = RationalStream::new(61 + mc as u64);
        for _ in 0..20 {
            let x = stream.next_vector(2 * mc);
            let y = stream.next_vector(2 * mc);
            assert!(bihol2_residual(&r, &j, &x, &y).unwrap().is_zero());
        }
        // X = Y: the bisectional diagonal is the holomorphic sectional value.
        let x = unit(2 * mc, 0);
        assert_eq!(kahler_bisec(&r, &j, &x, &x).unwrap(), rat(4, 1));
    }
}

#[test]
fn non_kahler_tensor_is_rejected() {
    let r = AlgCurvTensor::constant_curvature(4);
    let j = standard_complex_structure(2);
    assert!(matches!(
        kahler_bisec(&r, &j, &unit(4, 0), &unit(4, 1)),
        Err(FlatError::NotKahler)
    ));
}

#[test]
fn s_tensor_roundtrip_is_exact() {
    for mc in [2usize, 3] {
        let j = standard_complex_structure(mc);
        let r = constant_holomorphic_tensor(mc);
        assert!(s_tensor_roundtrip(&r, &j).unwrap().is_zero());
        let zero = AlgCurvTensor::zeros(2 * mc);
        assert!(s_tensor_roundtrip(&zero, &j).unwrap().is_zero());
        let scaled = r.scale(&rat(-7, 3));
        assert!(s_tensor_roundtrip(&scaled, &j).unwrap().is_zero());
    }
}

#[test]
fn from_skew_is_a_curvature_tensor() {
    // Any skew endomorphism produces a valid algebraic curvature tensor.
    let mut w = Matrix::zeros(4, 4);
    w.set(0, 1, rat(2, 1));
    w.set(1, 0, rat(-2, 1));
    w.set(2, 3, rat(-1, 3));
    w.set(3, 2, rat(1, 3));
    w.set(0, 3, rat(1, 1));
    w.set(3, 0, rat(-1, 1));
    AlgCurvTensor::from_skew(&w).verify_curvature_symmetries().unwrap();
}

#[test]
fn hyper_validation_rejects_the_projective_tensor() {
    // R^{HP} itself does not commute with I, J, K, so it is not of
    // hyperkähler type.
    let m = FlatQKModel::new(1).unwrap();
    let basis: Vec<Vec<Scalar>> = (0..m.dim).map(|i| unit(m.dim, i)).collect();
    let t = AlgCurvTensor::from_fn(m.dim, |a, b, c, d| {
        dot(&m.r_hp_apply(&basis[a], &basis[b], &basis[c]), &basis[d])
    });
    assert!(FlatQKModel::new(1).unwrap().with_hyper(t).is_err());
}

#[test]
fn model_guards() {
    assert!(matches!(FlatQKModel::new(0), Err(FlatError::DimensionTooSmall(1))));
    assert!(matches!(
        FlatQKModel::with_kappa(2, rat(-1, 1)),
        Err(FlatError::NonPositiveScale)
    ));
}
