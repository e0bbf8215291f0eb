use super::*;
use crate::exact::rat;
use crate::rootsys::{build_root_system, wolf_decomposition, RootFamily, RootSystemId};

fn algebra(f: RootFamily, rank: usize) -> ChevalleyAlgebra {
    let rs = build_root_system(RootSystemId::new(f, rank)).unwrap();
    build_chevalley(&rs).unwrap()
}

#[test]
fn a1_golden_values() {
    // sl2: basis (h, e, f); [e, f] = h; B(h, h) = 8 by the dense ad-trace.
    let alg = algebra(RootFamily::A, 1);
    assert_eq!(alg.dim(), 3);
    assert_eq!(*alg.killing_gram().at(0, 0), rat(8, 1));
    // [e_a, e_{-a}] = coroot.
    let a = alg.rs.roots.iter().find(|r| alg.rs.height(r) > rat(0, 1)).unwrap().clone();
    let i = alg.e_index(&a).unwrap();
    let neg: Vec<_> = a.iter().map(|x| -x.clone()).collect();
    let j = alg.e_index(&neg).unwrap();
    let br = alg.bracket(
        &vec![(i, GaussScalar::one())],
        &vec![(j, GaussScalar::one())],
    );
    assert_eq!(br, vec![(0, GaussScalar::one())]);
}

#[test]
fn a2_killing_values() {
    // sl3: B = 6·tr on matrices, so b_a = B(e_a, e_{-a}) = 6 for each root,
    // B(u_a, u_a) = -12, B(u_a, v_a) = 0.
    let alg = algebra(RootFamily::A, 2);
    assert_eq!(alg.dim(), 8);
    for root in alg.rs.roots.clone() {
        assert_eq!(*alg.b_alpha(&root), rat(6, 1));
    }
    let a = alg.rs.simple_roots[0].clone();
    let u = u_alpha(&alg, &a);
    let v = v_alpha(&alg, &a);
    assert_eq!(alg.killing_pair(&u, &u), rat(-12, 1));
    assert_eq!(alg.killing_pair(&v, &v), rat(-12, 1));
    assert_eq!(alg.killing_pair(&u, &v), rat(0, 1));
    assert!(u.is_compact(&alg) && v.is_compact(&alg));
}

#[test]
fn killing_gram_matches_dense_ad_trace_oracle() {
    // Independent route: dense ad-matrix products and their traces.
    for (f, rank) in [(RootFamily::A, 1), (RootFamily::A, 2), (RootFamily::G, 2)] {
        let alg = algebra(f, rank);
        let ads: Vec<_> = (0..alg.dim()).map(|k| alg.ad_matrix(k)).collect();
        for i in 0..alg.dim() {
            for j in 0..=i {
                let tr = ads[i].mul_mat(&ads[j]).trace_rat();
                assert_eq!(&tr, alg.killing_gram().at(i, j), "({i},{j}) in {f}{rank}");
            }
        }
    }
}

#[test]
fn g2_dimensions_and_constant_magnitudes() {
    let alg = algebra(RootFamily::G, 2);
    assert_eq!(alg.dim(), 14);
    // |N(a,b)| ∈ {1,2,3} for G2: read back from the bracket table.
    let mut magnitudes = std::collections::BTreeSet::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (Some(_), Some(_)) = (alg.basis_root(i), alg.basis_root(j)) else {
                continue;
            };
            for &(k, c) in &alg.table[i * alg.dim() + j] {
                if alg.basis_root(k).is_some() {
                    magnitudes.insert(c.abs());
                }
            }
        }
    }
    assert_eq!(magnitudes, [1i64, 2, 3].into_iter().collect());
}

#[test]
fn killing_form_is_invariant() {
    // B([x,y],z) + B(y,[x,z]) = 0 on basis triples.
    let alg = algebra(RootFamily::B, 2);
    let basis: Vec<Coords> =
        (0..alg.dim()).map(|i| vec![(i, GaussScalar::one())]).collect();
    for x in 0..alg.dim() {
        for y in 0..alg.dim() {
            for z in 0..alg.dim() {
                let lhs = alg.killing_pair_complex(&alg.bracket(&basis[x], &basis[y]), &basis[z]);
                let rhs = alg.killing_pair_complex(&basis[y], &alg.bracket(&basis[x], &basis[z]));
                assert!((lhs + rhs).is_zero());
            }
        }
    }
}

#[test]
fn cartan_decomposition_inclusions() {
    // [k,k] ⊆ k, [k,m] ⊆ m, [m,m] ⊆ k on the compact basis.
    let alg = algebra(RootFamily::B, 3);
    let wd = wolf_decomposition(&alg.rs).unwrap();
    let mut k_basis: Vec<CompactVector> = (0..alg.rank())
        .map(|i| {
            let mut x = vec![rat(0, 1); alg.rank()];
            x[i] = rat(1, 1);
            cartan_i_vector(&x)
        })
        .collect();
    for root in &wd.k_roots {
        // One representative per ± pair spans the same subalgebra.
        if alg.rs.height(root) > rat(0, 1) {
            k_basis.push(u_alpha(&alg, root));
            k_basis.push(v_alpha(&alg, root));
        }
    }
    let mut m_basis = Vec::new();
    for a in &wd.s_roots {
        m_basis.push(u_alpha(&alg, a));
        m_basis.push(v_alpha(&alg, a));
    }
    let in_k = |v: &CompactVector| in_centralizer(&alg, &wd, v);
    let in_m = |v: &CompactVector| to_m_coords(&alg, &wd, v).is_ok();
    for a in &k_basis {
        for b in &k_basis {
            let br = CompactVector { coords: alg.bracket(&a.coords, &b.coords) };
            assert!(in_k(&br), "[k,k] escaped k");
        }
        for b in &m_basis {
            let br = CompactVector { coords: alg.bracket(&a.coords, &b.coords) };
            assert!(in_m(&br), "[k,m] escaped m");
        }
    }
    for a in &m_basis {
        for b in &m_basis {
            let br = CompactVector { coords: alg.bracket(&a.coords, &b.coords) };
            assert!(in_k(&br), "[m,m] escaped k");
        }
    }
}

#[test]
fn killing_form_negative_definite_on_compact_basis() {
    let alg = algebra(RootFamily::C, 2);
    let mut basis: Vec<CompactVector> = (0..alg.rank())
        .map(|i| {
            let mut x = vec![rat(0, 1); alg.rank()];
            x[i] = rat(1, 1);
            cartan_i_vector(&x)
        })
        .collect();
    let positives: Vec<_> = alg
        .rs
        .roots
        .iter()
        .filter(|r| alg.rs.height(r) > rat(0, 1))
        .cloned()
        .collect();
    for root in &positives {
        basis.push(u_alpha(&alg, root));
        basis.push(v_alpha(&alg, root));
    }
    assert_eq!(basis.len(), alg.dim());
    let neg_gram = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        -alg.killing_pair(&basis[i], &basis[j])
    });
    assert_eq!(crate::exact::psd_check(&neg_gram), Ok(true));
}

#[test]
fn wolf_killing_norm_matches_dual_coxeter_oracle() {
    // <l,l>_B = 1/h∨ with the dual Coxeter numbers of the classical tables.
    for (f, rank, hv) in [
        (RootFamily::A, 2, 3),
        (RootFamily::A, 3, 4),
        (RootFamily::B, 3, 5),
        (RootFamily::C, 2, 3),
        (RootFamily::C, 3, 4),
        (RootFamily::D, 4, 6),
        (RootFamily::G, 2, 4),
        (RootFamily::F, 4, 9),
    ] {
        let alg = algebra(f, rank);
        let wd = wolf_decomposition(&alg.rs).unwrap();
        assert_eq!(wolf_killing_norm(&alg, &wd), rat(1, hv), "{f}{rank}");
    }
}

#[test]
fn i_h_lambda_killing_norm() {
    // B(iH_l, iH_l) = -<l,l>_B.
    let alg = algebra(RootFamily::A, 2);
    let wd = wolf_decomposition(&alg.rs).unwrap();
    let ih = cartan_i_vector(&alg.h_dual(&wd.lambda));
    assert_eq!(alg.killing_pair(&ih, &ih), -wolf_killing_norm(&alg, &wd));
}

#[test]
fn quaternion_ops_invariants_and_s_squared() {
    for (f, rank) in [(RootFamily::A, 2), (RootFamily::G, 2), (RootFamily::C, 2)] {
        let alg = algebra(f, rank);
        let wd = wolf_decomposition(&alg.rs).unwrap();
        let qo = quaternion_ops(&alg, &wd).unwrap();
        // With the coroot normalization the sl2-string scaling forces s² = 1.
        assert_eq!(qo.s_squared, rat(1, 1), "{f}{rank}");
        // JK = I on m.
        assert_eq!(qo.j_raw.mul_mat(&qo.k_raw), qo.i_mat, "{f}{rank}");
    }
}

#[test]
fn b_alpha_equals_two_over_root_norm() {
    // [e_a, e_{-a}] = B(e_a, e_{-a}) H_a forces b_a = 2/<a,a>_B.
    let alg = algebra(RootFamily::G, 2);
    for root in alg.rs.roots.clone() {
        let norm = alg.killing_root_product(&root, &root);
        assert_eq!(*alg.b_alpha(&root), rat(2, 1) / norm);
    }
}

#[test]
fn structure_constants_csv_contains_all_root_pairs() {
    let alg = algebra(RootFamily::A, 2);
    let csv = alg.structure_constants_csv();
    let lines: Vec<&str> = csv.trim().lines().collect();
    assert_eq!(lines[0], "alpha_index,beta_index,n");
    // A2 has 12 ordered root pairs whose sum is again a root.
    assert_eq!(lines.len() - 1, 12);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 3));
}

#[test]
fn perturbed_algebra_breaks_jacobi() {
    let alg = algebra(RootFamily::A, 2);
    let broken = alg.with_perturbed_constant(0);
    assert!(broken.jacobi_sweep().is_err());
    // The clean algebra passes, same sweep.
    assert!(alg.jacobi_sweep().is_ok());
}

#[test]
fn curvature_value_edge_cases() {
    let alg = algebra(RootFamily::A, 2);
    let wd = wolf_decomposition(&alg.rs).unwrap();
    let a = wd.s_roots[0].clone();
    let b = wd.s_roots[1].clone();
    let x = u_alpha(&alg, &a);
    let y = u_alpha(&alg, &b);
    // Antisymmetry: X = Y gives 0.
    assert_eq!(curvature_value(&alg, &wd, &x, &x, &y, &y).unwrap(), rat(0, 1));
    // Sectional numerator is non-negative (compact type).
    let sec = curvature_value(&alg, &wd, &x, &y, &y, &x).unwrap();
    assert!(sec >= rat(0, 1));
    // Vectors outside m are rejected.
    let ih = cartan_i_vector(&alg.h_dual(&wd.lambda));
    assert!(matches!(
        curvature_value(&alg, &wd, &ih, &y, &y, &x),
        Err(ChevalleyError::NotInIsotropy)
    ));
}

#[test]
fn unsupported_dimension_is_rejected() {
    // No type beyond E8 exists; the guard is on the algebra dimension.
    // B9 would be admissible as a root system but exceeds 248 dims? It is
    // 9·19 = 171 roots + 9 = 180 dims, fine; use a synthetic check instead:
    let rs = build_root_system(RootSystemId::new(RootFamily::B, 11)).unwrap();
    assert!(matches!(
        build_chevalley(&rs),
        Err(ChevalleyError::RankUnsupported(_))
    ));
}
