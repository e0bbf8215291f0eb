//! Closed-form coordinate realizations of the irreducible root systems.
//!
//! A_n lives in Q^{n+1} as the differences of coordinate vectors; B/C/D in
//! Q^n; E6 and E7 as subsystems of the Q^8 realization of E8; F4 in Q^4; G2
//! inside the sum-zero hyperplane of Q^3 so that every coordinate stays
//! rational.

use num_traits::Zero;

use super::{Root, RootFamily, RootSystemId};
use crate::exact::{rat, Scalar};

fn unit(dim: usize, i: usize) -> Root {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = rat(1, 1);
    v
}

fn combine(dim: usize, terms: &[(i64, usize)]) -> Root {
    let mut v = vec![Scalar::zero(); dim];
    for &(c, i) in terms {
        v[i] += rat(c, 1);
    }
    v
}

fn half_vector(signs: &[i64]) -> Root {
    signs.iter().map(|&s| rat(s, 2)).collect()
}

/// Returns `(ambient_dim, roots, simple_roots)` for an admissible id.
pub fn realization(id: RootSystemId) -> (usize, Vec<Root>, Vec<Root>) {
    match id.family {
        RootFamily::A => type_a(id.rank),
        RootFamily::B => type_bcd(id.rank, Bcd::B),
        RootFamily::C => type_bcd(id.rank, Bcd::C),
        RootFamily::D => type_bcd(id.rank, Bcd::D),
        RootFamily::E => type_e(id.rank),
        RootFamily::F => type_f4(),
        RootFamily::G => type_g2(),
    }
}

fn type_a(n: usize) -> (usize, Vec<Root>, Vec<Root>) {
    let dim = n + 1;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                roots.push(combine(dim, &[(1, i), (-1, j)]));
            }
        }
    }
    let simple = (1..=n).map(|i| combine(dim, &[(1, i - 1), (-1, i)])).collect();
    (dim, roots, simple)
}

#[derive(Clone, Copy, PartialEq)]
enum Bcd {
    B,
    C,
    D,
}

fn type_bcd(n: usize, kind: Bcd) -> (usize, Vec<Root>, Vec<Root>) {
    let dim = n;
    let mut roots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(combine(dim, &[(si, i), (sj, j)]));
            }
        }
    }
    match kind {
        Bcd::B => {
            for i in 0..n {
                roots.push(combine(dim, &[(1, i)]));
                roots.push(combine(dim, &[(-1, i)]));
            }
        }
        Bcd::C => {
            for i in 0..n {
                roots.push(combine(dim, &[(2, i)]));
                roots.push(combine(dim, &[(-2, i)]));
            }
        }
        Bcd::D => {}
    }
    let mut simple: Vec<Root> =
        (0..n - 1).map(|i| combine(dim, &[(1, i), (-1, i + 1)])).collect();
    match kind {
        Bcd::B => simple.push(unit(dim, n - 1)),
        Bcd::C => simple.push(combine(dim, &[(2, n - 1)])),
        Bcd::D => simple.push(combine(dim, &[(1, n - 2), (1, n - 1)])),
    }
    (dim, roots, simple)
}

fn e8_roots() -> Vec<Root> {
    let dim = 8;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(combine(dim, &[(si, i), (sj, j)]));
            }
        }
    }
    // Half-integer roots: all signs ±1/2 with an even number of minus signs.
    for mask in 0u32..256 {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let signs: Vec<i64> =
            (0..8).map(|b| if mask & (1 << b) != 0 { -1 } else { 1 }).collect();
        roots.push(half_vector(&signs));
    }
    roots
}

fn e8_simple() -> Vec<Root> {
    let dim = 8;
    vec![
        half_vector(&[1, -1, -1, -1, -1, -1, -1, 1]),
        combine(dim, &[(1, 0), (1, 1)]),
        combine(dim, &[(1, 1), (-1, 0)]),
        combine(dim, &[(1, 2), (-1, 1)]),
        combine(dim, &[(1, 3), (-1, 2)]),
        combine(dim, &[(1, 4), (-1, 3)]),
        combine(dim, &[(1, 5), (-1, 4)]),
        combine(dim, &[(1, 6), (-1, 5)]),
    ]
}

fn type_e(rank: usize) -> (usize, Vec<Root>, Vec<Root>) {
    let all = e8_roots();
    let simple = e8_simple();
    match rank {
        8 => (8, all, simple),
        7 => {
            // Roots orthogonal to e7 + e8: coordinates satisfy x7 = -x8.
            let roots = all.into_iter().filter(|r| r[6] == -r[7].clone()).collect();
            (8, roots, simple[..7].to_vec())
        }
        6 => {
            // The span of the first six simple roots: x6 = x7 = -x8.
            let roots = all
                .into_iter()
                .filter(|r| r[5] == r[6] && r[6] == -r[7].clone())
                .collect();
            (8, roots, simple[..6].to_vec())
        }
        _ => unreachable!("inadmissible E rank"),
    }
}

fn type_f4() -> (usize, Vec<Root>, Vec<Root>) {
    let dim = 4;
    let mut roots = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(combine(dim, &[(si, i), (sj, j)]));
            }
        }
        roots.push(combine(dim, &[(1, i)]));
        roots.push(combine(dim, &[(-1, i)]));
    }
    for mask in 0u32..16 {
        let signs: Vec<i64> =
            (0..4).map(|b| if mask & (1 << b) != 0 { -1 } else { 1 }).collect();
        roots.push(half_vector(&signs));
    }
    let simple = vec![
        combine(dim, &[(1, 1), (-1, 2)]),
        combine(dim, &[(1, 2), (-1, 3)]),
        unit(dim, 3),
        half_vector(&[1, -1, -1, -1]),
    ];
    (dim, roots, simple)
}

fn type_g2() -> (usize, Vec<Root>, Vec<Root>) {
    let dim = 3;
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(combine(dim, &[(1, i), (-1, j)]));
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
        roots.push(combine(dim, &[(2, i), (-1, j), (-1, k)]));
        roots.push(combine(dim, &[(-2, i), (1, j), (1, k)]));
    }
    let simple = vec![
        combine(dim, &[(1, 0), (-1, 1)]),
        combine(dim, &[(-2, 0), (1, 1), (1, 2)]),
    ];
    (dim, roots, simple)
}
