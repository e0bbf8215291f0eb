//! Structure constants `N(a,b)` with `[e_a, e_b] = N(a,b) e_{a+b}`.
//!
//! Signs are fixed by the extraspecial-pair prescription: positive roots are
//! totally ordered by height then lexicographic coordinates; for each
//! non-simple positive root `g` the special pair `(x, h)` with `x + h = g`,
//! `x < h` and `x` minimal is extraspecial and gets `N(x, h) = p + 1 > 0`,
//! where `p` is the length of the root string `h - p·x, …, h`. Every other
//! constant is forced from these by the identities below, all of which hold
//! for the coroot normalization `[e_a, e_{-a}] = a^∨`:
//!
//! * `N(b, a) = -N(a, b)` and `N(-a, -b) = -N(a, b)`;
//! * for roots `a + b + c = 0`:
//!   `N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)`;
//! * for roots `a + b + c + d = 0`, pairwise non-opposite:
//!   `N(a,b)N(c,d)/(a+b,a+b) + N(b,c)N(a,d)/(b+c,b+c)
//!    + N(c,a)N(b,d)/(c+a,c+a) = 0`.
//!
//! The construction is validated downstream by an exhaustive Jacobi sweep
//! over all basis triples.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::Scalar;
use crate::rootsys::{dot, Root, RootSystem};

pub struct PositiveTable {
    /// Positive roots in ascending (height, lex) order.
    pub positives: Vec<Root>,
    index: BTreeMap<Root, usize>,
    /// `n[(i, j)] = N(positives[i], positives[j])` for pairs whose sum is a
    /// root; both orders stored.
    n: BTreeMap<(usize, usize), i64>,
}

impl PositiveTable {
    pub fn pos_index(&self, r: &[Scalar]) -> Option<usize> {
        self.index.get(r).copied()
    }

    fn get(&self, i: usize, j: usize) -> i64 {
        *self.n.get(&(i, j)).expect("structure constant for a non-root sum")
    }

    /// `N(a, b)` for arbitrary roots `a`, `b` (any signs) with `a + b ≠ 0`.
    /// Returns 0 when `a + b` is not a root.
    pub fn full_constant(&self, rs: &RootSystem, a: &[Scalar], b: &[Scalar]) -> i64 {
        let sum: Root = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if !rs.contains(&sum) {
            return 0;
        }
        let neg = |v: &[Scalar]| -> Root { v.iter().map(|x| -x.clone()).collect() };
        match (self.pos_index(a), self.pos_index(b)) {
            (Some(i), Some(j)) => self.get(i, j),
            (None, None) => -self.full_constant(rs, &neg(a), &neg(b)),
            (Some(_), None) => {
                // a = m > 0, b = -n with n > 0; reduce to positive pairs via
                // the triple rule applied to (m, -n, ±(n - m)).
                let m = a;
                let n = neg(b);
                let delta = sum.clone(); // m - n
                if self.pos_index(&delta).is_some() {
                    // (m, -n, -d) with d = m - n > 0:
                    // N(m,-n) = -(d,d)/(m,m) · N(n,d), n + d = m.
                    let i_n = self.pos_index(&n).unwrap();
                    let i_d = self.pos_index(&delta).unwrap();
                    let val = -(dot(&delta, &delta) / dot(m, m))
                        * Scalar::from(num_bigint::BigInt::from(self.get(i_n, i_d)));
                    expect_integer(val)
                } else {
                    // s = n - m > 0: N(m,-n) = (s,s)/(n,n) · N(s,m), s + m = n.
                    let s = neg(&sum);
                    let i_s = self.pos_index(&s).unwrap();
                    let i_m = self.pos_index(m).unwrap();
                    let val = (dot(&s, &s) / dot(&n, &n))
                        * Scalar::from(num_bigint::BigInt::from(self.get(i_s, i_m)));
                    expect_integer(val)
                }
            }
            (None, Some(_)) => -self.full_constant(rs, b, a),
        }
    }
}

fn expect_integer(v: Scalar) -> i64 {
    assert!(v.is_integer(), "structure constant came out non-integral: {v}");
    let (num, _) = v.into_raw();
    i64::try_from(&num).expect("structure constant exceeds i64")
}

/// Length `p` of the root string `h - p·x, …, h` in direction `-x`.
fn string_down(rs: &RootSystem, x: &[Scalar], h: &[Scalar]) -> i64 {
    let mut p = 0i64;
    let mut probe: Root = h.iter().zip(x).map(|(a, b)| a - b).collect();
    while rs.contains(&probe) {
        p += 1;
        probe = probe.iter().zip(x).map(|(a, b)| a - b).collect();
    }
    p
}

pub fn build_positive_table(rs: &RootSystem) -> PositiveTable {
    let positives = rs.positive_roots();
    let index: BTreeMap<Root, usize> =
        positives.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut table = PositiveTable { positives, index, n: BTreeMap::new() };

    let heights: Vec<Scalar> = table.positives.iter().map(|r| rs.height(r)).collect();

    for gi in 0..table.positives.len() {
        let gamma = table.positives[gi].clone();
        // Special pairs (x, h): x + h = gamma, x < h in the positive order.
        let mut special: Vec<(usize, usize)> = Vec::new();
        for xi in 0..table.positives.len() {
            if heights[xi] >= heights[gi] {
                break;
            }
            let rest: Root = gamma
                .iter()
                .zip(&table.positives[xi])
                .map(|(a, b)| a - b)
                .collect();
            if let Some(hi) = table.pos_index(&rest) {
                if xi < hi {
                    special.push((xi, hi));
                }
            }
        }
        if special.is_empty() {
            continue; // simple root
        }
        // The extraspecial pair has the minimal first component.
        let &(ei, eh) = special.iter().min_by_key(|(xi, _)| *xi).unwrap();
        let p = string_down(rs, &table.positives[ei], &table.positives[eh]);
        let n0 = p + 1;
        table.n.insert((ei, eh), n0);
        table.n.insert((eh, ei), -n0);

        for &(xi, hi) in &special {
            if (xi, hi) == (ei, eh) {
                continue;
            }
            // Four-root identity on (a, b, c, d) = (alpha, -x, beta, -h)
            // where (alpha, beta) is the extraspecial pair:
            //   N(x,h) = -(g,g)/N(alpha,beta) ·
            //            [ N(alpha,-x)N(beta,-h)/(alpha-x, alpha-x)
            //            + N(-x,beta)N(alpha,-h)/(beta-x, beta-x) ].
            let alpha = table.positives[ei].clone();
            let beta = table.positives[eh].clone();
            let x = table.positives[xi].clone();
            let h = table.positives[hi].clone();
            let neg = |v: &Root| -> Root { v.iter().map(|c| -c.clone()).collect() };

            let mut acc = Scalar::zero();
            let d1: Root = alpha.iter().zip(&x).map(|(a, b)| a - b).collect();
            if rs.contains(&d1) {
                let t = table.full_constant(rs, &alpha, &neg(&x)) as i64
                    * table.full_constant(rs, &beta, &neg(&h)) as i64;
                acc += Scalar::from(num_bigint::BigInt::from(t)) / dot(&d1, &d1);
            }
            let d2: Root = beta.iter().zip(&x).map(|(a, b)| a - b).collect();
            if rs.contains(&d2) {
                let t = table.full_constant(rs, &neg(&x), &beta) as i64
                    * table.full_constant(rs, &alpha, &neg(&h)) as i64;
                acc += Scalar::from(num_bigint::BigInt::from(t)) / dot(&d2, &d2);
            }
            let val = -dot(&gamma, &gamma) * acc
                / Scalar::from(num_bigint::BigInt::from(n0));
            let n_xh = expect_integer(val);
            assert!(n_xh != 0, "special pair with vanishing structure constant");
            let expected_mag = string_down(rs, &table.positives[xi], &table.positives[hi]) + 1;
            assert_eq!(
                n_xh.abs(),
                expected_mag,
                "structure constant magnitude must be p+1"
            );
            table.n.insert((xi, hi), n_xh);
            table.n.insert((hi, xi), -n_xh);
        }
    }
    table
}
