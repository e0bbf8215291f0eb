//! Exact polynomials in `m` variables as monomial-coefficient maps, with
//! the normalized sphere integral as the evaluation functional.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{sphere_moment, Scalar};

/// Polynomial over `Q[X_1..X_m]`, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly {
    pub terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `v`.
    pub fn diff(&self, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[v] -= 1;
            out.add_term(exp, c * Scalar::from(num_bigint::BigInt::from(e[v])));
        }
        out
    }

    /// Normalized integral over the unit sphere `S^{m-1}`.
    pub fn sphere_integral(&self, dim: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let moment = sphere_moment(e, dim).expect("well-formed exponent vector");
            if !moment.is_zero() {
                acc += c * moment;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn product_and_derivative() {
        // p = x0² x1, q = x1: pq = x0² x1²; d(pq)/dx1 = 2 x0² x1.
        let mut p = Poly::zero();
        p.add_term(vec![2, 1], rat(1, 1));
        let mut q = Poly::zero();
        q.add_term(vec![0, 1], rat(1, 1));
        let pq = p.mul(&q);
        assert_eq!(pq.terms.len(), 1);
        assert_eq!(pq.terms[&vec![2u32, 2]], rat(1, 1));
        let d = pq.diff(1);
        assert_eq!(d.terms[&vec![2u32, 1]], rat(2, 1));
    }

    #[test]
    fn sphere_integral_on_s1() {
        // ∫ x² over S¹, normalized, is 1/2.
        let mut p = Poly::zero();
        p.add_term(vec![2, 0], rat(1, 1));
        assert_eq!(p.sphere_integral(2), rat(1, 2));
    }
}
