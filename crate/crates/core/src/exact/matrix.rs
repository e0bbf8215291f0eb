use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::gauss::GaussScalar;
use super::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has a nonzero imaginary part")]
    NotReal,
    #[error("singular system")]
    Singular,
}

/// Dense matrix over an exact field. `Matrix<Scalar>` carries real rational
/// data (Killing forms, operator restrictions); `Matrix<GaussScalar>` the
/// complexified ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix with Gaussian-rational entries, as carried by ad-matrices of the
/// complexified algebra.
pub type ExactMatrix = Matrix<GaussScalar>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + PartialEq,
{
    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..r {
                if self.at(r, c) != self.at(c, r) {
                    return false;
                }
            }
        }
        true
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
{
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + &(self.at(r, k) * rhs.at(k, c));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + &(self.at(r, k) * &v[k]);
                }
                acc
            })
            .collect()
    }

}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    pub fn add_mat(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }

    pub fn sub_mat(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

/// Exact Gaussian elimination with partial (first-nonzero) pivoting.
/// Returns a solution of `a x = b` or `None` when the system is singular
/// or inconsistent.
pub fn solve<T>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>>
where
    T: Clone + Zero + PartialEq + Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T> + Sub<&'a T, Output = T> + Div<&'a T, Output = T>,
{
    assert_eq!(a.rows, b.len());
    let n = a.rows;
    let m = a.cols;
    let mut aug: Vec<Vec<T>> = (0..n)
        .map(|r| {
            let mut row: Vec<T> = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(rank, p);
        for r in 0..n {
            if r != rank && !aug[r][col].is_zero() {
                let factor = &aug[r][col] / &aug[rank][col];
                for c in col..=m {
                    let delta = &factor * &aug[rank][c];
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == n {
            break;
        }
    }

    // Inconsistent system: zero row with nonzero rhs.
    for r in rank..n {
        if !aug[r][m].is_zero() {
            return None;
        }
    }

    let mut x = vec![T::zero(); m];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = &aug[r][m] / &aug[r][col];
    }
    Some(x)
}

/// Basis for the kernel of `a`, by exact reduced row-echelon elimination.
pub fn kernel_basis<T>(a: &Matrix<T>) -> Vec<Vec<T>>
where
    T: Clone + Zero + One + PartialEq + Neg<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T> + Sub<&'a T, Output = T> + Div<&'a T, Output = T>,
{
    let n = a.rows;
    let m = a.cols;
    let mut rows: Vec<Vec<T>> = (0..n).map(|r| a.row(r).to_vec()).collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; m];
    let mut rank = 0usize;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv_entries: Vec<T> = {
            let pivot = rows[rank][col].clone();
            rows[rank].iter().map(|v| v / &pivot).collect()
        };
        rows[rank] = inv_entries;
        for r in 0..n {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..m {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == n {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in 0..m {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![T::zero(); m];
        v[free] = T::one();
        for col in 0..m {
            if let Some(r) = pivot_of_col[col] {
                v[col] = -rows[r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Decides positive semidefiniteness of a real symmetric matrix exactly, by
/// pivoted symmetric elimination. No eigenvalues, no floating point.
pub fn psd_check(m: &Matrix<Scalar>) -> Result<bool, MatrixError> {
    if m.rows != m.cols {
        return Err(MatrixError::ShapeMismatch(format!("{}x{}", m.rows, m.cols)));
    }
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let n = m.rows;
    let mut a: Vec<Vec<Scalar>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();

    while !active.is_empty() {
        // Symmetric pivoting: bring any index with a nonzero diagonal entry
        // to the front. A PSD matrix with vanishing diagonal on the active
        // block must vanish there entirely.
        let pivot_pos = active.iter().position(|&i| !a[i][i].is_zero());
        let Some(pos) = pivot_pos else {
            let all_zero = active
                .iter()
                .all(|&i| active.iter().all(|&j| a[i][j].is_zero()));
            return Ok(all_zero);
        };
        let p = active.remove(pos);
        if a[p][p] < Scalar::zero() {
            return Ok(false);
        }
        let d = a[p][p].clone();
        for idx in 0..active.len() {
            let i = active[idx];
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                let delta = &f * &a[p][j];
                a[i][j] = &a[i][j] - &delta;
            }
        }
    }
    Ok(true)
}

/// `psd_check` for a Gaussian matrix whose entries must all be real.
pub fn psd_check_gauss(m: &Matrix<GaussScalar>) -> Result<bool, MatrixError> {
    if m.data.iter().any(|z| !z.is_real()) {
        return Err(MatrixError::NotReal);
    }
    psd_check(&m.map(|z| z.re.clone()))
}

impl Matrix<GaussScalar> {
    pub fn trace_gauss(&self) -> GaussScalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = GaussScalar::zero();
        for k in 0..self.rows {
            acc += self.at(k, k);
        }
        acc
    }
}

impl Matrix<Scalar> {
    pub fn trace_rat(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = Scalar::zero();
        for k in 0..self.rows {
            acc += self.at(k, k);
        }
        acc
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|v| v * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_fn(rows.len(), rows[0].len(), |r, c| rat(rows[r][c], 1))
    }

    #[test]
    fn psd_identity_and_indefinite() {
        assert_eq!(psd_check(&Matrix::<Scalar>::identity(3)), Ok(true));
        assert_eq!(psd_check(&m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]])), Ok(false));
    }

    #[test]
    fn psd_rank_deficient() {
        // xxᵀ for x = (1,2): PSD of rank 1.
        assert_eq!(psd_check(&m(&[&[1, 2], &[2, 4]])), Ok(true));
        // Zero diagonal with nonzero off-diagonal cannot be PSD.
        assert_eq!(psd_check(&m(&[&[0, 1], &[1, 0]])), Ok(false));
    }

    #[test]
    fn psd_a2_gram() {
        // Gram matrix of the A2 simple roots; eigenvalues 1 and 3.
        assert_eq!(psd_check(&m(&[&[2, -1], &[-1, 2]])), Ok(true));
    }

    #[test]
    fn psd_rejects_nonsymmetric() {
        assert_eq!(psd_check(&m(&[&[1, 2], &[0, 1]])), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn solve_and_kernel() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[rat(5, 1), rat(10, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(3, 1)]);

        let singular = m(&[&[1, 2], &[2, 4]]);
        let k = kernel_basis(&singular);
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(singular.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn trace_of_commutator_vanishes() {
        let a = m(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let b = m(&[&[0, 1, 1], &[2, 2, -3], &[1, 0, 1]]);
        let comm = a.mul_mat(&b).sub_mat(&b.mul_mat(&a));
        assert!(comm.trace_rat().is_zero());
    }
}
