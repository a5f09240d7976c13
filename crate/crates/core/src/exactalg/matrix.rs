use std::ops::{Index, IndexMut};

use crate::exactalg::MPoly;
use crate::scalar::{Domain, Scalar};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn scalar(n: usize, s: T) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { s.clone() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + other[(r, c)].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() - other[(r, c)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() * s.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self[(r, k)].clone() * other[(k, c)].clone())
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).fold(T::zero(), |acc, k| acc + self[(r, k)].clone() * v[k].clone()))
            .collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Evaluates a polynomial at pairwise commuting square matrices.
    pub fn eval_poly(poly: &MPoly<T>, args: &[Matrix<T>]) -> Matrix<T> {
        assert_eq!(poly.arity(), args.len());
        let n = args.first().map_or(0, |m| m.rows);
        let mut out = Matrix::zeros(n, n);
        for (exp, c) in poly.terms() {
            let mut t = Matrix::scalar(n, c.clone());
            for (m, &e) in args.iter().zip(exp) {
                if e > 0 {
                    t = t.mul(&m.pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Characteristic polynomial `det(x·I − A)` as a univariate polynomial.
    pub fn charpoly(&self) -> MPoly<T>
    where
        T: Domain,
    {
        assert!(self.is_square());
        let x = MPoly::var(1, 0);
        let m = Matrix::from_fn(self.rows, self.cols, |r, c| {
            let a = MPoly::constant(1, self[(r, c)].clone());
            if r == c {
                &x - &a
            } else {
                -&a
            }
        });
        if self.rows == 0 {
            return MPoly::one(1);
        }
        m.det_bareiss()
    }
}

impl<T: Domain> Matrix<T> {
    /// Determinant by fraction-free (Bareiss) elimination; every division is exact.
    ///
    /// Panics on an empty matrix (there is no element to build `1` from).
    pub fn det_bareiss(&self) -> T {
        assert!(self.rows == self.cols, "determinant of non-square matrix");
        let n = self.rows;
        assert!(n > 0, "determinant of empty matrix");
        let mut a = self.data.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut prev = a[0].one_like();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if a[idx(k, k)].is_zero_elem() {
                let Some(swap) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero_elem()) else {
                    return a[0].zero_like();
                };
                for c in 0..n {
                    a.swap(idx(k, c), idx(swap, c));
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[idx(i, j)].mul_ref(&a[idx(k, k)]).sub_ref(&a[idx(i, k)].mul_ref(&a[idx(k, j)]));
                    a[idx(i, j)] = num.div_exact(&prev).expect("Bareiss division must be exact");
                }
                a[idx(i, k)] = a[idx(i, k)].zero_like();
            }
            prev = a[idx(k, k)].clone();
        }
        let det = a[idx(n - 1, n - 1)].clone();
        if negate {
            det.neg_ref()
        } else {
            det
        }
    }
}

impl<T: Scalar> Matrix<T>
where
    T: Domain,
{
    /// Row-reduced echelon form over a field; returns (rref, pivot columns).
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].clone();
            for c in 0..m.cols {
                m[(row, c)] = m[(row, c)].clone() / inv.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in 0..m.cols {
                        let v = m[(r, c)].clone() - f.clone() * m[(row, c)].clone();
                        m[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                T::one()
            } else {
                T::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }
}
