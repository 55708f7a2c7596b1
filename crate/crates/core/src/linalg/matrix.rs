use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Upper,
    Lower,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// All-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::one(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row,
                    cols: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix { n, data })
    }

    /// Convenience for fixtures written as small integer literals.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self>
    where
        T: From<i64>,
    {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| T::from(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self[(c, r)].clone())
    }

    /// `self + J`, formed entry-wise.
    pub fn plus_all_ones(&self) -> Self {
        self.map(|v| v.clone() + T::one())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        let n = self.n;
        Ok(Self::from_fn(n, |r, c| {
            (0..n).fold(T::zero(), |acc, k| {
                acc + self[(r, k)].clone() * rhs[(k, c)].clone()
            })
        }))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| {
                let v = &self[(r, c)];
                if r == c {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    /// Orientation if the matrix is triangular with every diagonal entry 1.
    /// The identity reports `Upper`.
    pub fn unit_triangular_orientation(&self) -> Option<Orientation> {
        let n = self.n;
        if !(0..n).all(|i| self[(i, i)].is_one()) {
            return None;
        }
        let lower_zero = (0..n).all(|r| (0..r).all(|c| self[(r, c)].is_zero()));
        if lower_zero {
            return Some(Orientation::Upper);
        }
        let upper_zero = (0..n).all(|r| (r + 1..n).all(|c| self[(r, c)].is_zero()));
        upper_zero.then_some(Orientation::Lower)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.n + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.n + c]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.n, self.n)?;
        for r in 0..self.n {
            write!(f, "  ")?;
            for c in 0..self.n {
                write!(f, "{:>4}", self.data[r * self.n + c])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// `S(X) = e^T X e`.
pub fn entry_sum<T: Scalar>(m: &Matrix<T>) -> T {
    m.as_slice()
        .iter()
        .fold(T::zero(), |acc, v| acc + v.clone())
}
