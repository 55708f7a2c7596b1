use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fibonacci::fib;
use crate::scalar::Scalar;

use super::matrix::{Matrix, Orientation};

/// A member of `A_n`: upper triangular, unit diagonal, strictly-upper
/// entries in {0, 1}. Only the strictly-upper cells are stored, one bit
/// each, row-major over cells with `col > row`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangular01 {
    n: usize,
    bits: Vec<u64>,
}

/// Number of strictly-upper cells of an `n x n` matrix.
pub const fn upper_cell_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Triangular01 {
    pub fn identity(n: usize) -> Self {
        Triangular01 {
            n,
            bits: vec![0; upper_cell_count(n).div_ceil(64)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut t = Self::identity(n);
        for r in 0..n {
            for c in r + 1..n {
                if f(r, c) {
                    t.set(r, c, true);
                }
            }
        }
        t
    }

    /// Matrix whose strictly-upper cells are the low bits of `word`, in
    /// cell order. Panics if the cells do not fit in 64 bits (n > 11).
    pub fn from_word(n: usize, word: u64) -> Self {
        let cells = upper_cell_count(n);
        assert!(cells <= 64, "n = {n} does not fit a packed word");
        let mask = if cells == 64 {
            u64::MAX
        } else {
            (1u64 << cells) - 1
        };
        let mut t = Self::identity(n);
        if let Some(w) = t.bits.first_mut() {
            *w = word & mask;
        }
        t
    }

    /// Packed word when the cells fit in 64 bits.
    pub fn to_word(&self) -> Option<u64> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn from_matrix<T: Scalar>(m: &Matrix<T>) -> Result<Self> {
        let n = m.n();
        let mut t = Self::identity(n);
        for r in 0..n {
            for c in 0..n {
                let v = &m[(r, c)];
                let ok = match r.cmp(&c) {
                    std::cmp::Ordering::Equal => v.is_one(),
                    std::cmp::Ordering::Greater => v.is_zero(),
                    std::cmp::Ordering::Less => v.is_zero() || v.is_one(),
                };
                if !ok {
                    return Err(Error::NotUnitTriangular(format!(
                        "entry ({}, {}) = {v} is not allowed in a (0,1) unit upper triangular matrix",
                        r + 1,
                        c + 1
                    )));
                }
                if r < c && v.is_one() {
                    t.set(r, c, true);
                }
            }
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn cell(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < c && c < self.n);
        r * self.n - r * (r + 1) / 2 + (c - r - 1)
    }

    /// Entry at (r, c), 0-based; diagonal reads as 1.
    pub fn get(&self, r: usize, c: usize) -> bool {
        match r.cmp(&c) {
            std::cmp::Ordering::Equal => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Less => {
                let k = self.cell(r, c);
                self.bits[k / 64] >> (k % 64) & 1 == 1
            }
        }
    }

    /// Sets a strictly-upper cell. Panics on the diagonal or below it.
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < c && c < self.n,
            "({r}, {c}) is not a strictly-upper cell"
        );
        let k = self.cell(r, c);
        if value {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn ones_above_diagonal(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn to_matrix<T: Scalar>(&self) -> Matrix<T> {
        Matrix::from_fn(
            self.n,
            |r, c| {
                if self.get(r, c) {
                    T::one()
                } else {
                    T::zero()
                }
            },
        )
    }

    /// Exact inverse. Back-substitution needs only additions here.
    pub fn inverse(&self) -> Matrix<BigInt> {
        let n = self.n;
        let mut inv = Matrix::<BigInt>::identity(n);
        for r in (0..n).rev() {
            for k in r + 1..n {
                if !self.get(r, k) {
                    continue;
                }
                for c in k..n {
                    let v = inv[(k, c)].clone();
                    if !v.is_zero() {
                        inv[(r, c)] -= v;
                    }
                }
            }
        }
        inv
    }

    /// `e^T A^{-1} e`.
    pub fn inverse_sum(&self) -> BigInt {
        row_sum_vector(self).values().iter().sum()
    }

    pub fn transpose_matrix<T: Scalar>(&self) -> Matrix<T> {
        self.to_matrix::<T>().transpose()
    }
}

impl std::fmt::Debug for Triangular01 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Triangular01 ")?;
        std::fmt::Debug::fmt(&self.to_matrix::<i64>(), f)
    }
}

/// Inverse of a unit triangular matrix (upper or lower) by back-substitution.
pub fn invert_unit_triangular<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    match a.unit_triangular_orientation() {
        Some(Orientation::Upper) => Ok(invert_unit_upper(a)),
        Some(Orientation::Lower) => Ok(invert_unit_upper(&a.transpose()).transpose()),
        None => Err(Error::NotUnitTriangular(
            "expected a triangular matrix with every diagonal entry equal to 1".into(),
        )),
    }
}

fn invert_unit_upper<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let n = a.n();
    let mut inv = Matrix::<T>::identity(n);
    for r in (0..n).rev() {
        for k in r + 1..n {
            let coef = a[(r, k)].clone();
            if coef.is_zero() {
                continue;
            }
            for c in k..n {
                let v = inv[(k, c)].clone();
                if v.is_zero() {
                    continue;
                }
                let delta = if coef.is_one() { v } else { coef.clone() * v };
                let cur = std::mem::replace(&mut inv[(r, c)], T::zero());
                inv[(r, c)] = cur - delta;
            }
        }
    }
    inv
}

/// `e^T A^{-1} e` for a unit upper triangular `A`, solving `A y = e` without
/// forming the inverse. The caller guarantees the shape.
pub fn unit_upper_solve_sum<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.n();
    let mut y: Vec<T> = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut acc = T::one();
        for k in r + 1..n {
            let coef = &a[(r, k)];
            if !coef.is_zero() {
                acc = acc - coef.clone() * y[k].clone();
            }
        }
        y[r] = acc;
    }
    y.into_iter().fold(T::zero(), |s, v| s + v)
}

/// Column sums of `A^{-1}`, i.e. the row vector `e^T A^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowSumVector(Vec<BigInt>);

impl RowSumVector {
    pub fn new(values: Vec<BigInt>) -> Self {
        RowSumVector(values)
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The absolutely dominant vector `v_i = (-1)^i F_{i-1}` (1-based) with
    /// the local convention `F_0 = -1`, so it starts `1, 1, -1, 2, -3, 5`.
    pub fn dominant(n: usize) -> Self {
        let values = (1..=n)
            .map(|i| {
                let mag = if i == 1 {
                    -BigInt::one()
                } else {
                    fib(i as i64 - 1).expect("index >= 1")
                };
                if i % 2 == 0 {
                    mag
                } else {
                    -mag
                }
            })
            .collect();
        RowSumVector(values)
    }

    /// Whether `|self_i| >= |other_i|` for every coordinate.
    pub fn absolutely_dominates(&self, other: &RowSumVector) -> bool {
        use num_traits::Signed;
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| a.abs() >= b.abs())
    }
}

/// `e^T A^{-1}` for `A` in `A_n`, by forward substitution on `w A = e^T`.
pub fn row_sum_vector(a: &Triangular01) -> RowSumVector {
    let n = a.n();
    let mut w: Vec<BigInt> = Vec::with_capacity(n);
    for c in 0..n {
        let mut acc = BigInt::one();
        for (r, wr) in w.iter().enumerate() {
            if a.get(r, c) {
                acc -= wr;
            }
        }
        w.push(acc);
    }
    RowSumVector(w)
}
