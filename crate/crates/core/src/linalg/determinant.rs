use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::{ExactInteger, Scalar};

use super::matrix::Matrix;
use super::triangular::invert_unit_triangular;

/// Fraction-free (Bareiss) elimination on a row-major `n x n` buffer,
/// returning the determinant. The buffer is destroyed. Every division is
/// exact, so integer rings never see a remainder. Pivot: first nonzero
/// entry in the column; a row swap flips the sign.
pub fn bareiss_in_place<T: Scalar>(a: &mut [T], n: usize) -> T {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            for c in k..n {
                a.swap(p * n + c, k * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = a[i * n + j].clone() * pivot.clone() - lead.clone() * a[k * n + j].clone();
                a[i * n + j] = v / prev.clone();
            }
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

pub fn determinant_exact<T: Scalar>(m: &Matrix<T>) -> T {
    let mut buf = m.as_slice().to_vec();
    bareiss_in_place(&mut buf, m.n())
}

/// `S(A^{-1}) = (det(A + J) - det(A)) / det(A)`.
pub fn inverse_sum_via_determinant<T: ExactInteger>(m: &Matrix<T>) -> Result<Ratio<T>> {
    let det = determinant_exact(m);
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let det_plus_j = determinant_exact(&m.plus_all_ones());
    Ok(Ratio::new(det_plus_j - det.clone(), det))
}

/// Transpose of the cofactor matrix, each cofactor by fraction-free
/// elimination of the corresponding minor.
pub fn adjugate<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.n();
    if n == 1 {
        return Matrix::identity(1);
    }
    let mut minor = Vec::with_capacity((n - 1) * (n - 1));
    Matrix::from_fn(n, |r, c| {
        // adj(A)[r][c] = (-1)^(r+c) * det(A without row c and column r)
        minor.clear();
        for i in (0..n).filter(|&i| i != c) {
            for j in (0..n).filter(|&j| j != r) {
                minor.push(m[(i, j)].clone());
            }
        }
        let d = bareiss_in_place(&mut minor, n - 1);
        if (r + c) % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

/// Exact rational inverse of an integer matrix: back-substitution for unit
/// triangular input, `adj(A) / det(A)` otherwise.
pub fn invert_exact<T: ExactInteger>(m: &Matrix<T>) -> Result<Matrix<Ratio<T>>> {
    if m.unit_triangular_orientation().is_some() {
        let inv = invert_unit_triangular(m)?;
        return Ok(inv.map(|v| Ratio::from_integer(v.clone())));
    }
    let det = determinant_exact(m);
    if det.is_zero() {
        return Err(Error::Singular);
    }
    Ok(adjugate(m).map(|v| Ratio::new(v.clone(), det.clone())))
}
