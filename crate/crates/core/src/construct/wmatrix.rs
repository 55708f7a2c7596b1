use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fibonacci::fib;
use crate::linalg::{determinant_exact, Matrix, Triangular01};

use super::construct_with_sum;

/// A member of `W_n`: 1 above the diagonal, 2 on it, 1 or 2 below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WMatrix {
    matrix: Matrix<BigInt>,
}

impl WMatrix {
    /// `W = A^T + J` for `A` in `A_n`, which gives `det W = 1 + S(A^{-1})`.
    pub fn from_triangular(a: &Triangular01) -> Self {
        WMatrix {
            matrix: a.transpose_matrix::<BigInt>().plus_all_ones(),
        }
    }

    pub fn from_matrix(matrix: Matrix<BigInt>) -> Result<Self> {
        if !is_w_pattern(&matrix) {
            return Err(Error::InvalidArgument(
                "entries must be 1 above the diagonal, 2 on it, 1 or 2 below".into(),
            ));
        }
        Ok(WMatrix { matrix })
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &Matrix<BigInt> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<BigInt> {
        self.matrix
    }

    pub fn determinant(&self) -> BigInt {
        determinant_exact(&self.matrix)
    }
}

pub fn is_w_pattern(m: &Matrix<BigInt>) -> bool {
    let (one, two) = (BigInt::from(1), BigInt::from(2));
    (0..m.n()).all(|r| {
        (0..m.n()).all(|c| {
            let v = &m[(r, c)];
            match c.cmp(&r) {
                std::cmp::Ordering::Greater => *v == one,
                std::cmp::Ordering::Equal => *v == two,
                std::cmp::Ordering::Less => *v == one || *v == two,
            }
        })
    })
}

/// `[3 - F_{n-1}, 3 + F_{n-1}]`, the determinants attained on `W_n`.
pub fn determinant_interval(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the determinant interval is stated for n >= 3".into(),
        });
    }
    let f = fib(n as i64 - 1)?;
    Ok((BigInt::from(3) - &f, BigInt::from(3) + f))
}

/// A member of `W_n` with determinant `det`.
pub fn construct_w_matrix(n: usize, det: &BigInt) -> Result<WMatrix> {
    let (lo, hi) = determinant_interval(n)?;
    if *det < lo || *det > hi {
        return Err(Error::out_of_range("D", det, lo, hi));
    }
    let a = construct_with_sum(n, &(det - BigInt::from(1)))?;
    Ok(WMatrix::from_triangular(&a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        for (n, d) in [(3, 3), (7, 11), (7, -5)] {
            let w = construct_w_matrix(n, &BigInt::from(d)).unwrap();
            assert!(is_w_pattern(w.matrix()));
            assert_eq!(w.determinant(), BigInt::from(d));
        }
        assert_eq!(
            determinant_interval(7).unwrap(),
            (BigInt::from(-5), BigInt::from(11))
        );
        assert!(matches!(
            construct_w_matrix(7, &BigInt::from(12)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn pattern_validation() {
        let bad = Matrix::<BigInt>::from_i64_rows(&[[2, 2], [1, 2]]).unwrap();
        assert!(WMatrix::from_matrix(bad).is_err());
        let ok = Matrix::<BigInt>::from_i64_rows(&[[2, 1], [2, 2]]).unwrap();
        assert_eq!(
            WMatrix::from_matrix(ok).unwrap().determinant(),
            BigInt::from(2)
        );
    }
}
