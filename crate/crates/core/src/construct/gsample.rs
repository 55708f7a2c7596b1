use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{invert_unit_triangular, unit_upper_solve_sum, Matrix, Triangular01};

/// Unit upper triangular matrix with strictly-upper entries in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix {
    matrix: Matrix<BigRational>,
}

impl GMatrix {
    pub fn from_matrix(matrix: Matrix<BigRational>) -> Result<Self> {
        let n = matrix.n();
        let zero = BigRational::zero();
        let one = BigRational::one();
        for r in 0..n {
            for c in 0..n {
                let v = &matrix[(r, c)];
                let ok = match r.cmp(&c) {
                    std::cmp::Ordering::Equal => *v == one,
                    std::cmp::Ordering::Greater => *v == zero,
                    std::cmp::Ordering::Less => *v >= zero && *v <= one,
                };
                if !ok {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({}, {}) = {v} is outside the relaxation",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(GMatrix { matrix })
    }

    pub fn from_triangular(a: &Triangular01) -> Self {
        GMatrix {
            matrix: a.to_matrix(),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &Matrix<BigRational> {
        &self.matrix
    }

    pub fn inverse(&self) -> Matrix<BigRational> {
        invert_unit_triangular(&self.matrix).expect("unit upper triangular by construction")
    }

    /// `S(A^{-1})`, by back-substitution.
    pub fn inverse_sum(&self) -> BigRational {
        unit_upper_solve_sum(&self.matrix)
    }
}

/// Deterministic sample: each strictly-upper entry is `p/q` with `q` uniform
/// in `1..=denominator_bound` and `p` uniform in `0..=q`.
pub fn sample_g_matrix(n: usize, seed: u64, denominator_bound: u32) -> Result<GMatrix> {
    if denominator_bound == 0 {
        return Err(Error::InvalidArgument(
            "denominator bound must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrix = Matrix::from_fn(n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => BigRational::one(),
        std::cmp::Ordering::Greater => BigRational::zero(),
        std::cmp::Ordering::Less => {
            let q = rng.gen_range(1..=denominator_bound);
            let p = rng.gen_range(0..=q);
            BigRational::new(BigInt::from(p), BigInt::from(q))
        }
    });
    Ok(GMatrix { matrix })
}
