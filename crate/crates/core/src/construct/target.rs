use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fibonacci::{fib, signed_representation};
use crate::linalg::{row_sum_vector, Triangular01};

use super::dominant_matrix;

/// `[2 - F_{n-1}, 2 + F_{n-1}]`, the attainable inverse sums over `A_n`.
pub fn sum_interval(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the sum interval is stated for n >= 3".into(),
        });
    }
    let f = fib(n as i64 - 1)?;
    Ok((BigInt::from(2) - &f, BigInt::from(2) + f))
}

/// A matrix in `A_n` with `S(A^{-1}) = sum`.
///
/// Block form `[[C, a, b], [0, 1, 0], [0, 0, 1]]` with `C` the dominant
/// matrix of size `n - 2`, for which `S(A^{-1}) = 2 + sum_i c_i (1 - a_i - b_i)`.
/// The one-sided signed representation of `sum - 2` picks each weight
/// `w_i = 1 - a_i - b_i` in {1, 0, -1}.
pub fn construct_with_sum(n: usize, sum: &BigInt) -> Result<Triangular01> {
    let (lo, hi) = sum_interval(n)?;
    if *sum < lo || *sum > hi {
        return Err(Error::out_of_range("S", sum, lo, hi));
    }
    let target = sum - BigInt::from(2);
    let rep = signed_representation(&target, n)?;
    let inner = dominant_matrix(n - 2);
    let c = row_sum_vector(&inner);
    let m = n - 2;

    let mut a = Triangular01::from_fn(n, |r, col| col < m && inner.get(r, col));
    for (i, (&u, ci)) in rep.coeffs().iter().zip(c.values()).enumerate() {
        let weight = if ci.is_negative() { -u } else { u };
        let (alpha, beta) = match weight {
            1 => (false, false),
            0 => (true, false),
            _ => (true, true),
        };
        a.set(i, m, alpha);
        a.set(i, m + 1, beta);
    }
    debug_assert_eq!(a.inverse_sum(), *sum);
    Ok(a)
}

/// Upper triangular Toeplitz matrix with alternating first row
/// `(1, 0, 1, 0, 1, ...)`. Its inverse is `I - N^2` (`N` the shift), which
/// sums to `n - (n - 2) = 2`. Truncating the row to a single off-diagonal 1
/// only works for `n <= 4`.
pub fn toeplitz_sum_two(n: usize) -> Result<Triangular01> {
    if n < 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "needs a (1, 3) cell".into(),
        });
    }
    Ok(Triangular01::from_fn(n, |r, c| (c - r) % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{entry_sum, Matrix};

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn extremes_at_seven() {
        assert_eq!(sum_interval(7).unwrap(), (b(-6), b(10)));
        for s in [10, -6, 2, 0, 7] {
            let a = construct_with_sum(7, &b(s)).unwrap();
            assert_eq!(entry_sum(&a.inverse()), b(s));
        }
    }

    #[test]
    fn toeplitz_sums_to_two() {
        let three = toeplitz_sum_two(3).unwrap();
        assert_eq!(
            three.to_matrix::<BigInt>(),
            Matrix::from_i64_rows(&[[1, 0, 1], [0, 1, 0], [0, 0, 1]]).unwrap()
        );
        for n in 3..=12 {
            let t = toeplitz_sum_two(n).unwrap();
            assert_eq!(entry_sum(&t.inverse()), b(2), "n = {n}");
        }
        assert_eq!(
            toeplitz_sum_two(4).unwrap().to_matrix::<BigInt>().row(0),
            &[b(1), b(0), b(1), b(0)]
        );
        assert!(toeplitz_sum_two(2).is_err());
        // A lone (1, 3) entry is not enough from n = 5 on.
        let lone = Triangular01::from_fn(5, |r, c| c == r + 2);
        assert_eq!(lone.inverse_sum(), b(3));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            construct_with_sum(7, &b(11)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(construct_with_sum(7, &b(-7)).is_err());
        assert!(matches!(
            construct_with_sum(2, &b(2)),
            Err(Error::UnsupportedDimension { .. })
        ));
    }

    #[test]
    fn round_trip_small_dimensions() {
        for n in 3..=12usize {
            let (lo, hi) = sum_interval(n).unwrap();
            let (lo, hi) = (i64::try_from(lo).unwrap(), i64::try_from(hi).unwrap());
            for s in lo..=hi {
                let a = construct_with_sum(n, &b(s)).unwrap();
                assert_eq!(a.n(), n);
                assert_eq!(entry_sum(&a.inverse()), b(s), "n = {n}, S = {s}");
            }
        }
    }
}
