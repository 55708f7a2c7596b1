use num_traits::Signed;

use crate::linalg::{row_sum_vector, Triangular01};

/// A matrix in `A_n` whose row-sum vector `e^T A^{-1}` is the absolutely
/// dominant `(1, 1, -1, 2, -3, 5, ...)`.
///
/// Built two dimensions at a time. With `C` the result for `n - 2` and
/// `c = e^T C^{-1}`, the new matrix is
///
/// ```text
/// [ C  a  b ]
/// [ 0  1  1 ]
/// [ 0  0  1 ]
/// ```
///
/// For odd `n`, `a_i = 1` exactly on odd `i >= 3` and `b_i - a_i = sign(c_i)`;
/// for even `n`, `a_1 = 1`, `a_i = 1` on even `i` and `b_i - a_i = -sign(c_i)`.
/// This puts `(-1)^n F_{n-1}` in the last coordinate and `(-1)^{n-1} F_{n-2}`
/// in the one before it.
pub fn dominant_matrix(n: usize) -> Triangular01 {
    if n <= 2 {
        // Both base cases are identities: (1) and (1, 1).
        return Triangular01::identity(n);
    }
    let inner = dominant_matrix(n - 2);
    let c = row_sum_vector(&inner);
    let m = n - 2;
    let mut a = Triangular01::from_fn(n, |r, col| col < m && inner.get(r, col));
    for i in 1..=m {
        let sign_c: i8 = if c.values()[i - 1].is_positive() {
            1
        } else {
            assert!(
                c.values()[i - 1].is_negative(),
                "dominant coordinates are nonzero"
            );
            -1
        };
        let (alpha, beta): (i8, i8) = if n % 2 == 1 {
            let alpha = i8::from(i >= 3 && i % 2 == 1);
            (alpha, alpha + sign_c)
        } else {
            let alpha = i8::from(i == 1 || i % 2 == 0);
            (alpha, alpha - sign_c)
        };
        assert!(
            (0..=1).contains(&beta),
            "infeasible column entry at i = {i} for n = {n}"
        );
        a.set(i - 1, n - 2, alpha == 1);
        a.set(i - 1, n - 1, beta == 1);
    }
    a.set(n - 2, n - 1, true);
    a
}
