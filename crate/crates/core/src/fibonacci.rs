//! Fibonacci numbers (`F_1 = F_2 = 1`), their sum identities, and the
//! restricted representations used by the target-sum constructor.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Growable cache of `F_1, F_2, ...` over any exact scalar.
#[derive(Debug, Clone)]
pub struct FibSequence<T = BigInt> {
    cache: Vec<T>,
}

impl<T: Scalar> Default for FibSequence<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> FibSequence<T> {
    pub fn new() -> Self {
        FibSequence {
            cache: vec![T::one(), T::one()],
        }
    }

    /// Cache precomputed through `F_k`.
    pub fn up_to(k: usize) -> Self {
        let mut s = Self::new();
        s.extend_to(k);
        s
    }

    fn extend_to(&mut self, k: usize) {
        while self.cache.len() < k {
            let len = self.cache.len();
            let next = self.cache[len - 1].clone() + self.cache[len - 2].clone();
            self.cache.push(next);
        }
    }

    /// `F_k`, extending the cache as needed.
    pub fn get(&mut self, k: usize) -> Result<&T> {
        if k == 0 {
            return Err(Error::FibIndex(0));
        }
        self.extend_to(k);
        Ok(&self.cache[k - 1])
    }

    /// `F_k` if already cached.
    pub fn cached(&self, k: usize) -> Option<&T> {
        k.checked_sub(1).and_then(|i| self.cache.get(i))
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `F_k` for `k >= 1`.
pub fn fib(k: i64) -> Result<BigInt> {
    if k < 1 {
        return Err(Error::FibIndex(k));
    }
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 2..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(b)
}

fn fib_table(k: usize) -> FibSequence<BigInt> {
    FibSequence::up_to(k.max(2))
}

/// Which of the three sum identities failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Lemma1Item {
    /// `1 + sum_{k<=n} F_k = F_{n+2}`
    AllTerms,
    /// `1 + sum_{k<=n} F_{2k} = F_{2n+1}`
    EvenTerms,
    /// `sum_{k<=n} F_{2k-1} = F_{2n}`
    OddTerms,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub n_max: usize,
    pub failures: Vec<(usize, Lemma1Item)>,
}

impl Lemma1Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the three sum identities for every `1 <= n <= n_max`.
pub fn check_lemma1(n_max: usize) -> Lemma1Report {
    let fibs = fib_table(2 * n_max + 2);
    let f = |k: usize| fibs.cached(k).expect("table covers index").clone();
    let mut failures = Vec::new();
    let (mut all, mut even, mut odd) = (BigInt::one(), BigInt::one(), BigInt::zero());
    for n in 1..=n_max {
        all += f(n);
        even += f(2 * n);
        odd += f(2 * n - 1);
        if all != f(n + 2) {
            failures.push((n, Lemma1Item::AllTerms));
        }
        if even != f(2 * n + 1) {
            failures.push((n, Lemma1Item::EvenTerms));
        }
        if odd != f(2 * n) {
            failures.push((n, Lemma1Item::OddTerms));
        }
    }
    Lemma1Report { n_max, failures }
}

fn alternating(i: usize, v: BigInt) -> BigInt {
    if i.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Both sides of the identity obtained from the `l = 2` extremal sums:
/// `sum_{i=1}^{n-4} (n-i)(-1)^i F_i + 4(-1)^{n-3} F_{n-3}` and
/// `(-1)^{n-1} F_{n-1} - (n-2)`. Requires `n >= 5`.
pub fn corollary3_sides(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 5 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "identity is stated for n >= 5".into(),
        });
    }
    let fibs = fib_table(n);
    let f = |k: usize| fibs.cached(k).unwrap().clone();
    let mut lhs: BigInt = (1..=n - 4)
        .map(|i| alternating(i, BigInt::from(n - i) * f(i)))
        .sum();
    lhs += alternating(n - 3, BigInt::from(4) * f(n - 3));
    let rhs = alternating(n - 1, f(n - 1)) - BigInt::from(n - 2);
    Ok((lhs, rhs))
}

/// Same for the `l = 3` identity:
/// `sum_{i=1}^{n-5} (n-i)(-1)^i F_i + 6(-1)^{n-4} F_{n-4} = (-1)^n F_{n-1} - (n-2)`.
/// Requires `n >= 6`.
pub fn corollary4_sides(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 6 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "identity is stated for n >= 6".into(),
        });
    }
    let fibs = fib_table(n);
    let f = |k: usize| fibs.cached(k).unwrap().clone();
    let mut lhs: BigInt = (1..=n - 5)
        .map(|i| alternating(i, BigInt::from(n - i) * f(i)))
        .sum();
    lhs += alternating(n - 4, BigInt::from(6) * f(n - 4));
    let rhs = alternating(n, f(n - 1)) - BigInt::from(n - 2);
    Ok((lhs, rhs))
}

pub fn check_corollary3(n: usize) -> Result<bool> {
    corollary3_sides(n).map(|(l, r)| l == r)
}

pub fn check_corollary4(n: usize) -> Result<bool> {
    corollary4_sides(n).map(|(l, r)| l == r)
}

/// Distinct indices `i_1 > i_2 > ...`, all `<= max_fib_index`, with
/// `sum F_{i_j} = target`. Greedy: repeatedly take the largest index whose
/// Fibonacci number still fits. At value 1 index 2 is taken before index 1.
pub fn restricted_representation(target: &BigInt, max_fib_index: usize) -> Result<Vec<usize>> {
    let fibs = fib_table(max_fib_index);
    let capacity: BigInt = (1..=max_fib_index)
        .map(|k| fibs.cached(k).unwrap().clone())
        .sum();
    if target.is_negative() || *target > capacity {
        return Err(Error::out_of_range("target", target, 0, capacity));
    }
    let mut rest = target.clone();
    let mut indices = Vec::new();
    let mut k = max_fib_index;
    while !rest.is_zero() {
        // The capacity bound guarantees some index <= k still fits.
        while *fibs.cached(k).expect("index stays positive") > rest {
            k -= 1;
        }
        rest -= fibs.cached(k).unwrap();
        indices.push(k);
        k -= 1;
    }
    Ok(indices)
}

/// Coefficients `u_1..u_{n-2}` in {-1, 0, 1} over the magnitudes
/// `1, F_1, F_2, ..., F_{n-3}` of the dominant row-sum vector of size `n - 2`.
#[derive(Clone, PartialEq, Eq)]
pub struct SignedFibRepresentation {
    n: usize,
    coeffs: Vec<i8>,
}

impl SignedFibRepresentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs
    }

    /// `|c_1| = 1`, `|c_i| = F_{i-1}` for `i >= 2`.
    pub fn magnitudes(&self) -> Vec<BigInt> {
        magnitudes(self.n)
    }

    pub fn value(&self) -> BigInt {
        self.coeffs
            .iter()
            .zip(self.magnitudes())
            .map(|(&u, m)| BigInt::from(u) * m)
            .sum()
    }
}

impl fmt::Debug for SignedFibRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SignedFibRepresentation(n={}, {:?})",
            self.n, self.coeffs
        )
    }
}

fn magnitudes(n: usize) -> Vec<BigInt> {
    let fibs = fib_table(n);
    (1..=n.saturating_sub(2))
        .map(|i| {
            if i == 1 {
                BigInt::one()
            } else {
                fibs.cached(i - 1).unwrap().clone()
            }
        })
        .collect()
}

/// One-sided signed representation of `target` with `|target| <= F_{n-1}`:
/// every coefficient shares the sign of `target`.
pub fn signed_representation(target: &BigInt, n: usize) -> Result<SignedFibRepresentation> {
    if n < 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "signed representations are defined for n >= 3".into(),
        });
    }
    let bound = fib(n as i64 - 1)?;
    if target.abs() > bound {
        return Err(Error::out_of_range("|T|", target.abs(), 0, &bound));
    }
    let sign: i8 = if target.is_negative() { -1 } else { 1 };
    let mut rest = target.abs();
    let mut coeffs = vec![0i8; n - 2];
    // F_1 + ... + F_{n-3} = F_{n-1} - 1, so only the top value needs the unit c_1.
    if rest == bound {
        coeffs[0] = sign;
        rest -= 1;
    }
    for k in restricted_representation(&rest, n - 3)? {
        // F_k is the magnitude of coordinate k + 1.
        coeffs[k] = sign;
    }
    Ok(SignedFibRepresentation { n, coeffs })
}
