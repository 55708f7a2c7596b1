//! Exact entry sums of inverses of (0,1) upper triangular matrices.
//!
//! For `n >= 3` the sum of the entries of `A^{-1}`, taken over invertible
//! (0,1) upper triangular `A`, ranges over exactly the integers in
//! `[2 - F_{n-1}, 2 + F_{n-1}]`. This crate builds matrices that hit every
//! value of that interval, generates the extremal matrices whose inverses
//! carry a Fibonacci pattern, and checks the surrounding identities by exact
//! arithmetic and exhaustive enumeration.
//!
//! The matrix code is generic over the scalar ring (see [`Scalar`]); the
//! public contracts use arbitrary precision integers and rationals through
//! the aliases below. Fixed-width `i64` is used only inside the enumerators,
//! where the entries are bounded.

pub mod construct;
pub mod error;
pub mod fibonacci;
pub mod linalg;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use scalar::{ExactInteger, Scalar};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Ratio};

/// Dense square matrix of arbitrary precision integers.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Dense square matrix of reduced rationals.
pub type RationalMatrix = linalg::Matrix<BigRational>;
/// Exact sum recorded by the enumerators; integral for triangular families.
pub type ExactSum = Ratio<i64>;

pub use construct::{
    band_partition, construct_w_matrix, construct_with_sum, dominant_matrix,
    extremal_pattern_matrix, sample_g_matrix, small_extremal, toeplitz_sum_two, BandPartition,
    ExtremalKind, GMatrix, WMatrix,
};
pub use fibonacci::{
    check_corollary3, check_corollary4, check_lemma1, fib, restricted_representation,
    signed_representation, FibSequence, SignedFibRepresentation,
};
pub use linalg::{
    determinant_exact, entry_sum, inverse_sum_via_determinant, invert_exact,
    invert_unit_triangular, row_sum_vector, Matrix, RowSumVector, Triangular01,
};
pub use search::{
    enumerate_general, enumerate_triangular, enumerate_w_determinants, hill_climb_general,
    verify_theorem_range, Direction, Family, SearchConfig, SearchResult, SumDistribution,
};
