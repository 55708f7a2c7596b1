//! Scalar traits the matrix algorithms are written against.
//!
//! Everything in [`crate::linalg`] only needs exact ring operations (plus
//! exact division in the fraction-free determinant), so the same code runs
//! over `i64` in the enumerators, over [`num_bigint::BigInt`] in the public
//! API, and over [`num_rational::Ratio`] for rational matrices. Floating
//! point types are deliberately not given these impls.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact commutative ring element with exact division where it divides.
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + Debug + Display + FromStr + Send + Sync + 'static
{
}

impl Scalar for i32 {}
impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}
impl<T> Scalar for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + FromStr + Send + Sync + 'static,
    Ratio<T>: FromStr,
{
}

/// Integer rings: the determinant formula returns `Ratio<Self>`.
pub trait ExactInteger: Scalar + Integer {}

impl ExactInteger for i32 {}
impl ExactInteger for i64 {}
impl ExactInteger for i128 {}
impl ExactInteger for BigInt {}
