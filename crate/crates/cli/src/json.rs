//! JSON encodings shared by the subcommands. Integral values that fit in
//! `i64` are numbers; everything else is a decimal string (`"p/q"` for
//! rationals).

use fibsum_core::linalg::Matrix;
use fibsum_core::{BigInt, BigRational, Scalar};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn rational(v: &BigRational) -> Value {
    if v.is_integer() {
        int(&v.to_integer())
    } else {
        json!(v.to_string())
    }
}

pub fn matrix<T: Scalar>(m: &Matrix<T>, cell: impl Fn(&T) -> Value) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(&cell).collect()))
            .collect(),
    )
}

pub fn int_matrix(m: &Matrix<BigInt>) -> Value {
    matrix(m, int)
}

pub fn rational_matrix(m: &Matrix<BigRational>) -> Value {
    matrix(m, rational)
}
