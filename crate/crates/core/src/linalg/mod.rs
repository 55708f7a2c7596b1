//! Exact integer and rational matrix arithmetic.

mod determinant;
mod matrix;
mod text;
mod triangular;

pub use determinant::{
    adjugate, bareiss_in_place, determinant_exact, inverse_sum_via_determinant, invert_exact,
};
pub use matrix::{entry_sum, Matrix, Orientation};
pub use text::{format_matrix, parse_matrix};
pub use triangular::{
    invert_unit_triangular, row_sum_vector, unit_upper_solve_sum, RowSumVector, Triangular01,
};
