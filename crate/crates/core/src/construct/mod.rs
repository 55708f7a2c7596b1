//! Constructions: dominant row-sum matrices, arbitrary target sums, the
//! banded extremal matrices with Fibonacci-patterned inverses, the (1,2)
//! determinant family, and sampling of the real relaxation.

mod band;
mod dominant;
mod gsample;
mod target;
mod wmatrix;

pub use band::{
    band_partition, extremal_pattern_matrix, small_extremal, BandPartition, ExtremalKind,
};
pub use dominant::dominant_matrix;
pub use gsample::{sample_g_matrix, GMatrix};
pub use target::{construct_with_sum, sum_interval, toeplitz_sum_two};
pub use wmatrix::{construct_w_matrix, determinant_interval, WMatrix};
