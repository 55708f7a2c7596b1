//! Exhaustive scans over packed matrix encodings and heuristic search over
//! general (0,1) matrices.

mod distribution;
mod enumerate;
mod hill;
mod verify;

pub use distribution::{Family, SumDistribution, Witness};
pub use enumerate::{
    enumerate, enumerate_general, enumerate_range, enumerate_triangular, enumerate_w_determinants,
    max_abs_row_sums, state_count,
};
pub use hill::{hill_climb_general, Direction, SearchConfig, SearchResult};
pub use verify::{
    verify_theorem_range, verify_theorem_range_with, RangeMethod, TheoremRangeReport,
};

/// Runs `f` on a pool of `jobs` threads (all cores when `None`).
pub(crate) fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(k) if k >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}
