use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::bareiss_in_place;
use crate::ExactSum;

use super::distribution::{Family, SumDistribution};
use super::with_jobs;

const TRIANGULAR_MAX_N: usize = 8;
const GENERAL_MAX_N: usize = 5;
const W_MAX_N: usize = 6;
const MIN_N: usize = 3;

/// Indices handed to one worker at a time.
const CHUNK: u64 = 1 << 14;

/// Number of packed states of a family at size `n`.
pub fn state_count(family: Family, n: usize) -> u64 {
    let bits = match family {
        Family::Triangular | Family::W => n * (n - 1) / 2,
        Family::General => n * n,
    };
    1u64 << bits
}

fn check_size(family: Family, n: usize) -> Result<()> {
    let max = match family {
        Family::Triangular => TRIANGULAR_MAX_N,
        Family::General => GENERAL_MAX_N,
        Family::W => W_MAX_N,
    };
    if (MIN_N..=max).contains(&n) {
        return Ok(());
    }
    let reason = match family {
        Family::Triangular => format!(
            "exhaustive triangular scans cover {MIN_N}..={max}; there are 2^(n(n-1)/2) states (2^28 at n = 8)"
        ),
        Family::W => format!(
            "exhaustive W scans cover {MIN_N}..={max}; there are 2^(n(n-1)/2) lower-triangle choices"
        ),
        Family::General => format!(
            "exhaustive general scans cover {MIN_N}..={max} (2^(n^2) states, 2^25 at n = 5); use hill climbing beyond that"
        ),
    };
    Err(Error::UnsupportedDimension { n, reason })
}

/// Strictly-upper cells (r, c) with their bit position in the packed word,
/// in row-major cell order.
fn upper_cells(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|r| (r + 1..n).map(move |c| (r, c)))
        .collect()
}

struct TriangularKernel {
    n: usize,
    /// For each column, the (row, bit) pairs of cells above the diagonal.
    columns: Vec<Vec<(usize, u32)>>,
}

impl TriangularKernel {
    fn new(n: usize) -> Self {
        let mut columns = vec![Vec::new(); n];
        for (bit, (r, c)) in upper_cells(n).into_iter().enumerate() {
            columns[c].push((r, bit as u32));
        }
        TriangularKernel { n, columns }
    }

    /// `e^T A^{-1}` into `w`; entries are bounded by `F_{n-1}`.
    #[inline]
    fn row_sums(&self, word: u64, w: &mut [i64; TRIANGULAR_MAX_N]) {
        for c in 0..self.n {
            let mut acc = 1i64;
            for &(r, bit) in &self.columns[c] {
                if word >> bit & 1 == 1 {
                    acc -= w[r];
                }
            }
            w[c] = acc;
        }
    }

    fn rows(&self, word: u64) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (bit, (r, c)) in upper_cells(n).into_iter().enumerate() {
            rows[r][c] = (word >> bit & 1) as i64;
        }
        rows
    }
}

fn scan_triangular(n: usize, range: Range<u64>) -> SumDistribution {
    let k = TriangularKernel::new(n);
    let mut dist = SumDistribution::new(Family::Triangular, n);
    let mut w = [0i64; TRIANGULAR_MAX_N];
    for word in range {
        k.row_sums(word, &mut w);
        let s: i64 = w[..n].iter().sum();
        dist.record(ExactSum::from_integer(s), word, || k.rows(word));
    }
    dist
}

/// `W = A^T + J` where the packed word is the upper pattern of `A`, so the
/// lower cell (c, r) of `W` is `1 + bit(r, c)`.
fn w_rows(n: usize, word: u64) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (bit, (r, c)) in upper_cells(n).into_iter().enumerate() {
        rows[c][r] = 1 + (word >> bit & 1) as i64;
    }
    rows
}

fn scan_w(n: usize, range: Range<u64>) -> SumDistribution {
    let cells = upper_cells(n);
    let mut dist = SumDistribution::new(Family::W, n);
    let mut buf = [0i64; W_MAX_N * W_MAX_N];
    for word in range {
        let a = &mut buf[..n * n];
        for r in 0..n {
            for c in 0..n {
                a[r * n + c] = if r == c { 2 } else { 1 };
            }
        }
        for (bit, &(r, c)) in cells.iter().enumerate() {
            a[c * n + r] += (word >> bit & 1) as i64;
        }
        let det = bareiss_in_place(a, n);
        dist.record(ExactSum::from_integer(det), word, || w_rows(n, word));
    }
    dist
}

fn general_rows(n: usize, word: u64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|r| (0..n).map(|c| (word >> (r * n + c) & 1) as i64).collect())
        .collect()
}

fn scan_general(n: usize, range: Range<u64>) -> SumDistribution {
    let mut dist = SumDistribution::new(Family::General, n);
    let nn = n * n;
    let mut a = [0i64; GENERAL_MAX_N * GENERAL_MAX_N];
    let mut b = [0i64; GENERAL_MAX_N * GENERAL_MAX_N];
    for word in range {
        for i in 0..nn {
            let v = (word >> i & 1) as i64;
            a[i] = v;
            b[i] = v + 1;
        }
        let det = bareiss_in_place(&mut a[..nn], n);
        if det == 0 {
            dist.record_singular();
            continue;
        }
        let det_j = bareiss_in_place(&mut b[..nn], n);
        // S(A^{-1}) = (det(A + J) - det(A)) / det(A)
        let sum = ExactSum::new(det_j - det, det);
        dist.record(sum, word, || general_rows(n, word));
    }
    dist
}

/// Scans packed indices `range` of one family, single-threaded.
pub fn enumerate_range(family: Family, n: usize, range: Range<u64>) -> Result<SumDistribution> {
    check_size(family, n)?;
    let end = range.end.min(state_count(family, n));
    let range = range.start.min(end)..end;
    Ok(match family {
        Family::Triangular => scan_triangular(n, range),
        Family::W => scan_w(n, range),
        Family::General => scan_general(n, range),
    })
}

/// Full scan of a family, split into contiguous chunks across `jobs`
/// worker threads (all cores when `None`).
pub fn enumerate(family: Family, n: usize, jobs: Option<usize>) -> Result<SumDistribution> {
    check_size(family, n)?;
    let total = state_count(family, n);
    let chunks = total.div_ceil(CHUNK);
    Ok(with_jobs(jobs, || {
        (0..chunks)
            .into_par_iter()
            .map(|i| {
                enumerate_range(family, n, i * CHUNK..((i + 1) * CHUNK).min(total))
                    .expect("size checked")
            })
            .reduce(|| SumDistribution::new(family, n), SumDistribution::merge)
    }))
}

pub fn enumerate_triangular(n: usize) -> Result<SumDistribution> {
    enumerate(Family::Triangular, n, None)
}

pub fn enumerate_general(n: usize) -> Result<SumDistribution> {
    enumerate(Family::General, n, None)
}

pub fn enumerate_w_determinants(n: usize) -> Result<SumDistribution> {
    enumerate(Family::W, n, None)
}

/// Coordinate-wise maximum of `|e^T A^{-1}|` over all of `A_n`.
pub fn max_abs_row_sums(n: usize, jobs: Option<usize>) -> Result<Vec<i64>> {
    if !(1..=TRIANGULAR_MAX_N).contains(&n) {
        return Err(Error::UnsupportedDimension {
            n,
            reason: format!("row-sum scans cover 1..={TRIANGULAR_MAX_N}"),
        });
    }
    let total = state_count(Family::Triangular, n);
    let chunks = total.div_ceil(CHUNK);
    let merge = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect();
    Ok(with_jobs(jobs, || {
        (0..chunks)
            .into_par_iter()
            .map(|i| {
                let k = TriangularKernel::new(n);
                let mut best = vec![0i64; n];
                let mut w = [0i64; TRIANGULAR_MAX_N];
                for word in i * CHUNK..((i + 1) * CHUNK).min(total) {
                    k.row_sums(word, &mut w);
                    for (b, v) in best.iter_mut().zip(&w[..n]) {
                        *b = (*b).max(v.abs());
                    }
                }
                best
            })
            .reduce(|| vec![0i64; n], merge)
    }))
}
