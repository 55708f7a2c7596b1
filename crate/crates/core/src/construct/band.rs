use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibonacci::FibSequence;
use crate::linalg::{Matrix, Triangular01};

/// Partition of the strictly-upper cells into bands `S_0, ..., S_{n-l-1}`.
///
/// The top band is the first two rows of the last `l` columns. Each lower
/// band `S_i` (`i >= 1`) takes the unassigned cells immediately left of, or
/// immediately below, a cell of `S_{i+1}`. Whatever is left is `S_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandPartition {
    n: usize,
    l: usize,
    /// Band index per cell, row-major (0-based).
    band: Vec<Option<usize>>,
}

impl BandPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tail_width(&self) -> usize {
        self.l
    }

    pub fn band_count(&self) -> usize {
        self.n - self.l
    }

    /// Band of the strictly-upper cell (r, c), 0-based.
    pub fn band_of(&self, r: usize, c: usize) -> Option<usize> {
        if r < c && c < self.n {
            self.band[r * self.n + c]
        } else {
            None
        }
    }

    /// Cells of band `i` in row-major order, 0-based.
    pub fn cells(&self, i: usize) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|r| (r + 1..self.n).map(move |c| (r, c)))
            .filter(|&(r, c)| self.band_of(r, c) == Some(i))
            .collect()
    }
}

pub fn band_partition(n: usize, l: usize) -> Result<BandPartition> {
    if !(l == 2 || l == 3) {
        return Err(Error::InvalidArgument(format!(
            "tail width l must be 2 or 3, got {l}"
        )));
    }
    if n < 5 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the banded construction needs n >= 5; use small_extremal for n = 3, 4".into(),
        });
    }
    let mut band = vec![None; n * n];
    let top = n - l - 1;
    let mut frontier: BTreeSet<(usize, usize)> = BTreeSet::new();
    for r in 0..2 {
        for c in n - l..n {
            band[r * n + c] = Some(top);
            frontier.insert((r, c));
        }
    }
    for i in (1..top).rev() {
        let mut next = BTreeSet::new();
        for &(r, c) in &frontier {
            // left neighbour (r, c - 1), lower neighbour (r + 1, c)
            let candidates = [(r, c.wrapping_sub(1)), (r + 1, c)];
            for (rr, cc) in candidates {
                if rr < cc && cc < n && band[rr * n + cc].is_none() {
                    band[rr * n + cc] = Some(i);
                    next.insert((rr, cc));
                }
            }
        }
        frontier = next;
    }
    for r in 0..n {
        for c in r + 1..n {
            band[r * n + c].get_or_insert(0);
        }
    }
    Ok(BandPartition { n, l, band })
}

/// Matrix with entry `i mod 2` on band `S_i`, together with the inverse
/// predicted from the band structure: unit diagonal, 0 on `S_0`, and
/// `(-1)^i F_i` on `S_i` for `i >= 1`.
pub fn extremal_pattern_matrix(n: usize, l: usize) -> Result<(Triangular01, Matrix<BigInt>)> {
    let bands = band_partition(n, l)?;
    let a = Triangular01::from_fn(n, |r, c| bands.band_of(r, c).is_some_and(|i| i % 2 == 1));
    let mut fibs = FibSequence::<BigInt>::up_to(n);
    let predicted = Matrix::from_fn(n, |r, c| match bands.band_of(r, c) {
        _ if r == c => BigInt::one(),
        None | Some(0) => BigInt::zero(),
        Some(i) => {
            let f = fibs.get(i).expect("band index >= 1").clone();
            if i % 2 == 0 {
                f
            } else {
                -f
            }
        }
    });
    Ok((a, predicted))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalKind {
    Maximizing,
    Minimizing,
}

/// Extremal matrices for `n = 3, 4`, where the banded pattern does not apply.
pub fn small_extremal(n: usize, kind: ExtremalKind) -> Result<Triangular01> {
    let rows: &[&[i64]] =
        match (n, kind) {
            (3 | 4, ExtremalKind::Maximizing) => return Ok(Triangular01::identity(n)),
            (3, ExtremalKind::Minimizing) => &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]],
            (4, ExtremalKind::Minimizing) => {
                &[&[1, 0, 1, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]]
            }
            _ => return Err(Error::UnsupportedDimension {
                n,
                reason:
                    "small extremal matrices cover n = 3, 4; use extremal_pattern_matrix for n >= 5"
                        .into(),
            }),
        };
    Triangular01::from_matrix(&Matrix::<BigInt>::from_i64_rows(rows)?)
}
