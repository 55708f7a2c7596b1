//! Plain-text matrix format.
//!
//! ```text
//! # optional comments
//! 3
//! 1 0 1
//! 0 1 1
//! 0 0 1
//! ```
//!
//! Rational entries are written `p/q`. Blank lines and lines whose first
//! non-blank character is `#` are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::Matrix;

pub fn parse_matrix<T: Scalar>(text: &str) -> Result<Matrix<T>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing dimension line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected dimension, found {header:?}"),
    })?;

    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {n} rows, found {}", rows.len()),
        })?;
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<T>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid entry {tok:?}"),
                })
            })
            .collect::<Result<Vec<T>>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: "trailing content after matrix".into(),
        });
    }
    Matrix::from_rows(rows)
}

pub fn format_matrix<T: Scalar>(m: &Matrix<T>) -> String {
    let mut out = String::new();
    writeln!(out, "{}", m.n()).unwrap();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}
