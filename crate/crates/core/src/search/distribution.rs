use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ExactSum;

/// Which matrix family a scan covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `A_n`; the recorded value is `S(A^{-1})`.
    Triangular,
    /// All invertible (0,1) matrices; the recorded value is `S(A^{-1})`.
    General,
    /// `W_n`; the recorded value is `det W`.
    W,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Triangular => "triangular",
            Family::General => "general",
            Family::W => "w",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(Family::Triangular),
            "general" => Ok(Family::General),
            "w" => Ok(Family::W),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// First matrix (lowest packed index) that produced a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index: u64,
    pub rows: Vec<Vec<i64>>,
}

/// Result of a scan: exact per-value counts plus one witness per value.
///
/// Merging is a pure fold (counts add, the lower-index witness wins), so
/// any split of the index range merges to the same distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDistribution {
    pub n: usize,
    pub family: Family,
    counts: BTreeMap<ExactSum, u64>,
    witnesses: BTreeMap<ExactSum, Witness>,
    singular: u64,
}

impl SumDistribution {
    pub fn new(family: Family, n: usize) -> Self {
        SumDistribution {
            n,
            family,
            counts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            singular: 0,
        }
    }

    pub fn record(&mut self, value: ExactSum, index: u64, rows: impl FnOnce() -> Vec<Vec<i64>>) {
        *self.counts.entry(value).or_insert(0) += 1;
        match self.witnesses.get(&value) {
            Some(w) if w.index <= index => {}
            _ => {
                self.witnesses.insert(
                    value,
                    Witness {
                        index,
                        rows: rows(),
                    },
                );
            }
        }
    }

    pub fn record_singular(&mut self) {
        self.singular += 1;
    }

    pub fn merge(mut self, other: SumDistribution) -> Self {
        assert_eq!(
            (self.family, self.n),
            (other.family, other.n),
            "merging unrelated scans"
        );
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        for (k, w) in other.witnesses {
            match self.witnesses.get(&k) {
                Some(mine) if mine.index <= w.index => {}
                _ => {
                    self.witnesses.insert(k, w);
                }
            }
        }
        self.singular += other.singular;
        self
    }

    pub fn min(&self) -> Option<ExactSum> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<ExactSum> {
        self.counts.keys().next_back().copied()
    }

    /// Sorted achieved values; exactly the key set of [`Self::counts`].
    pub fn achieved(&self) -> Vec<ExactSum> {
        self.counts.keys().copied().collect()
    }

    pub fn counts(&self) -> &BTreeMap<ExactSum, u64> {
        &self.counts
    }

    pub fn witnesses(&self) -> &BTreeMap<ExactSum, Witness> {
        &self.witnesses
    }

    /// Matrices that contributed a value.
    pub fn recorded(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Matrices skipped as singular (general family only).
    pub fn singular(&self) -> u64 {
        self.singular
    }

    /// Whether the achieved set is every integer in `lo..=hi`.
    pub fn is_integer_interval(&self, lo: i64, hi: i64) -> bool {
        let expected: Vec<ExactSum> = (lo..=hi).map(ExactSum::from_integer).collect();
        self.achieved() == expected
    }

    /// `{family, n, min, max, achieved, counts, witnesses}` plus scan totals.
    /// Integral values are JSON numbers, other rationals `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let counts: Map<String, Value> = self
            .counts
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        let witnesses: Map<String, Value> = self
            .witnesses
            .iter()
            .map(|(k, w)| (k.to_string(), json!(w.rows)))
            .collect();
        json!({
            "family": self.family.name(),
            "n": self.n,
            "min": self.min().map(exact_to_json),
            "max": self.max().map(exact_to_json),
            "achieved": self.achieved().into_iter().map(exact_to_json).collect::<Vec<_>>(),
            "counts": counts,
            "witnesses": witnesses,
            "recorded": self.recorded(),
            "singular": self.singular,
        })
    }
}

pub fn exact_to_json(v: ExactSum) -> Value {
    if v.is_integer() {
        json!(v.to_integer())
    } else {
        json!(v.to_string())
    }
}
