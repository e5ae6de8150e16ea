//! Maximal degree sequences of connected graphs with a fixed edge count.
//!
//! `T^d(n)` is the set of connected `n`-vertex graphs with `n - 1 + d`
//! edges. Its image under the degree-sequence map is a finite poset under
//! the generalized majorization order; this module enumerates that image,
//! extracts its maximal elements and checks the known descriptions of them.

mod oracle;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{delta_s_d, delta_s_prime_d, max_excess, ConstructionError};
use crate::orders::{majorizes_generalized, strictly_below};
use crate::sequence::DegreeSequence;

pub use oracle::{oracle_registry, BothOracle, GraphsOracle, PartitionsOracle, SequenceOracle};

/// Largest vertex counts each oracle accepts by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_n_graphs: usize,
    pub max_n_partitions: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_n_graphs: 8,
            max_n_partitions: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaximalError {
    #[error("d = {d} outside 0..={max} for n = {n}")]
    OutOfRange { n: usize, d: i64, max: i64 },
    #[error("n = {n} outside 2..={cap} for the {oracle} oracle")]
    TooLarge { n: usize, cap: usize, oracle: &'static str },
    #[error("oracles disagree at n = {n}, d = {d}: graphs only {only_graphs:?}, partitions only {only_partitions:?}")]
    OracleMismatch {
        n: usize,
        d: i64,
        only_graphs: Vec<DegreeSequence>,
        only_partitions: Vec<DegreeSequence>,
    },
    #[error("degree sum of {0} is odd")]
    BadSum(DegreeSequence),
    #[error("maximal set at d = {d} is {computed:?}, expected {expected:?} ({relation})")]
    Theorem4Mismatch {
        d: i64,
        computed: Vec<DegreeSequence>,
        expected: Vec<DegreeSequence>,
        relation: Relation,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn check_range(n: usize, d: i64, cap: usize, oracle: &'static str) -> Result<(), MaximalError> {
    if n < 2 || n > cap {
        return Err(MaximalError::TooLarge { n, cap, oracle });
    }
    let max = max_excess(n);
    if d < 0 || d > max {
        return Err(MaximalError::OutOfRange { n, d, max });
    }
    Ok(())
}

/// Elements not strictly dominated by any other, lexicographically descending.
pub fn maximal_of<'a, I>(set: I) -> Vec<DegreeSequence>
where
    I: IntoIterator<Item = &'a DegreeSequence>,
{
    let all: Vec<&DegreeSequence> = set.into_iter().collect();
    let mut out: Vec<DegreeSequence> = all
        .iter()
        .filter(|x| {
            !all.iter()
                .any(|y| strictly_below(x, y).expect("same length"))
        })
        .map(|x| (*x).clone())
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalSetReport {
    pub n: usize,
    pub d: i64,
    pub oracle: String,
    /// `Δ(T^d(n))`, lexicographically descending.
    pub all_sequences: Vec<DegreeSequence>,
    /// `M(T^d(n))`, lexicographically descending.
    pub maximal: Vec<DegreeSequence>,
    /// `Some(true)` when graph and partition enumeration were compared and
    /// agreed; `None` when a single oracle ran.
    pub oracle_agreement: Option<bool>,
}

impl MaximalSetReport {
    pub fn to_text(&self, full: bool) -> String {
        let mut out = String::new();
        let agreement = match self.oracle_agreement {
            Some(true) => "agree",
            Some(false) => "disagree",
            None => "unchecked",
        };
        writeln!(
            out,
            "n={} d={} oracle={} sequences={} maximal={} oracles={agreement}",
            self.n,
            self.d,
            self.oracle,
            self.all_sequences.len(),
            self.maximal.len()
        )
        .unwrap();
        for m in &self.maximal {
            writeln!(out, "{m}").unwrap();
        }
        if full {
            writeln!(out, "# image").unwrap();
            for s in &self.all_sequences {
                writeln!(out, "{s}").unwrap();
            }
        }
        out
    }

    pub fn contains_maximal(&self, x: &DegreeSequence) -> bool {
        self.maximal.contains(x)
    }
}

pub fn enumerate_connected_sequences(
    n: usize,
    d: i64,
    oracle: &dyn SequenceOracle,
) -> Result<BTreeSet<DegreeSequence>, MaximalError> {
    oracle.enumerate(n, d)
}

pub fn maximal_elements(n: usize, d: i64, oracle: &dyn SequenceOracle) -> Result<MaximalSetReport, MaximalError> {
    let image = oracle.enumerate(n, d)?;
    let maximal = maximal_of(&image);
    let mut all_sequences: Vec<DegreeSequence> = image.into_iter().collect();
    all_sequences.reverse();
    Ok(MaximalSetReport {
        n,
        d,
        oracle: oracle.name().to_string(),
        all_sequences,
        maximal,
        oracle_agreement: oracle.cross_checked().then_some(true),
    })
}

/// `x` is c-graphical iff it lies below some maximal element of its slice.
pub fn is_c_graphical_poset(x: &DegreeSequence, oracle: &dyn SequenceOracle) -> Result<bool, MaximalError> {
    let n = x.len();
    if n == 1 {
        return Ok(x.head() == 0);
    }
    let d = x.excess().ok_or_else(|| MaximalError::BadSum(x.clone()))?;
    if d < 0 || d > max_excess(n) || x.tail() == 0 {
        return Ok(false);
    }
    let report = maximal_elements(n, d, oracle)?;
    Ok(report
        .maximal
        .iter()
        .any(|y| majorizes_generalized(x, y).expect("same length")))
}

/// Every maximal element starts with `n - 1`.
pub fn verify_theorem3(n: usize, d: i64, oracle: &dyn SequenceOracle) -> Result<bool, MaximalError> {
    let report = maximal_elements(n, d, oracle)?;
    Ok(report.maximal.iter().all(|m| m.head() == n - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// The maximal set equals the expected set.
    Exact,
    /// The maximal set contains the expected set.
    Superset,
    /// The maximal set strictly contains the expected set.
    StrictSuperset,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Exact => "exact",
            Relation::Superset => "superset",
            Relation::StrictSuperset => "strict superset",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Row {
    pub d: i64,
    pub relation: Relation,
    pub expected: Vec<DegreeSequence>,
    pub computed: Vec<DegreeSequence>,
}

/// Expected `M(T^d(n))` for `d <= 5`: `{Δ(S_d)}` for `d <= 2`,
/// `{Δ(S_d), Δ(S'_d)}` for `d = 3, 4`, and a superset of that pair for
/// `d >= 5`. The superset is strict once `n >= 7`, witnessed by
/// `(n-1, 5, 3, 3, 2, 2, 1, ...)`; at `n = 6` that sequence is `Δ(S_5)`.
pub fn theorem4_expectation(n: usize, d: i64) -> Result<(Relation, Vec<DegreeSequence>), MaximalError> {
    let mut expected = vec![delta_s_d(n, d)?];
    if d >= 3 {
        expected.push(delta_s_prime_d(n, d)?);
    }
    expected.sort_by(|a, b| b.cmp(a));
    expected.dedup();
    let relation = match d {
        ..=4 => Relation::Exact,
        _ if n >= 7 => Relation::StrictSuperset,
        _ => Relation::Superset,
    };
    Ok((relation, expected))
}

/// Checks the maximal sets for `d = 0..=5` at a given `n` (`6 <= n <= 8`).
pub fn verify_theorem4(n: usize, oracle: &dyn SequenceOracle) -> Result<Vec<Theorem4Row>, MaximalError> {
    if !(6..=8).contains(&n) {
        return Err(MaximalError::TooLarge {
            n,
            cap: 8,
            oracle: "theorem4",
        });
    }
    (0..=5)
        .map(|d| {
            let (relation, expected) = theorem4_expectation(n, d)?;
            let computed = maximal_elements(n, d, oracle)?.maximal;
            let holds = match relation {
                Relation::Exact => computed == expected,
                Relation::Superset => expected.iter().all(|e| computed.contains(e)),
                Relation::StrictSuperset => {
                    computed.len() > expected.len() && expected.iter().all(|e| computed.contains(e))
                }
            };
            if holds {
                Ok(Theorem4Row {
                    d,
                    relation,
                    expected,
                    computed,
                })
            } else {
                Err(MaximalError::Theorem4Mismatch {
                    d,
                    computed,
                    expected,
                    relation,
                })
            }
        })
        .collect()
}
