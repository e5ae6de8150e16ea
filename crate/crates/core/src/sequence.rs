//! Non-increasing integer sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence must have at least one entry")]
    Empty,
    #[error("invalid entry {0:?}: expected a non-negative integer")]
    BadEntry(String),
}

/// A non-empty sequence of non-negative integers stored in non-increasing
/// order. Zero entries are allowed and stand for isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `values` descending.
    pub fn from_unsorted(mut values: Vec<usize>) -> Result<Self, SequenceError> {
        if values.is_empty() {
            return Err(SequenceError::Empty);
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(values))
    }

    /// Accepts only values that are already non-increasing.
    pub fn from_sorted(values: Vec<usize>) -> Option<Self> {
        (!values.is_empty() && values.windows(2).all(|w| w[0] >= w[1])).then_some(DegreeSequence(values))
    }

    /// `a` repeated `n` times.
    pub fn constant(a: usize, n: usize) -> Self {
        assert!(n > 0, "constant sequence needs a positive length");
        DegreeSequence(vec![a; n])
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn head(&self) -> usize {
        self.0[0]
    }

    pub fn tail(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn is_constant(&self) -> bool {
        self.head() == self.tail()
    }

    pub fn is_all_zero(&self) -> bool {
        self.head() == 0
    }

    /// Prefix sums `S_0 = 0, S_1, ..., S_N`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        std::iter::once(0)
            .chain(self.0.iter().scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            }))
            .collect()
    }

    /// `d` for which the sum equals `2(N-1) + 2d`; `None` on odd sums.
    pub fn excess(&self) -> Option<i64> {
        let sum = self.sum() as i64;
        let n = self.len() as i64;
        (sum % 2 == 0).then(|| (sum - 2 * (n - 1)) / 2)
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = SequenceError;

    fn try_from(values: Vec<usize>) -> Result<Self, Self::Error> {
        Self::from_unsorted(values)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(s: DegreeSequence) -> Self {
        s.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A sequence literal after parsing, remembering whether it had to be sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSequence {
    pub sequence: DegreeSequence,
    pub reordered: bool,
}

impl FromStr for ParsedSequence {
    type Err = SequenceError;

    /// Comma-separated non-negative integers, optionally wrapped in quotes
    /// or parentheses, e.g. `5,4,4,3,3,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_matches(|c| c == '"' || c == '\'')
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')');
        if body.trim().is_empty() {
            return Err(SequenceError::Empty);
        }
        let values = body
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>().map_err(|_| SequenceError::BadEntry(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let reordered = values.windows(2).any(|w| w[0] < w[1]);
        Ok(ParsedSequence {
            sequence: DegreeSequence::from_unsorted(values)?,
            reordered,
        })
    }
}

impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<ParsedSequence>().map(|p| p.sequence)
    }
}

/// Shorthand for literals in tests and examples; panics on bad input.
pub fn seq(values: &[usize]) -> DegreeSequence {
    DegreeSequence::from_unsorted(values.to_vec()).expect("non-empty sequence")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_sorts_and_flags() {
        let p: ParsedSequence = "5,4,4,3,3,3".parse().unwrap();
        assert!(!p.reordered);
        assert_eq!(p.sequence.values(), &[5, 4, 4, 3, 3, 3]);

        let p: ParsedSequence = "\"1, 3,2\"".parse().unwrap();
        assert!(p.reordered);
        assert_eq!(p.sequence.to_string(), "3,2,1");

        assert_eq!("".parse::<DegreeSequence>(), Err(SequenceError::Empty));
        assert!(matches!("1,-2".parse::<DegreeSequence>(), Err(SequenceError::BadEntry(_))));
        assert_eq!("(2,1,1)".parse::<DegreeSequence>().unwrap(), seq(&[2, 1, 1]));
    }

    #[test]
    fn basic_accessors() {
        let x = seq(&[1, 4, 3, 3, 3]);
        assert_eq!(x.values(), &[4, 3, 3, 3, 1]);
        assert_eq!(x.sum(), 14);
        assert_eq!(x.prefix_sums(), vec![0, 4, 7, 10, 13, 14]);
        assert_eq!(x.excess(), Some(3));
        assert_eq!(seq(&[2, 1, 1, 1, 1]).excess(), Some(-1));
        assert_eq!(seq(&[3, 1, 1]).excess(), None);
        assert!(DegreeSequence::from_sorted(vec![1, 2]).is_none());
    }

    #[test]
    fn serde_as_array() {
        let x = seq(&[2, 2, 1]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "[2,2,1]");
        assert_eq!(serde_json::from_str::<DegreeSequence>("[1,2,2]").unwrap(), x);
        assert!(serde_json::from_str::<DegreeSequence>("[]").is_err());
    }
}
