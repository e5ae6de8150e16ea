use std::fmt;

use serde::{Deserialize, Serialize};

use super::{majorizes_generalized, OrderError};
use crate::sequence::DegreeSequence;

/// Moves one unit from rank `from` to the higher rank `to`.
///
/// Ranks are 0-based positions in the non-increasing sequence; `Display`
/// prints them 1-based as `(j → i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicTransfer {
    pub from: usize,
    pub to: usize,
}

impl fmt::Display for BasicTransfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} → {})", self.from + 1, self.to + 1)
    }
}

pub fn apply_basic_transfer(x: &DegreeSequence, t: BasicTransfer) -> Result<DegreeSequence, OrderError> {
    let v = x.values();
    if t.to >= t.from || t.from >= v.len() {
        return Err(OrderError::InvalidTransfer { transfer: t, len: v.len() });
    }
    if v[t.from] == 0 {
        return Err(OrderError::Underflow { transfer: t });
    }
    let mut out = v.to_vec();
    out[t.to] += 1;
    out[t.from] -= 1;
    DegreeSequence::from_sorted(out).ok_or_else(|| OrderError::OrderViolated {
        x: x.clone(),
        transfer: t,
    })
}

/// A start sequence and the unit transfers that carry it to its end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferChain {
    pub start: DegreeSequence,
    pub steps: Vec<BasicTransfer>,
}

impl TransferChain {
    /// Every sequence visited, starting with `start`.
    pub fn replay(&self) -> Result<Vec<DegreeSequence>, OrderError> {
        let mut out = vec![self.start.clone()];
        for &t in &self.steps {
            let next = apply_basic_transfer(out.last().expect("non-empty"), t)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<DegreeSequence, OrderError> {
        Ok(self.replay()?.pop().expect("non-empty"))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Unit transfers carrying `x` up to `y`, for equal-sum `x ⪯ y`.
///
/// Each step takes the first rank `i` where the prefix sums differ and the
/// first rank `j > i` where they agree again, then moves one unit `j → i`.
/// Every intermediate sequence stays non-increasing and between `x` and `y`.
pub fn decompose_into_basic_transfers(
    x: &DegreeSequence,
    y: &DegreeSequence,
) -> Result<TransferChain, OrderError> {
    if x.len() != y.len() {
        return Err(OrderError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.sum() != y.sum() {
        return Err(OrderError::SumMismatch {
            left: x.sum(),
            right: y.sum(),
        });
    }
    if !majorizes_generalized(x, y)? {
        return Err(OrderError::NotMajorized {
            x: x.clone(),
            y: y.clone(),
        });
    }

    let target = y.prefix_sums();
    let mut current = x.values().to_vec();
    let mut steps = Vec::new();
    loop {
        let mut prefix = 0;
        let mut gap_start = None;
        let mut step = None;
        for (k, &v) in current.iter().enumerate() {
            prefix += v;
            match gap_start {
                None if prefix != target[k + 1] => gap_start = Some(k),
                Some(i) if prefix == target[k + 1] => {
                    step = Some(BasicTransfer { from: k, to: i });
                    break;
                }
                _ => {}
            }
        }
        let Some(t) = step else { break };
        current[t.to] += 1;
        current[t.from] -= 1;
        steps.push(t);
    }
    Ok(TransferChain {
        start: x.clone(),
        steps,
    })
}
