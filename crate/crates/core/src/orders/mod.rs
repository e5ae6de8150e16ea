//! Majorization orders on degree sequences.
//!
//! Two partial orders are provided. The generalized order compares raw
//! prefix sums and does not require equal totals; the Lorenz order compares
//! prefix sums normalized by the total. On sequences with equal sums they
//! coincide. All comparisons are exact integer arithmetic.

mod convex;
mod lorenz;
mod transfer;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::registry::{Named, Registry};
use crate::sequence::DegreeSequence;

pub use convex::{convex_sum, min_tail_sum, ConvexFn};
pub use lorenz::{lorenz_curve, nonnormalized_lorenz_points, LorenzCurve, LorenzPoint};
pub use transfer::{apply_basic_transfer, decompose_into_basic_transfers, BasicTransfer, TransferChain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence sums to zero")]
    ZeroSum,
    #[error("sum mismatch: {left} vs {right}")]
    SumMismatch { left: usize, right: usize },
    #[error("{x} is not majorized by {y}")]
    NotMajorized { x: DegreeSequence, y: DegreeSequence },
    #[error("transfer {transfer} would break the non-increasing order of {x}")]
    OrderViolated { x: DegreeSequence, transfer: BasicTransfer },
    #[error("transfer {transfer} takes a unit from a zero entry")]
    Underflow { transfer: BasicTransfer },
    #[error("transfer {transfer} is not valid for a sequence of length {len}")]
    InvalidTransfer { transfer: BasicTransfer, len: usize },
    #[error("index {k} outside 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("unknown convex function {0:?}")]
    UnknownFunction(String),
}

fn same_length(x: &DegreeSequence, y: &DegreeSequence) -> Result<(), OrderError> {
    if x.len() == y.len() {
        Ok(())
    } else {
        Err(OrderError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        })
    }
}

/// `x ⪯ y` in the generalized order: every prefix sum of `x` is at most
/// the matching prefix sum of `y`.
pub fn majorizes_generalized(x: &DegreeSequence, y: &DegreeSequence) -> Result<bool, OrderError> {
    same_length(x, y)?;
    Ok(x.prefix_sums()
        .iter()
        .zip(y.prefix_sums())
        .all(|(&a, b)| a <= b))
}

/// `x ⪯_L y` in the Lorenz order: normalized prefix sums of `x` are at most
/// those of `y` at every abscissa `k/N`.
pub fn majorizes_lorenz(x: &DegreeSequence, y: &DegreeSequence) -> Result<bool, OrderError> {
    same_length(x, y)?;
    let (sx, sy) = (x.sum() as u128, y.sum() as u128);
    if sx == 0 || sy == 0 {
        return Err(OrderError::ZeroSum);
    }
    Ok(x.prefix_sums()
        .iter()
        .zip(y.prefix_sums())
        .all(|(&a, b)| a as u128 * sy <= b as u128 * sx))
}

/// A partial order on same-length sequences.
pub trait DominanceOrder: Named + Send + Sync {
    /// Whether `x` is dominated by (lies below or equals) `y`.
    fn dominated_by(&self, x: &DegreeSequence, y: &DegreeSequence) -> Result<bool, OrderError>;
}

pub struct GeneralizedOrder;

impl Named for GeneralizedOrder {
    fn name(&self) -> &'static str {
        "generalized"
    }
}

impl DominanceOrder for GeneralizedOrder {
    fn dominated_by(&self, x: &DegreeSequence, y: &DegreeSequence) -> Result<bool, OrderError> {
        majorizes_generalized(x, y)
    }
}

pub struct LorenzOrder;

impl Named for LorenzOrder {
    fn name(&self) -> &'static str {
        "lorenz"
    }
}

impl DominanceOrder for LorenzOrder {
    fn dominated_by(&self, x: &DegreeSequence, y: &DegreeSequence) -> Result<bool, OrderError> {
        majorizes_lorenz(x, y)
    }
}

pub fn order_registry() -> Registry<dyn DominanceOrder> {
    let mut reg: Registry<dyn DominanceOrder> = Registry::new("order");
    reg.register(Arc::new(GeneralizedOrder)).register(Arc::new(LorenzOrder));
    reg
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Comparison::Less => "Less",
            Comparison::Greater => "Greater",
            Comparison::Equal => "Equal",
            Comparison::Incomparable => "Incomparable",
        };
        f.write_str(s)
    }
}

pub fn compare(
    x: &DegreeSequence,
    y: &DegreeSequence,
    order: &dyn DominanceOrder,
) -> Result<Comparison, OrderError> {
    same_length(x, y)?;
    if x == y {
        return Ok(Comparison::Equal);
    }
    Ok(match (order.dominated_by(x, y)?, order.dominated_by(y, x)?) {
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        // Distinct sequences dominating each other only happens in the
        // Lorenz order for proportional sequences such as (2,2) and (1,1).
        (true, true) => Comparison::Equal,
        (false, false) => Comparison::Incomparable,
    })
}

/// `x ≺ y` in the generalized order: dominated and distinct.
pub fn strictly_below(x: &DegreeSequence, y: &DegreeSequence) -> Result<bool, OrderError> {
    Ok(x != y && majorizes_generalized(x, y)?)
}
