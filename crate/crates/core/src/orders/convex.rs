use std::fmt;
use std::str::FromStr;

use super::OrderError;
use crate::sequence::DegreeSequence;

/// `∑_{j>k} min(x_j, k)` with `k` a 1-based rank; zero when `k = N`.
pub fn min_tail_sum(x: &DegreeSequence, k: usize) -> Result<usize, OrderError> {
    if k == 0 || k > x.len() {
        return Err(OrderError::IndexOutOfRange { k, n: x.len() });
    }
    Ok(x.values()[k..].iter().map(|&v| v.min(k)).sum())
}

/// The built-in sample of convex test functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexFn {
    Square,
    /// `t³`, convex on the non-negative integers.
    Cube,
    /// `max(t - c, 0)`.
    Hinge(i64),
}

impl ConvexFn {
    pub fn eval(self, t: usize) -> i128 {
        let t = t as i128;
        match self {
            ConvexFn::Square => t * t,
            ConvexFn::Cube => t * t * t,
            ConvexFn::Hinge(c) => (t - c as i128).max(0),
        }
    }
}

impl fmt::Display for ConvexFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexFn::Square => f.write_str("square"),
            ConvexFn::Cube => f.write_str("cube"),
            ConvexFn::Hinge(c) => write!(f, "hinge({c})"),
        }
    }
}

impl FromStr for ConvexFn {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "square" => return Ok(ConvexFn::Square),
            "cube" => return Ok(ConvexFn::Cube),
            _ => {}
        }
        s.strip_prefix("hinge(")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|c| c.trim().parse().ok())
            .map(ConvexFn::Hinge)
            .ok_or_else(|| OrderError::UnknownFunction(s.to_string()))
    }
}

pub fn convex_sum(x: &DegreeSequence, phi: ConvexFn) -> i128 {
    x.values().iter().map(|&v| phi.eval(v)).sum()
}
