//! Extremal connected graphs grown from the star.
//!
//! Both families start from the `n`-star (center 0, leaves `1..n`) and add
//! `d` edges among the leaves, one per step:
//!
//! * `S_d` adds leaf pairs in lexicographic order: leaf 1 is joined to every
//!   other leaf, then leaf 2 to every later leaf, and so on. Each such
//!   cycle raises one more vertex to full degree `n - 1`.
//! * `S'_d` adds leaf pairs in colexicographic order, growing a clique on
//!   leaves `1, 2, 3, ...` one vertex at a time.
//!
//! For `d < 0` the star is incomplete: a center joined to `n - 1 + d`
//! leaves, the remaining vertices isolated.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::registry::{Named, Registry};
use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("d = {d} outside the legal range {min}..={max} for n = {n}")]
    OutOfRange { n: usize, d: i64, min: i64, max: i64 },
    #[error("n = {0} too small; need at least 2 vertices")]
    TooFewVertices(usize),
}

/// Largest number of edges that can be added to the `n`-star.
pub fn max_excess(n: usize) -> i64 {
    let n = n as i64;
    (n - 1) * (n - 2) / 2
}

fn check(n: usize, d: i64, allow_negative: bool) -> Result<(), ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::TooFewVertices(n));
    }
    let min = if allow_negative { -(n as i64 - 1) } else { 0 };
    let max = if allow_negative { -1 } else { max_excess(n) };
    if d < min || d > max {
        return Err(ConstructionError::OutOfRange { n, d, min, max });
    }
    Ok(())
}

/// Position of step `d` in the `S_d` construction.
///
/// `i_of_d` counts the vertices of full degree `n - 1`; `j_of_d` counts the
/// edges added since the last time `i_of_d` increased.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdDescriptor {
    pub n: usize,
    pub d: i64,
    pub i_of_d: usize,
    pub j_of_d: usize,
}

impl SdDescriptor {
    /// `(n-1)` × i, then `i + j`, then `(i+1)` × j, then `i` × `(n - i - j - 1)`.
    pub fn sequence(&self) -> DegreeSequence {
        let (n, i, j) = (self.n, self.i_of_d, self.j_of_d);
        let mut v = vec![n - 1; i];
        v.push(i + j);
        v.extend(std::iter::repeat_n(i + 1, j));
        v.extend(std::iter::repeat_n(i, n - i - j - 1));
        DegreeSequence::from_unsorted(v).expect("n >= 2")
    }
}

/// Solves `d = ∑_{k=2}^{i} (n - k) + j` with `0 <= j <= n - i - 2`; the
/// complete graph maps to `i = n - 1, j = 0`.
pub fn split_d(n: usize, d: i64) -> Result<SdDescriptor, ConstructionError> {
    check(n, d, false)?;
    let desc = |i, j| SdDescriptor { n, d, i_of_d: i, j_of_d: j };
    if d == max_excess(n) {
        return Ok(desc(n - 1, 0));
    }
    let mut base = 0i64;
    for i in 1..n - 1 {
        let cycle = (n - i - 1) as i64;
        if d < base + cycle {
            return Ok(desc(i, (d - base) as usize));
        }
        base += cycle;
    }
    unreachable!("d below the maximum always falls in some cycle")
}

pub fn delta_s_d(n: usize, d: i64) -> Result<DegreeSequence, ConstructionError> {
    Ok(split_d(n, d)?.sequence())
}

/// Leaf pairs `(a, b)`, `1 <= a < b < n`, in lexicographic order.
fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

/// Leaf pairs in colexicographic order: by `b`, then `a`.
fn colex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..n).flat_map(|b| (1..b).map(move |a| (a, b)))
}

fn star_plus(n: usize, extra: impl Iterator<Item = (usize, usize)>) -> SimpleGraph {
    SimpleGraph::from_edges(n, (1..n).map(|v| (0, v)).chain(extra)).expect("distinct leaf pairs")
}

pub fn build_s_d(n: usize, d: i64) -> Result<SimpleGraph, ConstructionError> {
    check(n, d, false)?;
    Ok(star_plus(n, lex_pairs(n).take(d as usize)))
}

/// Star plus a clique on leaves `1..=m` plus leaf `m + 1` joined to leaves
/// `1..=r`, where `d = m(m-1)/2 + r` and `r < m`.
pub fn delta_s_prime_d(n: usize, d: i64) -> Result<DegreeSequence, ConstructionError> {
    check(n, d, false)?;
    let d = d as usize;
    let mut m = 1;
    while m < n - 1 && (m + 1) * m / 2 <= d {
        m += 1;
    }
    let r = d - m * (m - 1) / 2;
    let mut v = vec![n - 1];
    v.extend(std::iter::repeat_n(m + 1, r));
    v.extend(std::iter::repeat_n(m, m - r));
    let rest = n - 1 - m;
    if rest > 0 {
        v.push(1 + r);
        v.extend(std::iter::repeat_n(1, rest - 1));
    }
    Ok(DegreeSequence::from_unsorted(v).expect("n >= 2"))
}

pub fn build_s_prime_d(n: usize, d: i64) -> Result<SimpleGraph, ConstructionError> {
    check(n, d, false)?;
    Ok(star_plus(n, colex_pairs(n).take(d as usize)))
}

/// Center 0 joined to `a = n - 1 + d` leaves, the rest isolated.
pub fn incomplete_star(n: usize, d: i64) -> Result<(DegreeSequence, SimpleGraph), ConstructionError> {
    check(n, d, true)?;
    let a = (n as i64 - 1 + d) as usize;
    let mut v = vec![a];
    v.extend(std::iter::repeat_n(1, a));
    v.extend(std::iter::repeat_n(0, n - a - 1));
    let g = SimpleGraph::from_edges(n, (1..=a).map(|v| (0, v))).expect("star edges");
    Ok((DegreeSequence::from_unsorted(v).expect("n >= 2"), g))
}

/// A family of graphs indexed by the excess `d` over a tree.
pub trait GraphFamily: Named + Send + Sync {
    fn sequence(&self, n: usize, d: i64) -> Result<DegreeSequence, ConstructionError>;
    fn build(&self, n: usize, d: i64) -> Result<SimpleGraph, ConstructionError>;
}

/// `S_d`, falling back to the incomplete star for negative `d`.
pub struct SdFamily;

impl Named for SdFamily {
    fn name(&self) -> &'static str {
        "s"
    }
}

impl GraphFamily for SdFamily {
    fn sequence(&self, n: usize, d: i64) -> Result<DegreeSequence, ConstructionError> {
        if d < 0 {
            incomplete_star(n, d).map(|(s, _)| s)
        } else {
            delta_s_d(n, d)
        }
    }

    fn build(&self, n: usize, d: i64) -> Result<SimpleGraph, ConstructionError> {
        if d < 0 {
            incomplete_star(n, d).map(|(_, g)| g)
        } else {
            build_s_d(n, d)
        }
    }
}

/// `S'_d`, falling back to the incomplete star for negative `d`.
pub struct SPrimeFamily;

impl Named for SPrimeFamily {
    fn name(&self) -> &'static str {
        "s-prime"
    }
}

impl GraphFamily for SPrimeFamily {
    fn sequence(&self, n: usize, d: i64) -> Result<DegreeSequence, ConstructionError> {
        if d < 0 {
            incomplete_star(n, d).map(|(s, _)| s)
        } else {
            delta_s_prime_d(n, d)
        }
    }

    fn build(&self, n: usize, d: i64) -> Result<SimpleGraph, ConstructionError> {
        if d < 0 {
            incomplete_star(n, d).map(|(_, g)| g)
        } else {
            build_s_prime_d(n, d)
        }
    }
}

pub fn family_registry() -> Registry<dyn GraphFamily> {
    let mut reg: Registry<dyn GraphFamily> = Registry::new("family");
    reg.register(Arc::new(SdFamily)).register(Arc::new(SPrimeFamily));
    reg
}
