use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::{check_range, EnumerationLimits, MaximalError};
use crate::partitions;
use crate::realizability::is_c_graphical;
use crate::registry::{Named, Registry};
use crate::sequence::DegreeSequence;

/// Produces `Δ(T^d(n))`, the degree sequences of connected `n`-vertex
/// graphs with `n - 1 + d` edges.
pub trait SequenceOracle: Named + Send + Sync {
    fn enumerate(&self, n: usize, d: i64) -> Result<BTreeSet<DegreeSequence>, MaximalError>;

    /// Whether the result was confirmed by two independent routes.
    fn cross_checked(&self) -> bool {
        false
    }
}

/// Walks every labeled graph with the right edge count.
pub struct GraphsOracle {
    pub max_n: usize,
}

/// Hard ceiling from the packed representation below.
const GRAPH_ORACLE_CEILING: usize = 11;

impl Named for GraphsOracle {
    fn name(&self) -> &'static str {
        "graphs"
    }
}

impl SequenceOracle for GraphsOracle {
    fn enumerate(&self, n: usize, d: i64) -> Result<BTreeSet<DegreeSequence>, MaximalError> {
        let cap = self.max_n.min(GRAPH_ORACLE_CEILING);
        check_range(n, d, cap, self.name())?;
        Ok(connected_sequences_by_graphs(n, n - 1 + d as usize))
    }
}

fn connected_sequences_by_graphs(n: usize, m: usize) -> BTreeSet<DegreeSequence> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let e = pairs.len();
    let mut seen: HashSet<u64> = HashSet::new();
    if m > e {
        return BTreeSet::new();
    }
    let full: u64 = if e == 64 { u64::MAX } else { (1u64 << e) - 1 };
    let mut mask: u64 = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let all_vertices: u16 = ((1u32 << n) - 1) as u16;
    loop {
        let mut adj = [0u16; GRAPH_ORACLE_CEILING];
        let mut deg = [0u8; GRAPH_ORACLE_CEILING];
        let mut bits = mask;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pairs[b];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut reach: u16 = 1;
        loop {
            let mut next = reach;
            let mut r = reach;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                next |= adj[v];
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach == all_vertices {
            let d = &mut deg[..n];
            d.sort_unstable_by(|a, b| b.cmp(a));
            let key = d.iter().fold(0u64, |acc, &x| (acc << 4) | x as u64);
            seen.insert(key);
        }
        if mask == 0 {
            break;
        }
        // Gosper's hack: next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        let next = (((r ^ mask) >> 2) / c) | r;
        if next > full || r == 0 {
            break;
        }
        mask = next;
    }
    seen.into_iter()
        .map(|key| {
            let v = (0..n).rev().map(|i| ((key >> (4 * i)) & 0xF) as usize).collect();
            DegreeSequence::from_sorted(v).expect("packed in descending order")
        })
        .collect()
}

/// Filters positive partitions of the degree sum through the operational
/// c-graphicality test (Erdős–Gallai on positive sequences with sum at
/// least `2(n-1)`).
pub struct PartitionsOracle {
    pub max_n: usize,
}

impl Named for PartitionsOracle {
    fn name(&self) -> &'static str {
        "partitions"
    }
}

impl SequenceOracle for PartitionsOracle {
    fn enumerate(&self, n: usize, d: i64) -> Result<BTreeSet<DegreeSequence>, MaximalError> {
        check_range(n, d, self.max_n, self.name())?;
        let sum = 2 * (n - 1) + 2 * d as usize;
        Ok(partitions::with_sum(n, sum, 1, n - 1)
            .into_iter()
            .filter(is_c_graphical)
            .collect())
    }
}

/// Runs both oracles and fails on any disagreement.
pub struct BothOracle {
    pub graphs: GraphsOracle,
    pub partitions: PartitionsOracle,
}

impl Named for BothOracle {
    fn name(&self) -> &'static str {
        "both"
    }
}

impl SequenceOracle for BothOracle {
    fn enumerate(&self, n: usize, d: i64) -> Result<BTreeSet<DegreeSequence>, MaximalError> {
        let by_graphs = self.graphs.enumerate(n, d)?;
        let by_partitions = self.partitions.enumerate(n, d)?;
        if by_graphs != by_partitions {
            return Err(MaximalError::OracleMismatch {
                n,
                d,
                only_graphs: by_graphs.difference(&by_partitions).cloned().collect(),
                only_partitions: by_partitions.difference(&by_graphs).cloned().collect(),
            });
        }
        Ok(by_graphs)
    }

    fn cross_checked(&self) -> bool {
        true
    }
}

pub fn oracle_registry(limits: EnumerationLimits) -> Registry<dyn SequenceOracle> {
    let mut reg: Registry<dyn SequenceOracle> = Registry::new("oracle");
    reg.register(Arc::new(GraphsOracle { max_n: limits.max_n_graphs }))
        .register(Arc::new(PartitionsOracle {
            max_n: limits.max_n_partitions,
        }))
        .register(Arc::new(BothOracle {
            graphs: GraphsOracle { max_n: limits.max_n_graphs },
            partitions: PartitionsOracle {
                max_n: limits.max_n_partitions,
            },
        }));
    reg
}
