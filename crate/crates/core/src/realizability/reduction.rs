use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Certificate, Method, RealizeError, Verdict};
use crate::sequence::DegreeSequence;

/// Drops the head `x_1` and subtracts one from the next `x_1` entries.
pub fn hh_reduce(y: &DegreeSequence) -> Result<DegreeSequence, RealizeError> {
    let v = y.values();
    if v.len() < 2 {
        return Err(RealizeError::TooShort);
    }
    let head = v[0];
    if head > v.len() - 1 {
        return Err(RealizeError::HeadTooLarge { head, len: v.len() });
    }
    if head > 0 && v[head] == 0 {
        return Err(RealizeError::Underflow(y.clone()));
    }
    let mut rest = v[1..].to_vec();
    for r in rest.iter_mut().take(head) {
        *r -= 1;
    }
    Ok(DegreeSequence::from_unsorted(rest).expect("length >= 1"))
}

/// Lowers `x_k` by `n` and subtracts one from the `n` largest other entries
/// (leftmost among ties). The length is kept, so vertex `k` may end at 0.
///
/// If `x` is graphical so is the result. The converse holds for `n = x_k`
/// but not in general: `(4,4,3,2,1)` with `k = 1, n = 3` gives the
/// graphical `(3,2,1,1,1)`.
///
/// `k` is a 0-based rank.
pub fn generalized_reduce(x: &DegreeSequence, k: usize, n: usize) -> Result<DegreeSequence, RealizeError> {
    let v = x.values();
    let len = v.len();
    if k >= len {
        return Err(RealizeError::BadRank { rank: k, len });
    }
    let max = v[k].min(len - 1);
    if n == 0 || n > max {
        return Err(RealizeError::BadCount { count: n, max });
    }
    let mut out = v.to_vec();
    out[k] -= n;
    for p in (0..len).filter(|&p| p != k).take(n) {
        if out[p] == 0 {
            return Err(RealizeError::Underflow(x.clone()));
        }
        out[p] -= 1;
    }
    Ok(DegreeSequence::from_unsorted(out).expect("non-empty"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum ReductionRule {
    /// Havel–Hakimi step; the output is one entry shorter.
    Havel,
    /// Generalized step at 0-based rank `k` removing `n` edges.
    Generalized { k: usize, n: usize },
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionRule::Havel => f.write_str("H"),
            ReductionRule::Generalized { k, n } => write!(f, "k={}, n={n}", k + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub before: DegreeSequence,
    pub rule: ReductionRule,
    pub after: DegreeSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "end", rename_all = "kebab-case")]
pub enum TraceEnd {
    AllZero,
    Constant { value: usize, graphical: bool },
    Rejected { at: DegreeSequence, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub start: DegreeSequence,
    pub steps: Vec<ReductionStep>,
    pub end: TraceEnd,
}

impl ReductionTrace {
    /// The visited sequences, start first.
    pub fn chain(&self) -> Vec<&DegreeSequence> {
        std::iter::once(&self.start)
            .chain(self.steps.iter().map(|s| &s.after))
            .collect()
    }

    pub fn last(&self) -> &DegreeSequence {
        self.steps.last().map_or(&self.start, |s| &s.after)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.start)?;
        for s in &self.steps {
            write!(f, " -[{}]-> ({})", s.rule, s.after)?;
        }
        match &self.end {
            TraceEnd::AllZero => write!(f, " : all zero"),
            TraceEnd::Constant { value, graphical } => write!(
                f,
                " : constant {value}, {}",
                if *graphical { "graphical" } else { "not graphical" }
            ),
            TraceEnd::Rejected { reason, .. } => write!(f, " : rejected ({reason})"),
        }
    }
}

fn rejected(at: &DegreeSequence, err: RealizeError) -> TraceEnd {
    TraceEnd::Rejected {
        at: at.clone(),
        reason: err.to_string(),
    }
}

/// Iterated Havel–Hakimi reduction with the full chain of sequences.
pub fn havel_hakimi_trace(x: &DegreeSequence) -> (bool, ReductionTrace) {
    let mut steps = Vec::new();
    let mut current = x.clone();
    let end = loop {
        if current.is_all_zero() {
            break TraceEnd::AllZero;
        }
        match hh_reduce(&current) {
            Ok(next) => {
                steps.push(ReductionStep {
                    before: current.clone(),
                    rule: ReductionRule::Havel,
                    after: next.clone(),
                });
                current = next;
            }
            Err(e) => break rejected(&current, e),
        }
    };
    let graphical = end == TraceEnd::AllZero;
    (
        graphical,
        ReductionTrace {
            start: x.clone(),
            steps,
            end,
        },
    )
}

pub fn havel_hakimi(x: &DegreeSequence) -> bool {
    havel_hakimi_trace(x).0
}

/// Reduces `x` until it is constant, then applies the constant rule: a
/// constant `(a, ..., a)` of length `N` is graphical iff `a <= N - 1` and
/// `N·a` is even.
///
/// A partial step (`k = 1`, `n < x_1`) is taken only when it lands exactly
/// on a constant sequence. Every vertex of that constant has the same
/// degree, so a regular realization can be relabeled to keep the head away
/// from the `n` vertices it lost edges to, and the edges can be restored.
/// Partial steps that land elsewhere can turn a non-graphical sequence into
/// a graphical one, so otherwise a full Havel–Hakimi step is used.
pub fn reduce_to_constant(x: &DegreeSequence) -> Verdict {
    let mut steps = Vec::new();
    let mut current = x.clone();
    let end = if !x.sum().is_multiple_of(2) {
        TraceEnd::Rejected {
            at: x.clone(),
            reason: "odd degree sum".into(),
        }
    } else {
        loop {
            let (head, len) = (current.head(), current.len());
            if current.is_constant() {
                break TraceEnd::Constant {
                    value: head,
                    graphical: head < len && (len * head) % 2 == 0,
                };
            }
            if head > len - 1 {
                break rejected(&current, RealizeError::HeadTooLarge { head, len });
            }
            let landing = (1..head).find_map(|n| {
                generalized_reduce(&current, 0, n)
                    .ok()
                    .filter(DegreeSequence::is_constant)
                    .map(|next| (ReductionRule::Generalized { k: 0, n }, next))
            });
            let (rule, next) = match landing {
                Some(step) => step,
                None => match hh_reduce(&current) {
                    Ok(next) => (ReductionRule::Havel, next),
                    Err(e) => break rejected(&current, e),
                },
            };
            steps.push(ReductionStep {
                before: current.clone(),
                rule,
                after: next.clone(),
            });
            current = next;
        }
    };
    let graphical = matches!(end, TraceEnd::Constant { graphical: true, .. });
    Verdict {
        sequence: x.clone(),
        graphical,
        c_graphical: None,
        method: Method::ConstantReduction,
        certificate: Some(Certificate::Trace {
            trace: ReductionTrace {
                start: x.clone(),
                steps,
                end,
            },
        }),
    }
}
