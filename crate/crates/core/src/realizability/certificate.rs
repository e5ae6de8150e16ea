use serde::{Deserialize, Serialize};

use super::RealizeError;
use crate::constructions::{delta_s_d, max_excess};
use crate::orders::strictly_below;
use crate::sequence::DegreeSequence;

/// `Δ(S_d(N)) ≺ x`, which rules out graphicality of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub n: usize,
    pub d: i64,
    pub dominated: DegreeSequence,
}

/// Looks for a strictly dominated `S_d` sequence below `x`. `None` means
/// the test is inconclusive, not that `x` is graphical.
pub fn non_graphical_certificate(x: &DegreeSequence) -> Result<Option<DominationCertificate>, RealizeError> {
    let n = x.len();
    let max_d = if n >= 2 { max_excess(n) } else { -1 };
    let bad_sum = || RealizeError::BadSum { sum: x.sum(), max_d };
    let d = x.excess().ok_or_else(bad_sum)?;
    if d < 0 || d > max_d {
        return Err(bad_sum());
    }
    let dominated = delta_s_d(n, d).expect("d checked against the legal range");
    Ok(strictly_below(&dominated, x)?.then_some(DominationCertificate { n, d, dominated }))
}
