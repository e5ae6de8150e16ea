//! Graphicality tests, realizations and reductions.

mod certificate;
mod erdos_gallai;
mod realize;
mod reduction;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};
use crate::orders::OrderError;
use crate::registry::{Named, Registry};
use crate::sequence::DegreeSequence;

pub use certificate::{non_graphical_certificate, DominationCertificate};
pub use erdos_gallai::erdos_gallai;
pub use realize::{
    apply_inverse_transfer_on_graph, is_c_graphical, realize, realize_connected,
    realize_via_domination,
};
pub use reduction::{
    generalized_reduce, havel_hakimi, havel_hakimi_trace, hh_reduce, reduce_to_constant,
    ReductionRule, ReductionStep, ReductionTrace, TraceEnd,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("head {head} exceeds N - 1 = {}", len - 1)]
    HeadTooLarge { head: usize, len: usize },
    #[error("reduction of {0} would make an entry negative")]
    Underflow(DegreeSequence),
    #[error("cannot reduce a sequence of length 1")]
    TooShort,
    #[error("rank {rank} outside 0..{len}")]
    BadRank { rank: usize, len: usize },
    #[error("count {count} not in 1..={max}")]
    BadCount { count: usize, max: usize },
    #[error("{0} is not graphical")]
    NotGraphical(DegreeSequence),
    #[error("{0} is not c-graphical")]
    NotCGraphical(DegreeSequence),
    #[error("degree sum {sum} does not fit 2(N-1) + 2d with 0 <= d <= {max_d}")]
    BadSum { sum: usize, max_d: i64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The procedure that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ErdosGallai,
    HavelHakimi,
    ConstantReduction,
    DominationCertificate,
    ConnectedCriterion,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::ErdosGallai => "erdos-gallai",
            Method::HavelHakimi => "havel-hakimi",
            Method::ConstantReduction => "constant-reduction",
            Method::DominationCertificate => "domination-certificate",
            Method::ConnectedCriterion => "connected-criterion",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Realization { graph: SimpleGraph },
    Trace { trace: ReductionTrace },
    Dominating { certificate: DominationCertificate },
}

/// Outcome of a realizability check.
///
/// `c_graphical` is `None` when the deciding method says nothing about
/// connectivity; `Some(true)` always comes with `graphical = true`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub sequence: DegreeSequence,
    pub graphical: bool,
    pub c_graphical: Option<bool>,
    pub method: Method,
    pub certificate: Option<Certificate>,
}

/// A decision procedure for graphicality.
pub trait GraphicalityTest: Named + Send + Sync {
    fn decide(&self, x: &DegreeSequence) -> Verdict;
}

pub struct ErdosGallaiTest;

impl Named for ErdosGallaiTest {
    fn name(&self) -> &'static str {
        "eg"
    }
}

impl GraphicalityTest for ErdosGallaiTest {
    fn decide(&self, x: &DegreeSequence) -> Verdict {
        Verdict {
            sequence: x.clone(),
            graphical: erdos_gallai(x),
            c_graphical: None,
            method: Method::ErdosGallai,
            certificate: None,
        }
    }
}

pub struct HavelHakimiTest;

impl Named for HavelHakimiTest {
    fn name(&self) -> &'static str {
        "hh"
    }
}

impl GraphicalityTest for HavelHakimiTest {
    fn decide(&self, x: &DegreeSequence) -> Verdict {
        let (graphical, trace) = havel_hakimi_trace(x);
        Verdict {
            sequence: x.clone(),
            graphical,
            c_graphical: None,
            method: Method::HavelHakimi,
            certificate: Some(Certificate::Trace { trace }),
        }
    }
}

pub struct ConstantReductionTest;

impl Named for ConstantReductionTest {
    fn name(&self) -> &'static str {
        "constant"
    }
}

impl GraphicalityTest for ConstantReductionTest {
    fn decide(&self, x: &DegreeSequence) -> Verdict {
        reduce_to_constant(x)
    }
}

/// Rejects via a strictly dominated `S_d` sequence when one exists; falls
/// back to Erdős–Gallai when the certificate is inconclusive.
pub struct CertificateTest;

impl Named for CertificateTest {
    fn name(&self) -> &'static str {
        "certificate"
    }
}

impl GraphicalityTest for CertificateTest {
    fn decide(&self, x: &DegreeSequence) -> Verdict {
        match non_graphical_certificate(x) {
            Ok(Some(certificate)) => Verdict {
                sequence: x.clone(),
                graphical: false,
                c_graphical: Some(false),
                method: Method::DominationCertificate,
                certificate: Some(Certificate::Dominating { certificate }),
            },
            _ => ErdosGallaiTest.decide(x),
        }
    }
}

pub fn graphicality_registry() -> Registry<dyn GraphicalityTest> {
    let mut reg: Registry<dyn GraphicalityTest> = Registry::new("method");
    reg.register(Arc::new(ErdosGallaiTest))
        .register(Arc::new(HavelHakimiTest))
        .register(Arc::new(ConstantReductionTest))
        .register(Arc::new(CertificateTest));
    reg
}

/// Connected realizability, with a connected realization as witness.
pub fn check_connected(x: &DegreeSequence) -> Verdict {
    let graphical = erdos_gallai(x);
    match realize_connected(x) {
        Ok(graph) => Verdict {
            sequence: x.clone(),
            graphical: true,
            c_graphical: Some(true),
            method: Method::ConnectedCriterion,
            certificate: Some(Certificate::Realization { graph }),
        },
        Err(_) => Verdict {
            sequence: x.clone(),
            graphical,
            c_graphical: Some(false),
            method: Method::ConnectedCriterion,
            certificate: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::seq;

    #[test]
    fn registry_methods_agree_on_examples() {
        let reg = graphicality_registry();
        assert_eq!(reg.names(), vec!["certificate", "constant", "eg", "hh"]);
        for (x, expected) in [
            (seq(&[5, 4, 4, 3, 3, 3]), true),
            (seq(&[4, 4, 3, 2, 1]), false),
            (seq(&[4, 4, 2, 1, 1]), false),
            (seq(&[2, 1, 1, 1, 1]), true),
            (seq(&[0, 0, 0]), true),
        ] {
            for test in reg.iter() {
                assert_eq!(test.decide(&x).graphical, expected, "{} on {x}", test.name());
            }
        }
    }

    #[test]
    fn certificate_method() {
        let v = CertificateTest.decide(&seq(&[4, 4, 3, 2, 1]));
        assert_eq!(v.method, Method::DominationCertificate);
        assert!(!v.graphical);
        let v = CertificateTest.decide(&seq(&[4, 3, 3, 3, 1]));
        assert_eq!(v.method, Method::ErdosGallai);
        assert!(v.graphical);
    }

    #[test]
    fn connected_verdicts() {
        let v = check_connected(&seq(&[2, 1, 1, 1, 1]));
        assert!(v.graphical);
        assert_eq!(v.c_graphical, Some(false));
        let v = check_connected(&seq(&[4, 3, 3, 3, 1]));
        assert_eq!(v.c_graphical, Some(true));
        let Some(Certificate::Realization { graph }) = &v.certificate else {
            panic!("expected a realization")
        };
        assert!(graph.is_connected());
        assert_eq!(graph.degree_sequence(), v.sequence);
    }

    #[test]
    fn verdict_json_round_trip() {
        for v in [
            HavelHakimiTest.decide(&seq(&[5, 4, 4, 3, 3, 3])),
            CertificateTest.decide(&seq(&[4, 4, 3, 2, 1])),
            check_connected(&seq(&[3, 2, 2, 1])),
        ] {
            let json = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<Verdict>(&json).unwrap(), v);
        }
    }
}
