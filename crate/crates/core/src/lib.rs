//! Degree-sequence realizability through majorization.
//!
//! The crate decides whether integer sequences are graphical or
//! connected-graphical, builds realizations and non-graphicality
//! certificates, and enumerates the maximal degree sequences of connected
//! graphs with a given number of edges.
//!
//! Modules:
//! * [`graph`]: labeled simple graphs and rewiring primitives.
//! * [`sequence`]: non-increasing integer sequences.
//! * [`orders`]: majorization orders, Lorenz curves, unit transfers.
//! * [`realizability`]: graphicality tests, reductions, realizations.
//! * [`constructions`]: the `S_d` and `S'_d` families and incomplete stars.
//! * [`maximal`]: enumeration of `Δ(T^d(n))` and its maximal elements.
//!
//! Interchangeable algorithms (orders, graphicality tests, graph families,
//! enumeration oracles) live behind traits and are looked up by name in a
//! [`registry::Registry`].

pub mod constructions;
pub mod graph;
pub mod maximal;
pub mod orders;
pub mod partitions;
pub mod realizability;
pub mod registry;
pub mod sequence;

pub use graph::SimpleGraph;
pub use sequence::{seq, DegreeSequence};
