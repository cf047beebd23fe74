//! Involutory Cayley graphs of finite commutative rings: `x ~ y` iff
//! `(x - y)^2 = 1`.

pub mod budget;
pub mod classifier;
pub mod cli;
pub mod graph;
pub mod parser;
pub mod ring;
pub mod spec;
pub mod topology;
pub mod verifier;

pub use budget::{Budget, IsoResult};
pub use classifier::{classify_genus, classify_local, genus_class_from_graph, GenusClass, LocalClass, Verdict};
pub use graph::{build_cayley, CayleyGraph, Girth};
pub use parser::{parse_ring_spec, ParseDiagnostic};
pub use ring::{build_ring, Atom, FiniteRing, LocalDecomposition, RingError};
pub use spec::{format_ring_spec, RingSpec};
pub use topology::{min_genus, GenusCertificate, RotationSystem};
pub use verifier::{enumerate_rings, run_suite, SuiteReport, TheoremId};
