//! Signless Laplacian spectra of small graphs: exact isomorphism-free
//! enumeration, closed-form eigenvalue bounds, and exhaustive verification
//! that the bounds hold (or fail, with witnesses) over every graph up to a
//! desk-scale order.
//!
//! The numeric kernel is generic over its floating-point scalar; the crate
//! root exports the `f64` instantiations everything downstream uses.

pub mod bounds;
mod canon;
pub mod cubic;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6, MAX_GRAPH6_VERTICES};
pub use scalar::Scalar;

pub use canon::MAX_CANON_VERTICES;
pub use enumerate::{canonical_form, enumerate_graphs, enumerate_labeled, EnumSpec};
pub use verify::{
    audit_proof, check_graph, extremal_slack, verify_bound, AuditCheck, BoundKind, ProofAudit,
    VerifyRun, Violation, DEFAULT_SLACK_TOL,
};

pub use bounds::BoundReport;
pub use spectral::DEFAULT_EIGEN_TOL;

/// Concrete `f64` instantiations of the generic kernel.
pub type SymMatrix64 = spectral::SymMatrix<f64>;
pub type Spectrum64 = spectral::Spectrum<f64>;
pub type Cubic64 = cubic::Cubic<f64>;
