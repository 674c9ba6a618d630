use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6: invalid header byte {0:#04x} (long-form and non-printable headers are not supported)")]
    Graph6Header(u8),
    #[error("graph6: body has {got} bytes, expected {expected}")]
    Graph6Length { expected: usize, got: usize },
    #[error("graph6: invalid body byte {0:#04x}")]
    Graph6Body(u8),
    #[error("graph6: nonzero padding bits")]
    Graph6Padding,
    #[error("vertex count {0} outside the supported range {1}")]
    OrderOutOfRange(usize, &'static str),
    #[error("matrix orders differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("zero vector")]
    ZeroVector,
    #[error("graph has no edges")]
    NoEdges,
    #[error("no connected isomorphism class with n={n}, m={m}")]
    NoMatchingClass { n: usize, m: usize },
    #[error("invalid argument: {0}")]
    InvalidInput(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
