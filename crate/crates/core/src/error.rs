//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong across graph construction, polynomial
/// algebra, counting, arrangements, and book formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is not below the graph's vertex count.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// An edge index is not below the graph's edge count.
    EdgeOutOfRange { index: usize, edge_count: usize },
    /// A per-vertex or per-edge slice has the wrong length.
    LengthMismatch { expected: usize, actual: usize },
    /// A vertex/edge sequence does not describe a closed walk in the graph.
    InvalidWalk(String),
    /// A resource guard tripped; `what` names the capped quantity.
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    /// lambda has the wrong parity (or sign) for the requested coloring mode.
    ParityMismatch { lambda: i64, mode: &'static str },
    /// Unsigned-mode operations require an all-positive graph.
    NegativeEdgeInUnsignedMode { edge_index: usize },
    /// Contraction is only defined on positive non-loop edges.
    ContractInvalidEdge { index: usize },
    /// Positive loops kill every coloring; the hyperplane encoding cannot
    /// express that, so arrangement routes refuse them.
    PositiveLoopUnsupported { edge_index: usize },
    /// Polynomial division left a remainder or a non-integer quotient step.
    InexactDivision,
    /// Division by the zero polynomial.
    DivisionByZero,
    /// Two interpolation points share an x value.
    DuplicateNode,
    /// Interpolation or basis conversion produced a non-integer coefficient.
    NonIntegralCoefficients,
    /// A polynomial exceeded the degree the caller promised.
    DegreeExceeded { expected: usize, actual: usize },
    /// A polynomial that must be monic is not.
    NotMonic,
    /// Book parameters are outside the family's domain (m, n, l, flags).
    InvalidBookParameters(String),
    /// Two methods that must agree produced different polynomials.
    CrossCheckFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range (graph has {vertex_count} vertices)")
            }
            Error::EdgeOutOfRange { index, edge_count } => {
                write!(f, "edge index {index} out of range (graph has {edge_count} edges)")
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "expected {expected} entries, got {actual}")
            }
            Error::InvalidWalk(msg) => write!(f, "invalid cycle walk: {msg}"),
            Error::BudgetExceeded { what, limit, requested } => {
                write!(f, "budget exceeded: {what} limit {limit}, requested {requested}")
            }
            Error::ParityMismatch { lambda, mode } => {
                write!(f, "lambda = {lambda} is not a valid color count for {mode} coloring")
            }
            Error::NegativeEdgeInUnsignedMode { edge_index } => {
                write!(f, "unsigned mode requires all-positive edges (edge {edge_index} is negative)")
            }
            Error::ContractInvalidEdge { index } => {
                write!(f, "edge {index} is not a positive non-loop edge; cannot contract")
            }
            Error::PositiveLoopUnsupported { edge_index } => {
                write!(f, "edge {edge_index} is a positive loop, which no hyperplane encodes")
            }
            Error::InexactDivision => write!(f, "polynomial division is not exact"),
            Error::DivisionByZero => write!(f, "division by zero polynomial"),
            Error::DuplicateNode => write!(f, "duplicate interpolation node"),
            Error::NonIntegralCoefficients => {
                write!(f, "result has non-integral coefficients")
            }
            Error::DegreeExceeded { expected, actual } => {
                write!(f, "degree {actual} exceeds expected degree {expected}")
            }
            Error::NotMonic => write!(f, "polynomial is not monic"),
            Error::InvalidBookParameters(msg) => write!(f, "invalid book parameters: {msg}"),
            Error::CrossCheckFailed(msg) => write!(f, "cross-check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
