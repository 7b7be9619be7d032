use std::fmt;

use thiserror::Error;

/// One violated graph invariant, reported by [`crate::graph::MetricGraph`]
/// validation. Validation collects every violation instead of stopping at
/// the first one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    /// An edge or lead references a vertex id that is not in the vertex list.
    DanglingReference { what: &'static str, vertex: u32 },
    /// The underlying multigraph is not connected.
    Disconnected,
    /// An edge joins a vertex to itself.
    SelfLoop { edge_index: usize },
    /// A Dirichlet condition was placed on a vertex of degree other than one.
    DirichletOnInternalVertex { vertex: u32, degree: usize },
    /// The graph has no leads, so it defines no scattering channel.
    NoLeads,
    /// The same vertex id appears twice in the vertex list.
    DuplicateVertexId { vertex: u32 },
    /// Vertex ids do not form the dense range 1..=v.
    NonDenseVertexIds,
    /// An edge has a non-positive length multiplier.
    InvalidEdgeLength { edge_index: usize, length_units: u32 },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::DanglingReference { what, vertex } => {
                write!(f, "{what} references unknown vertex {vertex}")
            }
            ValidationIssue::Disconnected => write!(f, "graph is not connected"),
            ValidationIssue::SelfLoop { edge_index } => {
                write!(f, "edge {edge_index} is a self-loop")
            }
            ValidationIssue::DirichletOnInternalVertex { vertex, degree } => write!(
                f,
                "vertex {vertex} has a Dirichlet condition but degree {degree} (only degree-1 vertices may be Dirichlet)"
            ),
            ValidationIssue::NoLeads => write!(f, "graph has no leads"),
            ValidationIssue::DuplicateVertexId { vertex } => {
                write!(f, "vertex id {vertex} appears more than once")
            }
            ValidationIssue::NonDenseVertexIds => {
                write!(f, "vertex ids must be the dense range 1..=v")
            }
            ValidationIssue::InvalidEdgeLength {
                edge_index,
                length_units,
            } => write!(
                f,
                "edge {edge_index} has length_units {length_units}, expected >= 1"
            ),
        }
    }
}

/// Every invariant violation found while validating one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  - {issue}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph:\n{0}")]
    Validation(ValidationReport),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("unknown scattering channel {0}")]
    UnknownChannel(usize),
    #[error("Dirichlet boundary condition requires degree 1, got degree {degree}")]
    DirichletDegreeMismatch { degree: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("bond system singular at k = {k} and at the shifted retry point")]
    SingularAfterRetry { k: f64 },
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),
    #[error(
        "quadrature did not converge: {panels} panels, estimated error {estimated_error:.3e}"
    )]
    QuadratureNotConverged {
        panels: u32,
        estimated_error: f64,
        /// Best estimate of the average at the panel cap.
        best: f64,
    },
    #[error("closed form evaluated at a singular point, k = {k}")]
    SingularPoint { k: f64 },
    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),
    #[error("unknown reproduction target `{0}`")]
    UnknownTarget(String),
    #[error("catalog graph `{id}` violates its structure contract: {reason}")]
    StructureViolation { id: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
