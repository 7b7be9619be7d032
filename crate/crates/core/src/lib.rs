//! Exact scattering amplitudes and Shannon scattering entropy on open
//! equilateral metric graphs.
//!
//! The crate builds the directed-bond linear system of a metric graph with
//! semi-infinite leads, solves it at a given wavenumber to obtain the full
//! channel-to-channel scattering matrix, and integrates the per-wavenumber
//! Shannon entropy of the exit-channel distribution over one period to get
//! the average scattering entropy of the graph.

pub mod bonds;
pub mod catalog;
pub mod csvfmt;
pub mod entropy;
pub mod error;
pub mod family;
pub mod graph;
pub mod json;
pub mod linalg;
pub mod quadrature;
pub mod scattering;

pub use error::{Error, Result, ValidationIssue, ValidationReport};
pub use graph::{vertex_amplitudes, BoundaryCondition, Edge, MetricGraph, VertexAmplitudes, VertexId};

pub use bonds::{assemble, enumerate_bonds, BondSystem, DirectedBond, NeighborExclusion};
pub use entropy::{
    average_entropy, average_entropy_over_period, entropy_at, shannon_entropy,
    transmission_sweep, ChannelDistribution, EntropyProfile, SweepRow, SweepTable,
};
pub use family::{expand_family, Family, FamilySpec, LeadMode};
pub use scattering::{
    scattering_matrix, secular_determinant, solve, ScatteringMatrix, SolveDiagnostics,
};
