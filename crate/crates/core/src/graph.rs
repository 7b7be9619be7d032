//! Metric-graph data model: vertices with boundary conditions, integer-length
//! edges, lead attachments, and the per-vertex scattering amplitudes.

use crate::error::{Error, Result, ValidationIssue, ValidationReport};

/// Vertex identifier. Vertices are numbered densely from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> u32 {
        self.0
    }

    /// Zero-based position of this vertex in the dense range.
    pub(crate) fn pos(self) -> usize {
        (self.0 - 1) as usize
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Boundary condition imposed at a vertex. Dirichlet is only meaningful on
/// dead ends (degree-1 vertices), where it forces total reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    Neumann,
    Dirichlet,
}

/// An undirected internal edge with an integer length multiplier: the
/// physical length is `length_units` times the common unit length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub endpoints: (VertexId, VertexId),
    pub length_units: u32,
}

impl Edge {
    /// The endpoint opposite to `v`.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.endpoints.0 == v {
            self.endpoints.1
        } else {
            self.endpoints.0
        }
    }
}

/// Reflection and transmission amplitudes at a single vertex. For Neumann
/// vertices these are real and independent of the wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexAmplitudes {
    pub reflection: f64,
    pub transmission: f64,
}

/// Vertex amplitudes as a function of the boundary condition and the
/// lead-inclusive degree.
///
/// Neumann with degree d >= 2 gives r = 2/d - 1 and t = 2/d; a Neumann dead
/// end reflects with +1 and a Dirichlet dead end with -1.
pub fn vertex_amplitudes(bc: BoundaryCondition, degree: usize) -> Result<VertexAmplitudes> {
    match (bc, degree) {
        (_, 0) => Err(Error::ParameterOutOfRange(
            "vertex degree must be >= 1".into(),
        )),
        (BoundaryCondition::Neumann, 1) => Ok(VertexAmplitudes {
            reflection: 1.0,
            transmission: 0.0,
        }),
        (BoundaryCondition::Dirichlet, 1) => Ok(VertexAmplitudes {
            reflection: -1.0,
            transmission: 0.0,
        }),
        (BoundaryCondition::Dirichlet, degree) => Err(Error::DirichletDegreeMismatch { degree }),
        (BoundaryCondition::Neumann, d) => {
            let d = d as f64;
            Ok(VertexAmplitudes {
                reflection: 2.0 / d - 1.0,
                transmission: 2.0 / d,
            })
        }
    }
}

/// A validated open metric graph: the closed combinatorial graph plus the
/// leads that turn it into a scattering system.
///
/// Instances are immutable once constructed, so they can be shared freely
/// across worker threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricGraph {
    name: String,
    conditions: Vec<BoundaryCondition>, // indexed by vertex position
    edges: Vec<Edge>,
    leads: Vec<VertexId>, // channel order; channel 1 is leads[0]
    degrees: Vec<usize>,  // lead-inclusive, indexed by vertex position
}

impl MetricGraph {
    /// Build and validate a graph. `vertices` pairs vertex ids with boundary
    /// conditions, `edges` holds `(endpoint, endpoint, length_units)`, and
    /// `leads` lists lead vertices in channel order.
    ///
    /// On failure the error carries a report naming every violated invariant.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<(u32, BoundaryCondition)>,
        edges: Vec<(u32, u32, u32)>,
        leads: Vec<u32>,
    ) -> Result<Self> {
        let name = name.into();
        let mut issues = Vec::new();

        let mut ids: Vec<u32> = vertices.iter().map(|&(id, _)| id).collect();
        ids.sort_unstable();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                issues.push(ValidationIssue::DuplicateVertexId { vertex: w[0] });
            }
        }
        let v = vertices.len() as u32;
        let dense = ids.first().copied() == Some(1)
            && ids.last().copied() == Some(v)
            && ids.windows(2).all(|w| w[1] <= w[0] + 1);
        if !vertices.is_empty() && !dense {
            issues.push(ValidationIssue::NonDenseVertexIds);
        }
        if vertices.is_empty() {
            issues.push(ValidationIssue::NonDenseVertexIds);
        }

        let exists = |id: u32| id >= 1 && id <= v && dense;

        let mut checked_edges = Vec::with_capacity(edges.len());
        for (i, &(a, b, len)) in edges.iter().enumerate() {
            if !exists(a) {
                issues.push(ValidationIssue::DanglingReference {
                    what: "edge",
                    vertex: a,
                });
            }
            if !exists(b) {
                issues.push(ValidationIssue::DanglingReference {
                    what: "edge",
                    vertex: b,
                });
            }
            if a == b {
                issues.push(ValidationIssue::SelfLoop { edge_index: i });
            }
            if len == 0 {
                issues.push(ValidationIssue::InvalidEdgeLength {
                    edge_index: i,
                    length_units: len,
                });
            }
            checked_edges.push(Edge {
                endpoints: (VertexId(a), VertexId(b)),
                length_units: len,
            });
        }

        for &l in &leads {
            if !exists(l) {
                issues.push(ValidationIssue::DanglingReference {
                    what: "lead",
                    vertex: l,
                });
            }
        }
        if leads.is_empty() {
            issues.push(ValidationIssue::NoLeads);
        }

        // Connectivity over the edge multiset (only meaningful once the
        // reference checks above passed).
        if issues.is_empty() && !is_connected(v as usize, &checked_edges) {
            issues.push(ValidationIssue::Disconnected);
        }

        // Degrees and the Dirichlet placement rule.
        let mut conditions = vec![BoundaryCondition::Neumann; vertices.len()];
        let mut degrees = vec![0usize; vertices.len()];
        if issues.is_empty() {
            for &(id, bc) in &vertices {
                conditions[(id - 1) as usize] = bc;
            }
            for e in &checked_edges {
                degrees[e.endpoints.0.pos()] += 1;
                degrees[e.endpoints.1.pos()] += 1;
            }
            for &l in &leads {
                degrees[(l - 1) as usize] += 1;
            }
            for &(id, bc) in &vertices {
                let d = degrees[(id - 1) as usize];
                if bc == BoundaryCondition::Dirichlet && d != 1 {
                    issues.push(ValidationIssue::DirichletOnInternalVertex {
                        vertex: id,
                        degree: d,
                    });
                }
            }
        }

        if !issues.is_empty() {
            return Err(Error::Validation(ValidationReport { issues }));
        }

        Ok(MetricGraph {
            name,
            conditions,
            edges: checked_edges,
            leads: leads.into_iter().map(VertexId).collect(),
            degrees,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.conditions.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Lead vertices in channel order (channel 1 first).
    pub fn leads(&self) -> &[VertexId] {
        &self.leads
    }

    /// Number of scattering channels.
    pub fn channel_count(&self) -> usize {
        self.leads.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (1..=self.conditions.len() as u32).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 >= 1 && (v.0 as usize) <= self.conditions.len()
    }

    pub fn boundary_condition(&self, v: VertexId) -> Result<BoundaryCondition> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v.0));
        }
        Ok(self.conditions[v.pos()])
    }

    /// Lead-inclusive degree: incident edge ends plus incident leads.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v.0));
        }
        Ok(self.degrees[v.pos()])
    }

    /// Reflection/transmission amplitudes at `v` for its lead-inclusive degree.
    pub fn amplitudes_at(&self, v: VertexId) -> Result<VertexAmplitudes> {
        vertex_amplitudes(self.boundary_condition(v)?, self.degree(v)?)
    }

    /// Vertex carrying the lead of a 1-based scattering channel.
    pub fn lead_vertex(&self, channel: usize) -> Result<VertexId> {
        if channel == 0 || channel > self.leads.len() {
            return Err(Error::UnknownChannel(channel));
        }
        Ok(self.leads[channel - 1])
    }
}

fn is_connected(vertex_count: usize, edges: &[Edge]) -> bool {
    if vertex_count <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in edges {
        let a = find(&mut parent, e.endpoints.0.pos());
        let b = find(&mut parent, e.endpoints.1.pos());
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (1..vertex_count).all(|i| find(&mut parent, i) == root)
}
