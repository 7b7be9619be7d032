//! Strict JSON interchange format for metric graphs.
//!
//! A graph document is a single UTF-8 JSON object:
//!
//! ```json
//! {
//!   "name": "S4^2",
//!   "vertices": [{"id": 1, "bc": "neumann"}, ...],
//!   "edges": [[1, 2, 1], ...],
//!   "leads": [1, 2]
//! }
//! ```
//!
//! Edge entries are `[endpoint, endpoint, length_units]`. Lead entries are
//! vertex ids in channel order. Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BoundaryCondition, MetricGraph};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    name: String,
    vertices: Vec<VertexDoc>,
    edges: Vec<(u32, u32, u32)>,
    leads: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: u32,
    bc: BcDoc,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum BcDoc {
    Neumann,
    Dirichlet,
}

impl From<BcDoc> for BoundaryCondition {
    fn from(bc: BcDoc) -> Self {
        match bc {
            BcDoc::Neumann => BoundaryCondition::Neumann,
            BcDoc::Dirichlet => BoundaryCondition::Dirichlet,
        }
    }
}

impl From<BoundaryCondition> for BcDoc {
    fn from(bc: BoundaryCondition) -> Self {
        match bc {
            BoundaryCondition::Neumann => BcDoc::Neumann,
            BoundaryCondition::Dirichlet => BcDoc::Dirichlet,
        }
    }
}

/// Parse a graph document, then run full graph validation.
pub fn graph_from_json(text: &str) -> Result<MetricGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let mut seen = std::collections::HashSet::new();
    for v in &doc.vertices {
        if !seen.insert(v.id) {
            return Err(Error::Parse(format!("duplicate vertex id {}", v.id)));
        }
    }
    for (i, &(_, _, len)) in doc.edges.iter().enumerate() {
        if len == 0 {
            return Err(Error::Parse(format!(
                "edges[{i}]: length_units must be >= 1"
            )));
        }
    }
    MetricGraph::new(
        doc.name,
        doc.vertices
            .into_iter()
            .map(|v| (v.id, v.bc.into()))
            .collect(),
        doc.edges,
        doc.leads,
    )
}

/// Serialize a graph in normalized form: vertices sorted by id, edges and
/// leads in stored order, two-space indentation. Serialization after parse
/// is idempotent.
pub fn graph_to_json(graph: &MetricGraph) -> String {
    let doc = GraphDoc {
        name: graph.name().to_string(),
        vertices: graph
            .vertex_ids()
            .map(|v| VertexDoc {
                id: v.index(),
                bc: graph.boundary_condition(v).unwrap().into(),
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| (e.endpoints.0.index(), e.endpoints.1.index(), e.length_units))
            .collect(),
        leads: graph.leads().iter().map(|v| v.index()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail");
    out.push('\n');
    out
}

pub fn graph_from_file(path: impl AsRef<std::path::Path>) -> Result<MetricGraph> {
    let text = std::fs::read_to_string(path)?;
    graph_from_json(&text)
}
