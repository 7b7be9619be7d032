//! Parametric generators for the graph families used throughout the catalog:
//! single vertices, stars, cycles, wheels, complete graphs, the two-vertex
//! parallel-edge (dipole) graph, and the fishbone chains.

use crate::error::{Error, Result};
use crate::graph::{BoundaryCondition, MetricGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    SingleVertex,
    Star,
    Cycle,
    Wheel,
    Complete,
    Fishbone,
    /// Two vertices joined by parallel edges of lengths 1 and n-1, one lead
    /// on each vertex. Equivalent to the cycle with two leads after removing
    /// the transparent degree-2 vertices.
    Dipole,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::SingleVertex => "single",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Complete => "complete",
            Family::Fishbone => "fishbone",
            Family::Dipole => "dipole",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeadMode {
    /// The standard two-lead placement of the family (vertices 1 and 2).
    TwoLeads,
    /// One lead on every vertex.
    LeadPerVertex,
    /// Lead count given by the degree/copies parameter (single vertex only).
    DegreeParameter,
}

/// A parametric recipe that expands into a [`MetricGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    /// Size parameter: vertex count for star/cycle/wheel/complete, the
    /// length parameter for the dipole. Unused for single vertex and
    /// fishbone, which read `degree_or_copies`.
    pub n: u32,
    pub lead_mode: LeadMode,
    /// Degree d for the single vertex, copy count i for the fishbone.
    pub degree_or_copies: Option<u32>,
    /// Boundary condition applied to dead-end vertices (degree 1, no lead).
    pub dead_end_bc: BoundaryCondition,
}

impl FamilySpec {
    pub fn single_vertex(d: u32) -> Self {
        FamilySpec {
            family: Family::SingleVertex,
            n: 1,
            lead_mode: LeadMode::DegreeParameter,
            degree_or_copies: Some(d),
            dead_end_bc: BoundaryCondition::Neumann,
        }
    }

    pub fn star(n: u32) -> Self {
        FamilySpec {
            family: Family::Star,
            n,
            lead_mode: LeadMode::TwoLeads,
            degree_or_copies: None,
            dead_end_bc: BoundaryCondition::Neumann,
        }
    }

    pub fn star_with_bc(n: u32, bc: BoundaryCondition) -> Self {
        FamilySpec {
            dead_end_bc: bc,
            ..Self::star(n)
        }
    }

    pub fn star_all_leads(n: u32) -> Self {
        FamilySpec {
            lead_mode: LeadMode::LeadPerVertex,
            ..Self::star(n)
        }
    }

    pub fn cycle(n: u32) -> Self {
        FamilySpec {
            family: Family::Cycle,
            n,
            lead_mode: LeadMode::TwoLeads,
            degree_or_copies: None,
            dead_end_bc: BoundaryCondition::Neumann,
        }
    }

    pub fn cycle_all_leads(n: u32) -> Self {
        FamilySpec {
            lead_mode: LeadMode::LeadPerVertex,
            ..Self::cycle(n)
        }
    }

    pub fn wheel(n: u32) -> Self {
        FamilySpec {
            family: Family::Wheel,
            n,
            lead_mode: LeadMode::TwoLeads,
            degree_or_copies: None,
            dead_end_bc: BoundaryCondition::Neumann,
        }
    }

    pub fn wheel_all_leads(n: u32) -> Self {
        FamilySpec {
            lead_mode: LeadMode::LeadPerVertex,
            ..Self::wheel(n)
        }
    }

    pub fn complete(n: u32) -> Self {
        FamilySpec {
            family: Family::Complete,
            n,
            lead_mode: LeadMode::TwoLeads,
            degree_or_copies: None,
            dead_end_bc: BoundaryCondition::Neumann,
        }
    }

    pub fn complete_all_leads(n: u32) -> Self {
        FamilySpec {
            lead_mode: LeadMode::LeadPerVertex,
            ..Self::complete(n)
        }
    }

    pub fn fishbone(copies: u32, dead_end_bc: BoundaryCondition) -> Self {
        FamilySpec {
            family: Family::Fishbone,
            n: copies,
            lead_mode: LeadMode::TwoLeads,
            degree_or_copies: Some(copies),
            dead_end_bc,
        }
    }

    pub fn dipole(n: u32) -> Self {
        FamilySpec {
            family: Family::Dipole,
            n,
            lead_mode: LeadMode::TwoLeads,
            degree_or_copies: None,
            dead_end_bc: BoundaryCondition::Neumann,
        }
    }

    /// Parse an inline family spec of the form `family:n` with an optional
    /// `:neumann`/`:dirichlet` dead-end suffix, e.g. `star:4`, `fishbone:3:dirichlet`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.split(':');
        let family = parts.next().unwrap_or_default().trim().to_lowercase();
        let n: u32 = parts
            .next()
            .ok_or_else(|| Error::Parse(format!("family spec `{text}` is missing a size")))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("family spec `{text}` has a non-integer size")))?;
        let bc = match parts.next().map(|s| s.trim().to_lowercase()) {
            None => BoundaryCondition::Neumann,
            Some(s) if s == "neumann" => BoundaryCondition::Neumann,
            Some(s) if s == "dirichlet" => BoundaryCondition::Dirichlet,
            Some(s) => {
                return Err(Error::Parse(format!(
                    "unknown boundary condition `{s}` in family spec `{text}`"
                )))
            }
        };
        if parts.next().is_some() {
            return Err(Error::Parse(format!("trailing fields in family spec `{text}`")));
        }
        let spec = match family.as_str() {
            "single" => FamilySpec::single_vertex(n),
            "star" => FamilySpec {
                dead_end_bc: bc,
                ..FamilySpec::star(n)
            },
            "cycle" => FamilySpec::cycle(n),
            "wheel" => FamilySpec::wheel(n),
            "complete" => FamilySpec::complete(n),
            "fishbone" => FamilySpec::fishbone(n, bc),
            "dipole" => FamilySpec::dipole(n),
            other => {
                return Err(Error::Parse(format!("unknown family `{other}`")));
            }
        };
        Ok(spec)
    }

    pub fn with_lead_mode(self, lead_mode: LeadMode) -> Self {
        FamilySpec { lead_mode, ..self }
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParameterOutOfRange(msg));
        match self.family {
            Family::SingleVertex => {
                if self.degree_or_copies.unwrap_or(0) < 1 {
                    return bad("single vertex requires d >= 1".into());
                }
            }
            Family::Star => {
                if self.n < 3 {
                    return bad(format!("star requires n >= 3, got {}", self.n));
                }
            }
            Family::Cycle => {
                if self.n < 2 {
                    return bad(format!("cycle requires n >= 2, got {}", self.n));
                }
            }
            Family::Wheel => {
                if self.n < 3 {
                    return bad(format!("wheel requires n >= 3, got {}", self.n));
                }
            }
            Family::Complete => {
                if self.n < 2 {
                    return bad(format!("complete requires n >= 2, got {}", self.n));
                }
            }
            Family::Fishbone => {
                if self.degree_or_copies.unwrap_or(0) < 1 {
                    return bad("fishbone requires i >= 1".into());
                }
            }
            Family::Dipole => {
                if self.n < 2 {
                    return bad(format!("dipole requires n >= 2, got {}", self.n));
                }
            }
        }
        Ok(())
    }
}

/// Expand a family spec into its metric graph. Expansion is deterministic:
/// identical specs produce identical graphs and serializations.
pub fn expand_family(spec: &FamilySpec) -> Result<MetricGraph> {
    spec.check()?;
    let (name, vertex_count, edges, leads) = build_parts(spec)?;
    finish(name, vertex_count, edges, leads, spec.dead_end_bc)
}

/// Expand the structural part of a family but attach leads at an explicit
/// list of vertices (channel order = list order).
pub fn expand_family_with_leads(spec: &FamilySpec, leads: &[u32]) -> Result<MetricGraph> {
    spec.check()?;
    let (name, vertex_count, edges, _) = build_parts(spec)?;
    let name = format!("{}^custom", name.split('^').next().unwrap_or(&name));
    finish(name, vertex_count, edges, leads.to_vec(), spec.dead_end_bc)
}

fn finish(
    name: String,
    vertex_count: u32,
    edges: Vec<(u32, u32, u32)>,
    leads: Vec<u32>,
    dead_end_bc: BoundaryCondition,
) -> Result<MetricGraph> {
    // Dead ends are vertices of final degree 1 without a lead; they take the
    // requested boundary condition, everything else is Neumann.
    let mut degree = vec![0u32; vertex_count as usize + 1];
    for &(a, b, _) in &edges {
        degree[a as usize] += 1;
        degree[b as usize] += 1;
    }
    let mut has_lead = vec![false; vertex_count as usize + 1];
    for &l in &leads {
        if (l as usize) < has_lead.len() {
            has_lead[l as usize] = true;
        }
        degree[l as usize] += 1;
    }
    let vertices = (1..=vertex_count)
        .map(|id| {
            let bc = if degree[id as usize] == 1 && !has_lead[id as usize] {
                dead_end_bc
            } else {
                BoundaryCondition::Neumann
            };
            (id, bc)
        })
        .collect();
    MetricGraph::new(name, vertices, edges, leads)
}

#[allow(clippy::type_complexity)]
fn build_parts(spec: &FamilySpec) -> Result<(String, u32, Vec<(u32, u32, u32)>, Vec<u32>)> {
    let leads_for = |n: u32, mode: LeadMode| -> Vec<u32> {
        match mode {
            LeadMode::TwoLeads => vec![1, 2],
            LeadMode::LeadPerVertex => (1..=n).collect(),
            LeadMode::DegreeParameter => vec![1],
        }
    };
    match spec.family {
        Family::SingleVertex => {
            let d = spec.degree_or_copies.unwrap();
            Ok((
                format!("S1^{d}"),
                1,
                vec![],
                std::iter::repeat(1).take(d as usize).collect(),
            ))
        }
        Family::Star => {
            let n = spec.n;
            let edges = (2..=n).map(|j| (1, j, 1)).collect();
            let leads = leads_for(n, spec.lead_mode);
            Ok((format!("S{n}^{}", leads.len()), n, edges, leads))
        }
        Family::Cycle => {
            let n = spec.n;
            let mut edges: Vec<(u32, u32, u32)> = (1..n).map(|j| (j, j + 1, 1)).collect();
            edges.push((n, 1, 1));
            let leads = leads_for(n, spec.lead_mode);
            Ok((format!("C{n}^{}", leads.len()), n, edges, leads))
        }
        Family::Wheel => {
            let n = spec.n;
            let mut edges: Vec<(u32, u32, u32)> = (2..=n).map(|j| (1, j, 1)).collect();
            if n == 3 {
                // The two-vertex rim is the 2-cycle: a parallel pair.
                edges.push((2, 3, 1));
                edges.push((2, 3, 1));
            } else {
                for j in 2..n {
                    edges.push((j, j + 1, 1));
                }
                edges.push((n, 2, 1));
            }
            let leads = leads_for(n, spec.lead_mode);
            Ok((format!("W{n}^{}", leads.len()), n, edges, leads))
        }
        Family::Complete => {
            let n = spec.n;
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    edges.push((i, j, 1));
                }
            }
            let leads = leads_for(n, spec.lead_mode);
            Ok((format!("K{n}^{}", leads.len()), n, edges, leads))
        }
        Family::Dipole => {
            let n = spec.n;
            Ok((
                format!("dipole-{n}"),
                2,
                vec![(1, 2, 1), (1, 2, n - 1)],
                vec![1, 2],
            ))
        }
        Family::Fishbone => {
            let i = spec.degree_or_copies.unwrap();
            // Chain of i star elements: centers 1..=i along the spine, the
            // exit port at i+1, and two dead-end ribs per center. The exit
            // port of each element is identified with the next center.
            let exit = i + 1;
            let mut edges: Vec<(u32, u32, u32)> = Vec::new();
            for j in 1..=i {
                let next = if j == i { exit } else { j + 1 };
                edges.push((j, next, 1));
                edges.push((j, i + 2 * j, 1));
                edges.push((j, i + 2 * j + 1, 1));
            }
            let suffix = match spec.dead_end_bc {
                BoundaryCondition::Neumann => String::new(),
                BoundaryCondition::Dirichlet => "-dirichlet".into(),
            };
            Ok((
                format!("fishbone-{i}{suffix}"),
                3 * i + 1,
                edges,
                vec![1, exit],
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;
    use crate::json::graph_to_json;

    #[test]
    fn star_four_with_two_leads() {
        let g = expand_family(&FamilySpec::star(4)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.leads(), &[VertexId(1), VertexId(2)]);
    }

    #[test]
    fn complete_five_with_a_lead_per_vertex() {
        let g = expand_family(&FamilySpec::complete_all_leads(5)).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.channel_count(), 5);
        for v in g.vertex_ids() {
            assert_eq!(g.degree(v).unwrap(), 5);
        }
    }

    #[test]
    fn complete_two_lead_degree_counts() {
        for n in 2..=8u32 {
            let g = expand_family(&FamilySpec::complete(n)).unwrap();
            assert_eq!(g.edge_count() as u32, n * (n - 1) / 2);
            assert_eq!(g.degree(VertexId(1)).unwrap() as u32, n);
            assert_eq!(g.degree(VertexId(2)).unwrap() as u32, n);
            for v in 3..=n {
                assert_eq!(g.degree(VertexId(v)).unwrap() as u32, n - 1);
            }
        }
    }

    #[test]
    fn cycle_two_is_the_unit_dipole() {
        let c2 = expand_family(&FamilySpec::cycle(2)).unwrap();
        let d2 = expand_family(&FamilySpec::dipole(2)).unwrap();
        assert_eq!(c2.vertex_count(), 2);
        assert_eq!(c2.edge_count(), 2);
        // Same two vertices, same pair of parallel unit edges, same leads.
        let norm = |g: &crate::graph::MetricGraph| {
            let mut e: Vec<(u32, u32, u32)> = g
                .edges()
                .iter()
                .map(|e| {
                    let (a, b) = (e.endpoints.0.index(), e.endpoints.1.index());
                    (a.min(b), a.max(b), e.length_units)
                })
                .collect();
            e.sort_unstable();
            (
                g.vertex_count(),
                e,
                g.leads().iter().map(|v| v.index()).collect::<Vec<_>>(),
            )
        };
        assert_eq!(norm(&c2), norm(&d2));
    }

    #[test]
    fn wheel_three_uses_a_parallel_rim() {
        let g = expand_family(&FamilySpec::wheel(3)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(VertexId(1)).unwrap(), 3); // hub: two spokes + lead
        assert_eq!(g.degree(VertexId(2)).unwrap(), 4);
        assert_eq!(g.degree(VertexId(3)).unwrap(), 3);
    }

    #[test]
    fn fishbone_one_is_the_four_vertex_star() {
        let fb = expand_family(&FamilySpec::fishbone(1, BoundaryCondition::Neumann)).unwrap();
        assert_eq!(fb.vertex_count(), 4);
        assert_eq!(fb.edge_count(), 3);
        assert_eq!(fb.degree(VertexId(1)).unwrap(), 4);
        assert_eq!(fb.degree(VertexId(2)).unwrap(), 2);
    }

    #[test]
    fn fishbone_counts_scale_with_copies() {
        for i in 1..=6u32 {
            let fb = expand_family(&FamilySpec::fishbone(i, BoundaryCondition::Neumann)).unwrap();
            assert_eq!(fb.vertex_count() as u32, 3 * i + 1);
            assert_eq!(fb.edge_count() as u32, 3 * i);
            for j in 1..=i {
                assert_eq!(fb.degree(VertexId(j)).unwrap(), 4, "center {j} of {i}");
            }
        }
    }

    #[test]
    fn dirichlet_dead_ends_only_touch_rib_vertices() {
        let fb = expand_family(&FamilySpec::fishbone(2, BoundaryCondition::Dirichlet)).unwrap();
        for v in fb.vertex_ids() {
            let bc = fb.boundary_condition(v).unwrap();
            if fb.degree(v).unwrap() == 1 {
                assert_eq!(bc, BoundaryCondition::Dirichlet);
            } else {
                assert_eq!(bc, BoundaryCondition::Neumann);
            }
        }
    }

    #[test]
    fn expansion_is_deterministic() {
        for spec in [
            FamilySpec::star(7),
            FamilySpec::cycle_all_leads(5),
            FamilySpec::wheel(6),
            FamilySpec::fishbone(3, BoundaryCondition::Dirichlet),
        ] {
            let a = graph_to_json(&expand_family(&spec).unwrap());
            let b = graph_to_json(&expand_family(&spec).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(matches!(
            expand_family(&FamilySpec::star(2)),
            Err(crate::Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            expand_family(&FamilySpec::cycle(1)),
            Err(crate::Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            expand_family(&FamilySpec::wheel(2)),
            Err(crate::Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            expand_family(&FamilySpec::single_vertex(0)),
            Err(crate::Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn inline_specs_parse() {
        assert_eq!(FamilySpec::parse("star:4").unwrap(), FamilySpec::star(4));
        assert_eq!(
            FamilySpec::parse("fishbone:3:dirichlet").unwrap(),
            FamilySpec::fishbone(3, BoundaryCondition::Dirichlet)
        );
        assert!(FamilySpec::parse("star").is_err());
        assert!(FamilySpec::parse("hexagon:4").is_err());
        assert!(FamilySpec::parse("star:x").is_err());
    }
}
