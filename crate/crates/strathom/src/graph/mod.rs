//! The graph-with-involution model of the first transversal homotopy monoid.
//!
//! A stratified manifold whose open strata are simply-connected is abstracted
//! to a finite directed multigraph: one vertex per open stratum, a pair of
//! involution-swapped edges per codimension-1 stratum with orientable normal
//! bundle, and a single involution-fixed loop per codimension-1 stratum with
//! non-orientable normal bundle. Based loops in the graph — composable edge
//! sequences from the base vertex to itself — form the loop monoid: the
//! crossing sequence is a complete invariant, so loop equality is literal
//! edge-sequence equality and nothing is ever rewritten.

mod enumerate;
mod realize;
mod strata;

pub use enumerate::{PresGenerator, Presentation};
pub use realize::{Bridge, Plumbing, SurgeryRecipe};
pub use strata::{OpenStratum, StrataSpec, Wall};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Index of a vertex in its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// Index of a directed edge in its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

/// Raw graph data as it appears in graph JSON files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub base: String,
    pub edges: Vec<EdgeSpec>,
    pub involution: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
}

impl EdgeSpec {
    pub fn new(name: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        EdgeSpec {
            name: name.into(),
            src: src.into(),
            dst: dst.into(),
        }
    }
}

/// A broken graph invariant, with the names needed to locate it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` refers to unknown vertex `{vertex}`")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("base vertex `{0}` does not exist")]
    MissingBase(String),
    #[error("edge `{0}` has no involution entry")]
    MissingInvolution(String),
    #[error("involution mentions unknown edge `{0}`")]
    UnknownInvolutionEdge(String),
    #[error("not an involution: `{edge}` ↦ `{image}` ↦ `{back}`")]
    NotInvolution {
        edge: String,
        image: String,
        back: String,
    },
    #[error("involution does not reverse `{edge}`: `{image}` runs {found}, expected {expected}")]
    NotReversing {
        edge: String,
        image: String,
        expected: String,
        found: String,
    },
    #[error("self-dual edge `{edge}` must be a loop but runs {src} → {dst}")]
    SelfDualNotLoop {
        edge: String,
        src: String,
        dst: String,
    },
}

impl GraphSpec {
    pub fn from_json_str(input: &str) -> Result<Self> {
        Ok(serde_json::from_str(input)?)
    }

    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("graph spec serializes");
        out.push('\n');
        out
    }

    /// Checks every invariant and reports all violations instead of failing
    /// at the first.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                out.push(Violation::DuplicateVertex(v.clone()));
            }
        }
        if !self.vertices.contains(&self.base) {
            out.push(Violation::MissingBase(self.base.clone()));
        }
        let mut edge_by_name: BTreeMap<&str, &EdgeSpec> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if self.edges[..i].iter().any(|d| d.name == e.name) {
                out.push(Violation::DuplicateEdge(e.name.clone()));
            } else {
                edge_by_name.insert(&e.name, e);
            }
            for v in [&e.src, &e.dst] {
                if !self.vertices.contains(v) {
                    out.push(Violation::UnknownEndpoint {
                        edge: e.name.clone(),
                        vertex: v.clone(),
                    });
                }
            }
        }
        for key in self.involution.keys() {
            if !edge_by_name.contains_key(key.as_str()) {
                out.push(Violation::UnknownInvolutionEdge(key.clone()));
            }
        }
        for e in &self.edges {
            let Some(image_name) = self.involution.get(&e.name) else {
                out.push(Violation::MissingInvolution(e.name.clone()));
                continue;
            };
            let Some(image) = edge_by_name.get(image_name.as_str()) else {
                out.push(Violation::UnknownInvolutionEdge(image_name.clone()));
                continue;
            };
            match self.involution.get(image_name) {
                Some(back) if *back == e.name => {}
                Some(back) => out.push(Violation::NotInvolution {
                    edge: e.name.clone(),
                    image: image_name.clone(),
                    back: back.clone(),
                }),
                // missing entry for the image is reported in its own turn
                None => {}
            }
            if image.src != e.dst || image.dst != e.src {
                out.push(Violation::NotReversing {
                    edge: e.name.clone(),
                    image: image_name.clone(),
                    expected: format!("{} → {}", e.dst, e.src),
                    found: format!("{} → {}", image.src, image.dst),
                });
            }
            if *image_name == e.name && e.src != e.dst {
                out.push(Violation::SelfDualNotLoop {
                    edge: e.name.clone(),
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                });
            }
        }
        out
    }

    /// Validates and builds the indexed graph.
    pub fn build(&self) -> Result<StratGraph> {
        let violations = self.violations();
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        let vertex_id = |name: &str| {
            VertexId(
                self.vertices
                    .iter()
                    .position(|v| v == name)
                    .expect("validated"),
            )
        };
        let edge_id = |name: &str| {
            EdgeId(
                self.edges
                    .iter()
                    .position(|e| e.name == name)
                    .expect("validated"),
            )
        };
        let edges: Vec<EdgeData> = self
            .edges
            .iter()
            .map(|e| EdgeData {
                name: e.name.clone(),
                src: vertex_id(&e.src),
                dst: vertex_id(&e.dst),
                partner: edge_id(&self.involution[&e.name]),
            })
            .collect();
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.src.0].push(EdgeId(i));
        }
        Ok(StratGraph {
            vertices: self.vertices.clone(),
            base: vertex_id(&self.base),
            edges,
            out,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EdgeData {
    name: String,
    src: VertexId,
    dst: VertexId,
    partner: EdgeId,
}

/// A validated stratification graph: directed multigraph, source- and
/// target-reversing edge involution, and a base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratGraph {
    vertices: Vec<String>,
    base: VertexId,
    edges: Vec<EdgeData>,
    out: Vec<Vec<EdgeId>>,
}

/// A composable sequence of directed edges. The empty path is allowed at any
/// vertex, which is why the start vertex is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePath {
    start: VertexId,
    edges: Vec<EdgeId>,
}

impl EdgePath {
    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// An element of the loop monoid: an edge path from base back to base.
///
/// Equality is literal edge-sequence equality — crossings are remembered and
/// no normalization ever fires.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopClass {
    path: EdgePath,
}

impl LoopClass {
    pub fn path(&self) -> &EdgePath {
        &self.path
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.path.edges
    }

    pub fn len(&self) -> usize {
        self.path.edges.len()
    }

    pub fn is_unit(&self) -> bool {
        self.path.edges.is_empty()
    }
}

/// Crossing counts of a path, per codimension-1 stratum (dagger orbit of
/// edges) and per directed edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingProfile {
    /// Traversal count of each directed edge.
    pub per_edge: BTreeMap<String, usize>,
    /// Per orbit: total crossings, and the net signed count where a sign
    /// makes sense (the canonical direction is the lexicographically least
    /// edge name; self-dual strata are non-orientable, so no sign).
    pub per_orbit: Vec<OrbitCrossings>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCrossings {
    pub stratum: String,
    pub total: usize,
    pub net: Option<i64>,
}

impl StratGraph {
    pub fn from_json_str(input: &str) -> Result<Self> {
        GraphSpec::from_json_str(input)?.build()
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertices.clone(),
            base: self.vertices[self.base.0].clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec::new(&e.name, &self.vertices[e.src.0], &self.vertices[e.dst.0]))
                .collect(),
            involution: self
                .edges
                .iter()
                .map(|e| (e.name.clone(), self.edges[e.partner.0].name.clone()))
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        self.to_spec().to_json_string()
    }

    pub fn base(&self) -> VertexId {
        self.base
    }

    pub fn base_name(&self) -> &str {
        &self.vertices[self.base.0]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn edge_src(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].src
    }

    pub fn edge_dst(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].dst
    }

    /// The involution image of an edge.
    pub fn partner(&self, e: EdgeId) -> EdgeId {
        self.edges[e.0].partner
    }

    pub fn is_self_dual(&self, e: EdgeId) -> bool {
        self.edges[e.0].partner == e
    }

    pub fn find_edge(&self, name: &str) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .map(EdgeId)
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.0]
    }

    /// Dagger orbits of edges, one per codimension-1 stratum, ordered by the
    /// canonical (lexicographically least) edge name.
    pub fn edge_orbits(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut orbits: Vec<(EdgeId, EdgeId)> = Vec::new();
        for e in self.edge_ids() {
            let p = self.partner(e);
            let canonical = if self.edge_name(p) < self.edge_name(e) {
                (p, e)
            } else {
                (e, p)
            };
            if !orbits.contains(&canonical) {
                orbits.push(canonical);
            }
        }
        orbits.sort_by(|a, b| self.edge_name(a.0).cmp(self.edge_name(b.0)));
        orbits
    }

    fn check_membership(&self, path: &EdgePath) -> Result<()> {
        if path.start.0 >= self.vertices.len()
            || path.edges.iter().any(|e| e.0 >= self.edges.len())
        {
            return Err(Error::ForeignLoop);
        }
        Ok(())
    }

    /// Builds a composable path; reports the first non-composable step.
    pub fn path(&self, start: VertexId, edges: Vec<EdgeId>) -> Result<EdgePath> {
        let candidate = EdgePath { start, edges };
        self.check_membership(&candidate)?;
        let mut at = start;
        for &e in &candidate.edges {
            if self.edge_src(e) != at {
                return Err(Error::NotComposable {
                    edge: self.edge_name(e).to_string(),
                    expected: self.vertex_name(at).to_string(),
                    found: self.vertex_name(self.edge_src(e)).to_string(),
                });
            }
            at = self.edge_dst(e);
        }
        Ok(candidate)
    }

    pub fn path_end(&self, path: &EdgePath) -> VertexId {
        path.edges
            .last()
            .map(|&e| self.edge_dst(e))
            .unwrap_or(path.start)
    }

    /// The empty loop at base.
    pub fn loop_unit(&self) -> LoopClass {
        LoopClass {
            path: EdgePath {
                start: self.base,
                edges: Vec::new(),
            },
        }
    }

    pub fn loop_class(&self, edges: Vec<EdgeId>) -> Result<LoopClass> {
        let path = self.path(self.base, edges)?;
        let end = self.path_end(&path);
        if end != self.base {
            return Err(Error::NotALoop {
                base: self.base_name().to_string(),
                start: self.vertex_name(path.start).to_string(),
                end: self.vertex_name(end).to_string(),
            });
        }
        Ok(LoopClass { path })
    }

    pub fn loop_from_edge_names(&self, names: &[&str]) -> Result<LoopClass> {
        let edges = names
            .iter()
            .map(|n| {
                self.find_edge(n)
                    .ok_or_else(|| Error::UnknownEdge((*n).to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.loop_class(edges)
    }

    /// Parses a whitespace-separated list of edge names; `ε` or an empty
    /// string is the unit loop.
    pub fn parse_loop(&self, input: &str) -> Result<LoopClass> {
        let names: Vec<&str> = input.split_whitespace().filter(|t| *t != "ε").collect();
        self.loop_from_edge_names(&names)
    }

    pub fn format_path(&self, path: &EdgePath) -> String {
        if path.edges.is_empty() {
            return "ε".to_string();
        }
        path.edges
            .iter()
            .map(|&e| self.edge_name(e))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_loop(&self, l: &LoopClass) -> String {
        self.format_path(&l.path)
    }

    /// Concatenation of loops; the monoid operation of `ψ₁`.
    pub fn loop_mul(&self, l1: &LoopClass, l2: &LoopClass) -> Result<LoopClass> {
        self.check_membership(&l1.path)?;
        self.check_membership(&l2.path)?;
        if l1.path.start != l2.path.start {
            return Err(Error::BaseMismatch(
                self.vertex_name(l1.path.start).to_string(),
                self.vertex_name(l2.path.start).to_string(),
            ));
        }
        let mut edges = l1.path.edges.clone();
        edges.extend(&l2.path.edges);
        Ok(LoopClass {
            path: EdgePath {
                start: l1.path.start,
                edges,
            },
        })
    }

    /// Reverses the edge order and applies the involution edgewise.
    pub fn loop_dagger(&self, l: &LoopClass) -> LoopClass {
        LoopClass {
            path: self.path_dagger(&l.path),
        }
    }

    /// Dagger of a general path: runs from the old end back to the old start.
    pub fn path_dagger(&self, path: &EdgePath) -> EdgePath {
        EdgePath {
            start: self.path_end(path),
            edges: path.edges.iter().rev().map(|&e| self.partner(e)).collect(),
        }
    }

    /// Crossing counts per codimension-1 stratum; an invariant of the class.
    pub fn crossing_profile(&self, path: &EdgePath) -> CrossingProfile {
        let mut per_edge: BTreeMap<String, usize> = self
            .edges
            .iter()
            .map(|e| (e.name.clone(), 0))
            .collect();
        for &e in &path.edges {
            *per_edge.get_mut(self.edge_name(e)).expect("edge exists") += 1;
        }
        let per_orbit = self
            .edge_orbits()
            .iter()
            .map(|&(canonical, other)| {
                let forward = per_edge[self.edge_name(canonical)];
                if canonical == other {
                    OrbitCrossings {
                        stratum: self.edge_name(canonical).to_string(),
                        total: forward,
                        net: None,
                    }
                } else {
                    let backward = per_edge[self.edge_name(other)];
                    OrbitCrossings {
                        stratum: self.edge_name(canonical).to_string(),
                        total: forward + backward,
                        net: Some(forward as i64 - backward as i64),
                    }
                }
            })
            .collect();
        CrossingProfile {
            per_edge,
            per_orbit,
        }
    }

    /// Vertices reachable from base, following edges in either direction.
    /// Pairs make out-edges sufficient for reachability.
    pub fn reachable_from_base(&self) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![self.base];
        seen[self.base.0] = true;
        while let Some(v) = stack.pop() {
            for &e in self.out_edges(v) {
                let w = self.edge_dst(e);
                if !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

impl fmt::Display for StratGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph with {} vertices, {} edges, base `{}`",
            self.vertices.len(),
            self.edges.len(),
            self.base_name()
        )?;
        for e in &self.edges {
            let marker = if self.edges[e.partner.0].name == e.name {
                " (self-dual)".to_string()
            } else {
                format!(" (inv: {})", self.edges[e.partner.0].name)
            };
            writeln!(
                f,
                "  {}: {} → {}{}",
                e.name, self.vertices[e.src.0], self.vertices[e.dst.0], marker
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn circle_graph_is_valid() {
        let spec = samples::circle().to_spec();
        assert!(spec.violations().is_empty());
    }

    #[test]
    fn non_involution_is_reported() {
        let spec = GraphSpec {
            vertices: vec!["v".into()],
            base: "v".into(),
            edges: vec![
                EdgeSpec::new("a", "v", "v"),
                EdgeSpec::new("b", "v", "v"),
                EdgeSpec::new("c", "v", "v"),
            ],
            involution: [("a", "b"), ("b", "c"), ("c", "a")]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        };
        let violations = spec.violations();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::NotInvolution { .. })));
    }

    #[test]
    fn self_dual_edge_must_be_a_loop() {
        let spec = GraphSpec {
            vertices: vec!["u".into(), "v".into()],
            base: "u".into(),
            edges: vec![EdgeSpec::new("e", "u", "v")],
            involution: [("e".to_string(), "e".to_string())].into(),
        };
        let violations = spec.violations();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::SelfDualNotLoop { .. })));
        // the non-reversal is also caught
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::NotReversing { .. })));
    }

    #[test]
    fn all_violations_are_collected() {
        let spec = GraphSpec {
            vertices: vec!["v".into(), "v".into()],
            base: "w".into(),
            edges: vec![EdgeSpec::new("a", "v", "x")],
            involution: BTreeMap::new(),
        };
        let violations = spec.violations();
        assert!(violations.contains(&Violation::DuplicateVertex("v".into())));
        assert!(violations.contains(&Violation::MissingBase("w".into())));
        assert!(violations.iter().any(|v| matches!(
            v,
            Violation::UnknownEndpoint { .. }
        )));
        assert!(violations.contains(&Violation::MissingInvolution("a".into())));
    }

    #[test]
    fn loop_dagger_reverses_and_involutes() {
        let g = samples::circle();
        let l = g.parse_loop("a a").unwrap();
        assert_eq!(g.format_loop(&g.loop_dagger(&l)), "a_bar a_bar");
        let e = samples::self_dual_loop();
        let sd = e.parse_loop("e").unwrap();
        assert_eq!(e.loop_dagger(&sd), sd);
    }

    #[test]
    fn crossings_cannot_be_cancelled() {
        let g = samples::circle();
        let a = g.parse_loop("a").unwrap();
        let a_bar = g.parse_loop("a_bar").unwrap();
        let prod = g.loop_mul(&a, &a_bar).unwrap();
        assert_eq!(prod.len(), 2);
        assert_ne!(prod, g.loop_unit());
    }

    #[test]
    fn crossing_profile_counts() {
        let g = samples::circle();
        let l = g.parse_loop("a a_bar").unwrap();
        let profile = g.crossing_profile(l.path());
        assert_eq!(profile.per_orbit.len(), 1);
        assert_eq!(profile.per_orbit[0].total, 2);
        assert_eq!(profile.per_orbit[0].net, Some(0));
        let l = g.parse_loop("a a").unwrap();
        let profile = g.crossing_profile(l.path());
        assert_eq!(profile.per_orbit[0].total, 2);
        assert_eq!(profile.per_orbit[0].net, Some(2));
        let unit = g.loop_unit();
        let profile = g.crossing_profile(unit.path());
        assert!(profile.per_orbit.iter().all(|o| o.total == 0));
    }

    #[test]
    fn parse_loop_rejects_bad_input() {
        let g = samples::circle();
        match g.parse_loop("a zz") {
            Err(Error::UnknownEdge(name)) => assert_eq!(name, "zz"),
            other => panic!("expected unknown edge, got {other:?}"),
        }
        let t = samples::triangle();
        assert!(matches!(
            t.parse_loop("ab"),
            Err(Error::NotALoop { .. })
        ));
        assert!(matches!(
            t.parse_loop("bc"),
            Err(Error::NotComposable { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let g = samples::triangle();
        let emitted = g.to_json_string();
        let reparsed = StratGraph::from_json_str(&emitted).unwrap();
        assert_eq!(reparsed.to_json_string(), emitted);
    }
}
