//! JSON documents for structures, their graphs and colorings.
//!
//! ```text
//! {
//!   "order": 4,
//!   "points": ["apex", "r1c1", ...],
//!   "inclined_lines": [["apex", "r1c1", "r2c1", "r3c1"], ...],
//!   "horizontal_lines": [["r1c1", "r1c2", "r1c3", "r1c4"], ...],
//!   "graph": {"mode": "path", "vertex_count": 13, "edges": [["apex", "r1c1"], ...]},
//!   "coloring": {"strategy": "paper", "palette_size": 5,
//!                "palette": ["red", ...], "assignment": {"apex": 0, ...}},
//!   "verification": {"proper": true, "row_periodic": true}
//! }
//! ```
//!
//! `graph`, `coloring` and `verification` are optional. Keys are emitted in
//! the order above and points in vertex order, so output is byte-stable.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::coloring::{color_name, Coloring};
use crate::structure::{AdjacencyMode, Graph, PointId, TriangularStructure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.path, self.message)
    }
}

impl std::error::Error for JsonError {}

fn schema(path: impl Into<String>, message: impl Into<String>) -> JsonError {
    JsonError {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    order: u32,
    points: Vec<PointId>,
    inclined_lines: Vec<Vec<PointId>>,
    horizontal_lines: Vec<Vec<PointId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<GraphDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<ColoringDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    verification: Option<Verification>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    mode: String,
    vertex_count: usize,
    edges: Vec<(PointId, PointId)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    strategy: Option<String>,
    palette_size: u32,
    palette: Vec<String>,
    assignment: IndexMap<PointId, u32>,
}

/// Results of checking a coloring, carried along in emitted documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verification {
    pub proper: bool,
    pub row_periodic: bool,
}

/// Everything a document can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    pub structure: TriangularStructure,
    pub graph: Option<Graph>,
    pub coloring: Option<Coloring>,
    pub strategy: Option<String>,
    pub verification: Option<Verification>,
}

impl StructureDocument {
    pub fn new(structure: TriangularStructure) -> Self {
        StructureDocument {
            structure,
            graph: None,
            coloring: None,
            strategy: None,
            verification: None,
        }
    }

    /// Pretty-printed JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let s = &self.structure;
        let graph = self.graph.as_ref().map(|g| GraphDoc {
            mode: g.mode().unwrap_or_default().as_str().to_owned(),
            vertex_count: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| (s.points()[u], s.points()[v])).collect(),
        });
        let coloring = self.coloring.as_ref().map(|c| ColoringDoc {
            strategy: self.strategy.clone(),
            palette_size: c.palette_size(),
            palette: (0..c.palette_size()).map(|k| color_name(k).into_owned()).collect(),
            assignment: s.points().iter().copied().zip(c.colors().iter().copied()).collect(),
        });
        let doc = Document {
            order: s.order(),
            points: s.points().to_vec(),
            inclined_lines: s.inclined_lines().to_vec(),
            horizontal_lines: s.horizontal_lines().to_vec(),
            graph,
            coloring,
            verification: self.verification,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
        out.push('\n');
        out
    }

    /// Parses and checks a document: the points and lines must be exactly
    /// those of the stated order, graph edges must match the stated mode and
    /// the coloring must cover every point with contiguous indices.
    pub fn from_json(text: &str) -> Result<Self, JsonError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: Document = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            schema(path, e.into_inner().to_string())
        })?;

        let structure = TriangularStructure::build(doc.order).map_err(|e| schema("order", e.to_string()))?;
        check_points("points", &doc.points, structure.points())?;
        check_lines("inclined_lines", &doc.inclined_lines, structure.inclined_lines())?;
        check_lines("horizontal_lines", &doc.horizontal_lines, structure.horizontal_lines())?;

        let graph = doc.graph.map(|g| parse_graph(&structure, g)).transpose()?;
        let (coloring, strategy) = match doc.coloring {
            Some(c) => {
                let strategy = c.strategy.clone();
                (Some(parse_coloring(&structure, c)?), strategy)
            }
            None => (None, None),
        };
        Ok(StructureDocument {
            structure,
            graph,
            coloring,
            strategy,
            verification: doc.verification,
        })
    }
}

fn check_points(path: &str, got: &[PointId], want: &[PointId]) -> Result<(), JsonError> {
    if got.len() != want.len() {
        return Err(schema(
            path,
            format!("expected {} points, found {}", want.len(), got.len()),
        ));
    }
    match got.iter().zip(want).position(|(g, w)| g != w) {
        Some(i) => Err(schema(
            format!("{path}[{i}]"),
            format!("expected {}, found {}", want[i], got[i]),
        )),
        None => Ok(()),
    }
}

fn check_lines(path: &str, got: &[Vec<PointId>], want: &[Vec<PointId>]) -> Result<(), JsonError> {
    if got.len() != want.len() {
        return Err(schema(
            path,
            format!("expected {} lines, found {}", want.len(), got.len()),
        ));
    }
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        check_points(&format!("{path}[{i}]"), g, w)?;
    }
    Ok(())
}

fn parse_graph(s: &TriangularStructure, g: GraphDoc) -> Result<Graph, JsonError> {
    let mode: AdjacencyMode = g.mode.parse().map_err(|e: String| schema("graph.mode", e))?;
    if g.vertex_count != s.points().len() {
        return Err(schema(
            "graph.vertex_count",
            format!("expected {}, found {}", s.points().len(), g.vertex_count),
        ));
    }
    let derived = s.to_graph(mode);
    if g.edges.len() != derived.edge_count() {
        return Err(schema(
            "graph.edges",
            format!(
                "expected {} edges for {} adjacency, found {}",
                derived.edge_count(),
                g.mode,
                g.edges.len()
            ),
        ));
    }
    for (i, ((a, b), &(u, v))) in g.edges.iter().zip(derived.edges()).enumerate() {
        let (pu, pv) = (s.points()[u], s.points()[v]);
        if (*a, *b) != (pu, pv) {
            return Err(schema(
                format!("graph.edges[{i}]"),
                format!("expected [{pu}, {pv}], found [{a}, {b}]"),
            ));
        }
    }
    Ok(derived)
}

fn parse_coloring(s: &TriangularStructure, c: ColoringDoc) -> Result<Coloring, JsonError> {
    let keys: Vec<PointId> = c.assignment.keys().copied().collect();
    check_points("coloring.assignment", &keys, s.points())?;
    let coloring = Coloring::new(c.assignment.values().copied().collect())
        .map_err(|e| schema("coloring.assignment", e.to_string()))?;
    if c.palette_size != coloring.palette_size() {
        return Err(schema(
            "coloring.palette_size",
            format!("expected {}, found {}", coloring.palette_size(), c.palette_size),
        ));
    }
    let palette: Vec<String> = (0..coloring.palette_size())
        .map(|k| color_name(k).into_owned())
        .collect();
    if c.palette != palette {
        return Err(schema(
            "coloring.palette",
            format!("expected {palette:?}, found {:?}", c.palette),
        ));
    }
    Ok(coloring)
}
