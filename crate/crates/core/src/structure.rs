//! The order-n triangular closed-path structure.
//!
//! An apex sits above an `(n-1) x n` grid. Inclined line `c` runs from the
//! apex down column `c`; horizontal line `r` is grid row `r`. Rows are
//! numbered from the apex downwards, columns left to right, both from 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the structure.
///
/// The derived ordering (apex first, then row-major) is the vertex order
/// used by every graph derived from a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointId {
    Apex,
    RowCol { row: u32, col: u32 },
}

impl PointId {
    pub fn at(row: u32, col: u32) -> Self {
        PointId::RowCol { row, col }
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointId::Apex => f.write_str("apex"),
            PointId::RowCol { row, col } => write!(f, "r{row}c{col}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid point label {0:?}, expected \"apex\" or \"r<row>c<col>\"")]
pub struct ParsePointError(pub String);

impl FromStr for PointId {
    type Err = ParsePointError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "apex" {
            return Ok(PointId::Apex);
        }
        let bad = || ParsePointError(s.to_owned());
        let rest = s.strip_prefix('r').ok_or_else(bad)?;
        let (row, col) = rest.split_once('c').ok_or_else(bad)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(row) || !digits(col) {
            return Err(bad());
        }
        let row = row.parse().map_err(|_| bad())?;
        let col = col.parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(PointId::RowCol { row, col })
    }
}

impl Serialize for PointId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PointId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Identifies one line of the structure. Indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineId {
    Inclined(u32),
    Horizontal(u32),
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineId::Inclined(i) => write!(f, "inclined {i}"),
            LineId::Horizontal(r) => write!(f, "horizontal {r}"),
        }
    }
}

/// Which collinear points count as adjacent when deriving a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AdjacencyMode {
    /// Only consecutive points along a line are adjacent.
    #[default]
    PathAlongLines,
    /// Every pair of points sharing a line is adjacent.
    CliquePerLine,
}

impl AdjacencyMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AdjacencyMode::PathAlongLines => "path",
            AdjacencyMode::CliquePerLine => "clique",
        }
    }
}

impl FromStr for AdjacencyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(AdjacencyMode::PathAlongLines),
            "clique" => Ok(AdjacencyMode::CliquePerLine),
            other => Err(format!("unknown adjacency mode {other:?} (expected path or clique)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularStructure {
    order: u32,
    points: Vec<PointId>,
    inclined_lines: Vec<Vec<PointId>>,
    horizontal_lines: Vec<Vec<PointId>>,
}

impl TriangularStructure {
    /// Builds the structure of order `n`, which has `n(n-1) + 1` points.
    pub fn build(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        let mut points = Vec::with_capacity(point_count(n));
        points.push(PointId::Apex);
        for row in 1..n {
            points.extend((1..=n).map(|col| PointId::at(row, col)));
        }
        let inclined_lines = (1..=n)
            .map(|col| {
                std::iter::once(PointId::Apex)
                    .chain((1..n).map(|row| PointId::at(row, col)))
                    .collect()
            })
            .collect();
        let horizontal_lines = (1..n)
            .map(|row| (1..=n).map(|col| PointId::at(row, col)).collect())
            .collect();
        Ok(TriangularStructure {
            order: n,
            points,
            inclined_lines,
            horizontal_lines,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Points in vertex order: apex, then rows top to bottom, left to right.
    pub fn points(&self) -> &[PointId] {
        &self.points
    }

    pub fn inclined_lines(&self) -> &[Vec<PointId>] {
        &self.inclined_lines
    }

    pub fn horizontal_lines(&self) -> &[Vec<PointId>] {
        &self.horizontal_lines
    }

    /// All lines, inclined first.
    pub fn lines(&self) -> impl Iterator<Item = (LineId, &[PointId])> + '_ {
        let inclined = self
            .inclined_lines
            .iter()
            .enumerate()
            .map(|(i, l)| (LineId::Inclined(i as u32 + 1), l.as_slice()));
        let horizontal = self
            .horizontal_lines
            .iter()
            .enumerate()
            .map(|(r, l)| (LineId::Horizontal(r as u32 + 1), l.as_slice()));
        inclined.chain(horizontal)
    }

    pub fn line(&self, id: LineId) -> Option<&[PointId]> {
        match id {
            LineId::Inclined(i) => self.inclined_lines.get((i as usize).checked_sub(1)?),
            LineId::Horizontal(r) => self.horizontal_lines.get((r as usize).checked_sub(1)?),
        }
        .map(Vec::as_slice)
    }

    pub fn contains(&self, p: PointId) -> bool {
        match p {
            PointId::Apex => true,
            PointId::RowCol { row, col } => (1..self.order).contains(&row) && (1..=self.order).contains(&col),
        }
    }

    /// Vertex index of `p` in every graph derived from this structure.
    pub fn vertex_index(&self, p: PointId) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        Some(match p {
            PointId::Apex => 0,
            PointId::RowCol { row, col } => 1 + (row as usize - 1) * self.order as usize + (col as usize - 1),
        })
    }

    /// Lines incident to `p`. The apex lies on all inclined lines; a grid
    /// point lies on its column's inclined line and its row's horizontal line.
    pub fn lines_through(&self, p: PointId) -> Result<Vec<LineId>> {
        if !self.contains(p) {
            return Err(Error::UnknownPoint(p, self.order));
        }
        Ok(match p {
            PointId::Apex => (1..=self.order).map(LineId::Inclined).collect(),
            PointId::RowCol { row, col } => vec![LineId::Inclined(col), LineId::Horizontal(row)],
        })
    }

    /// Ordered points of horizontal line `row` (1-based).
    pub fn row(&self, row: u32) -> Option<&[PointId]> {
        self.line(LineId::Horizontal(row))
    }

    pub fn to_graph(&self, mode: AdjacencyMode) -> Graph {
        let mut edges = BTreeSet::new();
        for (_, line) in self.lines() {
            let idx: Vec<usize> = line.iter().map(|&p| self.vertex_index(p).expect("own point")).collect();
            match mode {
                AdjacencyMode::PathAlongLines => {
                    for w in idx.windows(2) {
                        edges.insert(ordered(w[0], w[1]));
                    }
                }
                AdjacencyMode::CliquePerLine => {
                    for (i, &u) in idx.iter().enumerate() {
                        for &v in &idx[i + 1..] {
                            edges.insert(ordered(u, v));
                        }
                    }
                }
            }
        }
        let mut graph = Graph::from_sorted_edges(self.points.len(), edges.into_iter().collect());
        graph.labels = Some(self.points.clone());
        graph.mode = Some(mode);
        graph
    }
}

pub fn point_count(n: u32) -> usize {
    n as usize * (n as usize).saturating_sub(1) + 1
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<PointId>>,
    mode: Option<AdjacencyMode>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are normalized to `(min, max)`
    /// and duplicates collapse; self-loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u, v));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::EdgeOutOfRange { u, v, vertex_count });
            }
            set.insert(ordered(u, v));
        }
        Ok(Self::from_sorted_edges(vertex_count, set.into_iter().collect()))
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        Self::from_sorted_edges(vertex_count, Vec::new())
    }

    fn from_sorted_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            adjacency,
            labels: None,
            mode: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Point labels, present when the graph was derived from a structure.
    pub fn labels(&self) -> Option<&[PointId]> {
        self.labels.as_deref()
    }

    pub fn mode(&self) -> Option<AdjacencyMode> {
        self.mode
    }
}
