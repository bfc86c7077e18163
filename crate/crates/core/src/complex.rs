//! Weighted 2-complexes.
//!
//! A weighted 2-complex is a finite simple graph — no loops, no multiple
//! edges — together with a set of distinguished *cells*, each bounded by a
//! cycle of length at least 3 through pairwise-distinct vertices along
//! existing edges, and a weight on every element: vertices weigh exactly 1,
//! edges weigh at least 2 or `inf`, cells weigh a finite number at least 2.
//! Distinct cells must have distinct boundaries, so a complex is fully
//! described by its vertex set, its weighted edge set, and its weighted
//! canonical boundary cycles.
//!
//! Two layers are exposed. [`ComplexData`] is the raw, unchecked shape,
//! mirroring the JSON interchange format; [`validate`] reports every axiom
//! violation in it. [`WeightedComplex`] is the checked form the rest of the
//! crate operates on: loops and multiple edges are unrepresentable, and cell
//! boundaries are stored canonically (lexicographically least listing over
//! all rotations of the cycle and of its reversal).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::weight::Weight;

/// An opaque vertex identifier. Ordering is lexicographic on the raw string
/// and is the order used everywhere determinism matters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(s: impl Into<String>) -> VertexId {
        VertexId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> VertexId {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> VertexId {
        VertexId(s)
    }
}

/// An unordered pair of distinct vertices, stored smaller-first. The only
/// constructor rejects loops, so an `EdgeKey` is always a legal edge name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    a: VertexId,
    b: VertexId,
}

impl EdgeKey {
    /// `None` when `u == v`: loops are not representable.
    pub fn new(u: VertexId, v: VertexId) -> Option<EdgeKey> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(EdgeKey { a: u, b: v }),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(EdgeKey { a: v, b: u }),
        }
    }

    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.a, &self.b)
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.a == v || &self.b == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(&self, v: &VertexId) -> Option<&VertexId> {
        if &self.a == v {
            Some(&self.b)
        } else if &self.b == v {
            Some(&self.a)
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// The lexicographically least listing of a cyclic sequence, over all
/// rotations of the sequence and all rotations of its reversal.
pub(crate) fn least_cyclic_listing<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let mut best: Option<Vec<T>> = None;
    for reversed in [false, true] {
        let base: Vec<T> = if reversed {
            seq.iter().rev().cloned().collect()
        } else {
            seq.to_vec()
        };
        for r in 0..base.len() {
            let candidate: Vec<T> = base[r..].iter().chain(&base[..r]).cloned().collect();
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap_or_default()
}

/// A cyclic vertex sequence considered up to rotation and reversal, stored in
/// canonical form: either a single vertex (the degenerate boundary of a
/// vertex, length 0) or a circuit of length at least 3 through
/// pairwise-distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cycle {
    Point(VertexId),
    Circuit(Vec<VertexId>),
}

/// Error from [`Cycle::canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycleError {
    #[error("empty vertex sequence")]
    Empty,
    #[error("cycle of length {0} is too short (needs a single vertex or length >= 3)")]
    TooShort(usize),
    #[error("duplicate vertex {0} in cycle")]
    DuplicateVertex(VertexId),
}

impl Cycle {
    /// Canonicalize a vertex listing: one vertex gives the degenerate cycle
    /// at that vertex; three or more pairwise-distinct vertices give a
    /// circuit in canonical orientation. Length 0 or 2 and repeated vertices
    /// are errors.
    pub fn canonicalize(seq: &[VertexId]) -> Result<Cycle, CycleError> {
        match seq.len() {
            0 => Err(CycleError::Empty),
            1 => Ok(Cycle::Point(seq[0].clone())),
            2 => Err(CycleError::TooShort(2)),
            _ => {
                let mut seen = BTreeSet::new();
                for v in seq {
                    if !seen.insert(v) {
                        return Err(CycleError::DuplicateVertex(v.clone()));
                    }
                }
                Ok(Cycle::Circuit(least_cyclic_listing(seq)))
            }
        }
    }

    /// Length of the cycle: 0 for a point, the number of vertices otherwise.
    pub fn len(&self) -> usize {
        match self {
            Cycle::Point(_) => 0,
            Cycle::Circuit(vs) => vs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The vertices of the cycle in canonical order (a single vertex for a
    /// point).
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            Cycle::Point(v) => std::slice::from_ref(v),
            Cycle::Circuit(vs) => vs,
        }
    }

    /// The circuit listing, or `None` for a point.
    pub fn circuit(&self) -> Option<&[VertexId]> {
        match self {
            Cycle::Point(_) => None,
            Cycle::Circuit(vs) => Some(vs),
        }
    }

    /// The edges walked by a circuit, in order (empty for a point).
    pub fn edges(&self) -> Vec<EdgeKey> {
        match self {
            Cycle::Point(_) => Vec::new(),
            Cycle::Circuit(vs) => (0..vs.len())
                .map(|i| {
                    EdgeKey::new(vs[i].clone(), vs[(i + 1) % vs.len()].clone())
                        .expect("circuit vertices are distinct")
                })
                .collect(),
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vertices().iter().map(VertexId::as_str).collect();
        write!(f, "({})", names.join(","))
    }
}

/// One raw cell: a boundary listing and a weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCell {
    pub boundary: Vec<String>,
    pub weight: Weight,
}

/// Raw, unchecked complex data. This struct is also the JSON document shape:
/// `{"vertices":[...],"edges":[["u","v",w],...],"cells":[{"boundary":[...],"weight":w},...]}`
/// with `"inf"` for infinite weights.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexData {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, Weight)>,
    pub cells: Vec<RawCell>,
}

fn listing(boundary: &[String]) -> String {
    format!("({})", boundary.join(","))
}

/// A single axiom violation found in raw complex data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("edge {0}-{1} is a loop")]
    Loop(String, String),
    #[error("multiple edges between {0} and {1}")]
    MultipleEdge(String, String),
    #[error("edge {0}-{1} references unknown vertex {2}")]
    UnknownEndpoint(String, String, String),
    #[error("edge {0}-{1} has weight {2}; edge weights must be at least 2 or inf")]
    BadEdgeWeight(String, String, Weight),
    #[error("cell {0} has weight {1}; cell weights must be finite and at least 2")]
    BadCellWeight(String, Weight),
    #[error("cell {0} has boundary too short (length {1}, needs at least 3)")]
    BoundaryTooShort(String, usize),
    #[error("cell {0} repeats vertex {1} in its boundary")]
    BoundaryRepeatsVertex(String, String),
    #[error("cell {0} references unknown vertex {1}")]
    UnknownBoundaryVertex(String, String),
    #[error("cell {0} walks missing edge {1}-{2}")]
    MissingBoundaryEdge(String, String, String),
    #[error("cells {0} and {1} share the same boundary")]
    DuplicateCellBoundary(String, String),
}

/// Check raw data against every axiom; an empty report means the data
/// describes a weighted 2-complex.
pub fn validate(data: &ComplexData) -> Vec<Violation> {
    let mut violations = Vec::new();

    let mut vertices: BTreeSet<&str> = BTreeSet::new();
    for v in &data.vertices {
        if !vertices.insert(v.as_str()) {
            violations.push(Violation::DuplicateVertex(v.clone()));
        }
    }

    let mut edge_pairs: BTreeSet<(&str, &str)> = BTreeSet::new();
    for (u, v, w) in &data.edges {
        if u == v {
            violations.push(Violation::Loop(u.clone(), v.clone()));
            continue;
        }
        for end in [u, v] {
            if !vertices.contains(end.as_str()) {
                violations.push(Violation::UnknownEndpoint(
                    u.clone(),
                    v.clone(),
                    end.clone(),
                ));
            }
        }
        let pair = if u < v {
            (u.as_str(), v.as_str())
        } else {
            (v.as_str(), u.as_str())
        };
        if !edge_pairs.insert(pair) {
            violations.push(Violation::MultipleEdge(
                pair.0.to_owned(),
                pair.1.to_owned(),
            ));
        }
        if let Weight::Finite(n) = w {
            if *n < 2 {
                violations.push(Violation::BadEdgeWeight(u.clone(), v.clone(), *w));
            }
        }
    }

    let mut boundaries: BTreeMap<Vec<&str>, &RawCell> = BTreeMap::new();
    for cell in &data.cells {
        let name = listing(&cell.boundary);
        match cell.weight {
            Weight::Finite(n) if n >= 2 => {}
            w => violations.push(Violation::BadCellWeight(name.clone(), w)),
        }
        if cell.boundary.len() < 3 {
            violations.push(Violation::BoundaryTooShort(
                name.clone(),
                cell.boundary.len(),
            ));
            continue;
        }
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut distinct = true;
        for v in &cell.boundary {
            if !seen.insert(v.as_str()) {
                violations.push(Violation::BoundaryRepeatsVertex(name.clone(), v.clone()));
                distinct = false;
            }
            if !vertices.contains(v.as_str()) {
                violations.push(Violation::UnknownBoundaryVertex(name.clone(), v.clone()));
            }
        }
        for i in 0..cell.boundary.len() {
            let u = &cell.boundary[i];
            let v = &cell.boundary[(i + 1) % cell.boundary.len()];
            if u == v {
                continue; // already reported as a repeated vertex
            }
            let pair = if u < v {
                (u.as_str(), v.as_str())
            } else {
                (v.as_str(), u.as_str())
            };
            if !edge_pairs.contains(&pair) {
                violations.push(Violation::MissingBoundaryEdge(
                    name.clone(),
                    u.clone(),
                    v.clone(),
                ));
            }
        }
        if distinct {
            let canonical =
                least_cyclic_listing(&cell.boundary.iter().map(String::as_str).collect::<Vec<_>>());
            if let Some(prev) = boundaries.insert(canonical, cell) {
                violations.push(Violation::DuplicateCellBoundary(
                    listing(&prev.boundary),
                    name.clone(),
                ));
            }
        }
    }

    violations
}

/// A checked weighted 2-complex. Construction always validates, so every
/// value of this type satisfies the axioms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedComplex {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeKey, Weight>,
    cells: BTreeMap<Cycle, Weight>,
}

impl WeightedComplex {
    /// The empty complex.
    pub fn empty() -> WeightedComplex {
        WeightedComplex::default()
    }

    /// Validate raw data and build the checked complex.
    pub fn from_data(data: &ComplexData) -> Result<WeightedComplex, Vec<Violation>> {
        let violations = validate(data);
        if !violations.is_empty() {
            return Err(violations);
        }
        let vertices: BTreeSet<VertexId> = data
            .vertices
            .iter()
            .map(|v| VertexId::new(v.clone()))
            .collect();
        let edges: BTreeMap<EdgeKey, Weight> = data
            .edges
            .iter()
            .map(|(u, v, w)| {
                let key = EdgeKey::new(VertexId::new(u.clone()), VertexId::new(v.clone()))
                    .expect("loops rejected by validation");
                (key, *w)
            })
            .collect();
        let cells: BTreeMap<Cycle, Weight> = data
            .cells
            .iter()
            .map(|cell| {
                let boundary: Vec<VertexId> = cell
                    .boundary
                    .iter()
                    .map(|v| VertexId::new(v.clone()))
                    .collect();
                let cycle = Cycle::canonicalize(&boundary)
                    .expect("degenerate boundaries rejected by validation");
                (cycle, cell.weight)
            })
            .collect();
        Ok(WeightedComplex {
            vertices,
            edges,
            cells,
        })
    }

    /// Build from already-typed parts, checking every axiom that the types
    /// do not enforce (endpoint/boundary membership, weight ranges, edge
    /// existence under boundaries, duplicate edges or boundaries).
    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (EdgeKey, Weight)>,
        cells: impl IntoIterator<Item = (Cycle, Weight)>,
    ) -> Result<WeightedComplex, Vec<Violation>> {
        let mut violations = Vec::new();
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();

        let mut edge_map: BTreeMap<EdgeKey, Weight> = BTreeMap::new();
        for (key, w) in edges {
            let (u, v) = key.endpoints();
            for end in [u, v] {
                if !vertices.contains(end) {
                    violations.push(Violation::UnknownEndpoint(
                        u.to_string(),
                        v.to_string(),
                        end.to_string(),
                    ));
                }
            }
            if let Weight::Finite(n) = w {
                if n < 2 {
                    violations.push(Violation::BadEdgeWeight(u.to_string(), v.to_string(), w));
                }
            }
            if edge_map.insert(key.clone(), w).is_some() {
                violations.push(Violation::MultipleEdge(u.to_string(), v.to_string()));
            }
        }

        let mut cell_map: BTreeMap<Cycle, Weight> = BTreeMap::new();
        for (cycle, w) in cells {
            let name = cycle.to_string();
            match w {
                Weight::Finite(n) if n >= 2 => {}
                w => violations.push(Violation::BadCellWeight(name.clone(), w)),
            }
            if cycle.len() < 3 {
                violations.push(Violation::BoundaryTooShort(name.clone(), cycle.len()));
                continue;
            }
            for v in cycle.vertices() {
                if !vertices.contains(v) {
                    violations.push(Violation::UnknownBoundaryVertex(
                        name.clone(),
                        v.to_string(),
                    ));
                }
            }
            for edge in cycle.edges() {
                if !edge_map.contains_key(&edge) {
                    let (u, v) = edge.endpoints();
                    violations.push(Violation::MissingBoundaryEdge(
                        name.clone(),
                        u.to_string(),
                        v.to_string(),
                    ));
                }
            }
            if cell_map.insert(cycle, w).is_some() {
                violations.push(Violation::DuplicateCellBoundary(name.clone(), name));
            }
        }

        if violations.is_empty() {
            Ok(WeightedComplex {
                vertices,
                edges: edge_map,
                cells: cell_map,
            })
        } else {
            Err(violations)
        }
    }

    /// Export to raw data in canonical order (sorted vertices, sorted edge
    /// pairs, canonical sorted boundaries). Equal complexes export
    /// identically.
    pub fn to_data(&self) -> ComplexData {
        ComplexData {
            vertices: self
                .vertices
                .iter()
                .map(|v| v.as_str().to_owned())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(k, w)| {
                    let (u, v) = k.endpoints();
                    (u.as_str().to_owned(), v.as_str().to_owned(), *w)
                })
                .collect(),
            cells: self
                .cells
                .iter()
                .map(|(cycle, w)| RawCell {
                    boundary: cycle
                        .vertices()
                        .iter()
                        .map(|v| v.as_str().to_owned())
                        .collect(),
                    weight: *w,
                })
                .collect(),
        }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeMap<EdgeKey, Weight> {
        &self.edges
    }

    pub fn cells(&self) -> &BTreeMap<Cycle, Weight> {
        &self.cells
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn edge_weight(&self, u: &VertexId, v: &VertexId) -> Option<Weight> {
        let key = EdgeKey::new(u.clone(), v.clone())?;
        self.edges.get(&key).copied()
    }

    pub fn cell_weight(&self, boundary: &Cycle) -> Option<Weight> {
        self.cells.get(boundary).copied()
    }

    /// `true` when the complex has no edges and no cells.
    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty() && self.cells.is_empty()
    }

    /// Rebuild the complex with every vertex renamed through `f`. Fails if
    /// the renaming merges vertices or otherwise breaks an axiom.
    pub fn rename_vertices(
        &self,
        f: impl Fn(&VertexId) -> VertexId,
    ) -> Result<WeightedComplex, Vec<Violation>> {
        let vertices: Vec<VertexId> = self.vertices.iter().map(&f).collect();
        let mut edges = Vec::new();
        for (key, w) in &self.edges {
            let (u, v) = key.endpoints();
            let key = EdgeKey::new(f(u), f(v))
                .ok_or_else(|| vec![Violation::Loop(f(u).to_string(), f(v).to_string())])?;
            edges.push((key, *w));
        }
        let mut cells = Vec::new();
        for (cycle, w) in &self.cells {
            let mapped: Vec<VertexId> = cycle.vertices().iter().map(&f).collect();
            let cycle = Cycle::canonicalize(&mapped)
                .map_err(|e| vec![Violation::BoundaryTooShort(format!("{e}"), mapped.len())])?;
            cells.push((cycle, *w));
        }
        WeightedComplex::from_parts(vertices, edges, cells)
    }
}
