//! Morphisms of weighted 2-complexes.
//!
//! A morphism sends vertices to vertices, edges to edges or collapses them
//! to vertices, and cells to cells or collapses them to vertices, commuting
//! with endpoints and boundaries and shrinking weights divisibly: the weight
//! of an image divides the weight of its preimage. The whole morphism is
//! determined by its vertex map — an edge follows its endpoints, and a cell
//! follows its boundary walk, which after cyclically dropping collapsed
//! steps must either vanish to a point or traverse the boundary of a target
//! cell uniformly one or more times. [`Morphism::extend_from_vertex_map`] is
//! therefore the only constructor; edge and cell maps are always derived,
//! never supplied.

use std::collections::BTreeMap;

use crate::complex::{Cycle, EdgeKey, VertexId, WeightedComplex};
use crate::util::divisors_ascending;
use crate::weight::Weight;

/// Where an edge goes: onto a target edge, or collapsed to a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeImage {
    Collapsed(VertexId),
    Edge(EdgeKey),
}

/// Where a cell goes: onto a target cell, or collapsed to a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellImage {
    Collapsed(VertexId),
    Cell(Cycle),
}

/// A validated morphism between two complexes. Equality compares source,
/// target, and the vertex map (the derived maps are determined by those).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: WeightedComplex,
    target: WeightedComplex,
    vertex_map: BTreeMap<VertexId, VertexId>,
    edge_map: BTreeMap<EdgeKey, EdgeImage>,
    cell_map: BTreeMap<Cycle, CellImage>,
}

/// Why a vertex map fails to extend to a morphism (or two morphisms fail to
/// compose or enumerate).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("vertex {0} has no image")]
    UnmappedVertex(VertexId),
    #[error("map names {0}, which is not a source vertex")]
    UnknownSourceVertex(VertexId),
    #[error("vertex {0} maps to {1}, which is not a target vertex")]
    ImageNotAVertex(VertexId, VertexId),
    #[error("edge {edge} maps onto {u}-{v}, which is not a target edge")]
    MissingTargetEdge {
        edge: EdgeKey,
        u: VertexId,
        v: VertexId,
    },
    #[error(
        "edge {edge}: target weight {target_weight} does not divide source weight {source_weight}"
    )]
    EdgeWeightIndivisible {
        edge: EdgeKey,
        source_weight: Weight,
        target_weight: Weight,
    },
    #[error("cell {boundary}: image walk reduces to length {len}")]
    CellImageTooShort { boundary: Cycle, len: usize },
    #[error("cell {boundary}: image walk revisits {vertex} without closing up")]
    CellImagePinched { boundary: Cycle, vertex: VertexId },
    #[error("cell {boundary} maps onto {image}, which is not a target cell")]
    MissingTargetCell { boundary: Cycle, image: Cycle },
    #[error("cell {boundary}: target weight {target_weight} does not divide source weight {source_weight}")]
    CellWeightIndivisible {
        boundary: Cycle,
        source_weight: Weight,
        target_weight: Weight,
    },
    #[error("morphisms do not compose: inner target differs from outer source")]
    NotComposable,
    #[error("vertex-map search space of size {count} exceeds bound {bound}")]
    EnumerationBoundExceeded { count: u128, bound: u64 },
}

/// Cyclically deduplicate a closed walk: collapse runs of equal adjacent
/// entries, treating the listing as circular. A constant walk reduces to a
/// single entry.
pub(crate) fn cyclic_dedup(walk: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = Vec::with_capacity(walk.len());
    for v in walk {
        if out.last() != Some(v) {
            out.push(v.clone());
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Shape of a reduced closed walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum WalkShape {
    /// The walk stays at one vertex.
    Point(VertexId),
    /// The walk traverses a simple cycle (`base`, length >= 3) exactly
    /// `times` times.
    Covered { base: Vec<VertexId>, times: usize },
    /// The walk's minimal period is 1 or 2 entries: no cycle that short.
    TooShort(usize),
    /// The walk revisits a vertex without being a uniform cover.
    Pinched(VertexId),
}

/// Classify a cyclically-reduced closed walk by its minimal cyclic period.
pub(crate) fn classify_closed_walk(reduced: &[VertexId]) -> WalkShape {
    match reduced.len() {
        0 => unreachable!("reduced walks of nonempty boundaries are nonempty"),
        1 => WalkShape::Point(reduced[0].clone()),
        2 => WalkShape::TooShort(2),
        n => {
            for p in divisors_ascending(n) {
                if (0..n).all(|i| reduced[i] == reduced[(i + p) % n]) {
                    if p < 3 {
                        return WalkShape::TooShort(p);
                    }
                    let base = &reduced[..p];
                    let mut seen = std::collections::BTreeSet::new();
                    for v in base {
                        if !seen.insert(v) {
                            return WalkShape::Pinched(v.clone());
                        }
                    }
                    return WalkShape::Covered {
                        base: base.to_vec(),
                        times: n / p,
                    };
                }
            }
            unreachable!("n is always a cyclic period of a length-n listing")
        }
    }
}

impl Morphism {
    /// Extend a vertex map to a full morphism, deriving the edge and cell
    /// maps and checking every compatibility and divisibility condition.
    pub fn extend_from_vertex_map(
        source: &WeightedComplex,
        target: &WeightedComplex,
        vertex_map: &BTreeMap<VertexId, VertexId>,
    ) -> Result<Morphism, MorphismError> {
        for v in source.vertices() {
            let image = vertex_map
                .get(v)
                .ok_or_else(|| MorphismError::UnmappedVertex(v.clone()))?;
            if !target.has_vertex(image) {
                return Err(MorphismError::ImageNotAVertex(v.clone(), image.clone()));
            }
        }
        for v in vertex_map.keys() {
            if !source.has_vertex(v) {
                return Err(MorphismError::UnknownSourceVertex(v.clone()));
            }
        }

        let mut edge_map: BTreeMap<EdgeKey, EdgeImage> = BTreeMap::new();
        for (edge, &weight) in source.edges() {
            let (u, v) = edge.endpoints();
            let (iu, iv) = (&vertex_map[u], &vertex_map[v]);
            if iu == iv {
                edge_map.insert(edge.clone(), EdgeImage::Collapsed(iu.clone()));
                continue;
            }
            let key = EdgeKey::new(iu.clone(), iv.clone()).expect("distinct images");
            match target.edges().get(&key) {
                None => {
                    return Err(MorphismError::MissingTargetEdge {
                        edge: edge.clone(),
                        u: iu.clone(),
                        v: iv.clone(),
                    })
                }
                Some(&tw) => {
                    if !tw.divides(weight) {
                        return Err(MorphismError::EdgeWeightIndivisible {
                            edge: edge.clone(),
                            source_weight: weight,
                            target_weight: tw,
                        });
                    }
                    edge_map.insert(edge.clone(), EdgeImage::Edge(key));
                }
            }
        }

        let mut cell_map: BTreeMap<Cycle, CellImage> = BTreeMap::new();
        for (cycle, &weight) in source.cells() {
            let walk: Vec<VertexId> = cycle
                .vertices()
                .iter()
                .map(|v| vertex_map[v].clone())
                .collect();
            let reduced = cyclic_dedup(&walk);
            match classify_closed_walk(&reduced) {
                WalkShape::Point(v) => {
                    cell_map.insert(cycle.clone(), CellImage::Collapsed(v));
                }
                WalkShape::TooShort(len) => {
                    return Err(MorphismError::CellImageTooShort {
                        boundary: cycle.clone(),
                        len,
                    })
                }
                WalkShape::Pinched(v) => {
                    return Err(MorphismError::CellImagePinched {
                        boundary: cycle.clone(),
                        vertex: v,
                    })
                }
                WalkShape::Covered { base, .. } => {
                    let image = Cycle::canonicalize(&base).expect("simple cycle of length >= 3");
                    match target.cells().get(&image) {
                        None => {
                            return Err(MorphismError::MissingTargetCell {
                                boundary: cycle.clone(),
                                image,
                            })
                        }
                        Some(&tw) => {
                            if !tw.divides(weight) {
                                return Err(MorphismError::CellWeightIndivisible {
                                    boundary: cycle.clone(),
                                    source_weight: weight,
                                    target_weight: tw,
                                });
                            }
                            cell_map.insert(cycle.clone(), CellImage::Cell(image));
                        }
                    }
                }
            }
        }

        let vertex_map: BTreeMap<VertexId, VertexId> = source
            .vertices()
            .iter()
            .map(|v| (v.clone(), vertex_map[v].clone()))
            .collect();
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            vertex_map,
            edge_map,
            cell_map,
        })
    }

    /// The identity morphism on a complex.
    pub fn identity(c: &WeightedComplex) -> Morphism {
        let id_map: BTreeMap<VertexId, VertexId> = c
            .vertices()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        Morphism::extend_from_vertex_map(c, c, &id_map).expect("identity is always a morphism")
    }

    pub fn source(&self) -> &WeightedComplex {
        &self.source
    }

    pub fn target(&self) -> &WeightedComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.vertex_map
    }

    pub fn vertex_image(&self, v: &VertexId) -> Option<&VertexId> {
        self.vertex_map.get(v)
    }

    pub fn edge_image(&self, e: &EdgeKey) -> Option<&EdgeImage> {
        self.edge_map.get(e)
    }

    pub fn cell_image(&self, c: &Cycle) -> Option<&CellImage> {
        self.cell_map.get(c)
    }

    /// Same source and same target.
    pub fn is_parallel_to(&self, other: &Morphism) -> bool {
        self.source == other.source && self.target == other.target
    }

    /// Re-check every axiom from scratch, independently of the extension
    /// logic: totality, endpoint commutation on both darts of every edge,
    /// boundary commutation on every cell (by alignment search rather than
    /// period analysis), and weight divisibility. Returns human-readable
    /// descriptions of any failures; a valid morphism returns none.
    pub fn axiom_violations(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for v in self.source.vertices() {
            match self.vertex_map.get(v) {
                None => problems.push(format!("vertex {v} has no image")),
                Some(w) if !self.target.has_vertex(w) => {
                    problems.push(format!("vertex {v} maps outside the target"))
                }
                _ => {}
            }
        }
        for (edge, &weight) in self.source.edges() {
            let (u, v) = edge.endpoints();
            let (iu, iv) = match (self.vertex_map.get(u), self.vertex_map.get(v)) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            match self.edge_map.get(edge) {
                None => problems.push(format!("edge {edge} has no image")),
                Some(EdgeImage::Collapsed(w)) => {
                    // Both darts must land on the same vertex.
                    if iu != w || iv != w {
                        problems.push(format!(
                            "edge {edge} collapses to {w} but its endpoints map to {iu}, {iv}"
                        ));
                    }
                }
                Some(EdgeImage::Edge(key)) => {
                    // The dart u->v must map to the dart iu->iv, so the image
                    // edge must join exactly those two vertices.
                    if iu == iv || !key.contains(iu) || key.other(iu) != Some(iv) {
                        problems.push(format!(
                            "edge {edge} maps onto {key} but its endpoints map to {iu}, {iv}"
                        ));
                    }
                    match self.target.edges().get(key) {
                        None => problems.push(format!("edge {edge} maps onto a non-edge {key}")),
                        Some(&tw) => {
                            if !tw.divides(weight) {
                                problems.push(format!(
                                    "edge {edge}: image weight {tw} does not divide {weight}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        for (cycle, &weight) in self.source.cells() {
            let walk: Vec<&VertexId> = cycle
                .vertices()
                .iter()
                .filter_map(|v| self.vertex_map.get(v))
                .collect();
            if walk.len() != cycle.len() {
                continue; // already reported as unmapped vertices
            }
            match self.cell_map.get(cycle) {
                None => problems.push(format!("cell {cycle} has no image")),
                Some(CellImage::Collapsed(w)) => {
                    if walk.iter().any(|v| *v != w) {
                        problems.push(format!(
                            "cell {cycle} collapses to {w} but its boundary walk moves"
                        ));
                    }
                }
                Some(CellImage::Cell(image)) => {
                    match self.target.cells().get(image) {
                        None => problems.push(format!("cell {cycle} maps onto a non-cell {image}")),
                        Some(&tw) => {
                            if !tw.divides(weight) {
                                problems.push(format!(
                                    "cell {cycle}: image weight {tw} does not divide {weight}"
                                ));
                            }
                        }
                    }
                    if !walk_traverses(&walk, image) {
                        problems.push(format!(
                            "cell {cycle}: boundary walk does not traverse {image}"
                        ));
                    }
                }
            }
        }
        problems
    }
}

/// Does the mapped boundary walk traverse `image` uniformly some whole number
/// of times? Checked by explicit alignment search: reduce the walk, then try
/// to match it against the image listing repeated from every start in both
/// directions.
fn walk_traverses(walk: &[&VertexId], image: &Cycle) -> bool {
    let owned: Vec<VertexId> = walk.iter().map(|v| (*v).clone()).collect();
    let reduced = cyclic_dedup(&owned);
    let base = match image.circuit() {
        Some(b) => b,
        None => return false,
    };
    if !reduced.len().is_multiple_of(base.len()) || reduced.is_empty() {
        return false;
    }
    let times = reduced.len() / base.len();
    for start in 0..base.len() {
        for dir in [1isize, -1] {
            let candidate: Vec<&VertexId> = (0..base.len())
                .map(|i| {
                    let idx = (start as isize + dir * i as isize).rem_euclid(base.len() as isize);
                    &base[idx as usize]
                })
                .collect();
            let repeated: Vec<&VertexId> = candidate
                .iter()
                .cycle()
                .take(base.len() * times)
                .copied()
                .collect();
            if repeated.iter().zip(&reduced).all(|(a, b)| *a == b) {
                return true;
            }
        }
    }
    false
}

/// Compose two morphisms: `compose(g, f)` is `g` after `f` and requires
/// `f`'s target to equal `g`'s source.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, MorphismError> {
    if f.target != g.source {
        return Err(MorphismError::NotComposable);
    }
    let vertex_map: BTreeMap<VertexId, VertexId> = f
        .vertex_map
        .iter()
        .map(|(v, w)| (v.clone(), g.vertex_map[w].clone()))
        .collect();
    Morphism::extend_from_vertex_map(&f.source, &g.target, &vertex_map)
}

/// Default bound on the vertex-map search space for [`morphisms_between`].
pub const DEFAULT_HOM_BOUND: u64 = 1_000_000;

/// Enumerate every morphism from `source` to `target`, in lexicographic
/// order of vertex maps. Errors when the search space `|V2|^|V1|` exceeds
/// `bound`.
pub fn morphisms_between(
    source: &WeightedComplex,
    target: &WeightedComplex,
    bound: u64,
) -> Result<Vec<Morphism>, MorphismError> {
    let domain: Vec<&VertexId> = source.vertices().iter().collect();
    let codomain: Vec<&VertexId> = target.vertices().iter().collect();
    if domain.is_empty() {
        let empty = BTreeMap::new();
        return Ok(vec![Morphism::extend_from_vertex_map(
            source, target, &empty,
        )
        .expect("empty source always maps")]);
    }
    if codomain.is_empty() {
        return Ok(Vec::new());
    }
    let count = (codomain.len() as u128)
        .checked_pow(domain.len() as u32)
        .unwrap_or(u128::MAX);
    if count > bound as u128 {
        return Err(MorphismError::EnumerationBoundExceeded { count, bound });
    }
    let dims = vec![codomain.len(); domain.len()];
    let mut found = Vec::new();
    for assignment in crate::util::mixed_radix(&dims) {
        let vertex_map: BTreeMap<VertexId, VertexId> = domain
            .iter()
            .zip(&assignment)
            .map(|(v, &i)| ((*v).clone(), codomain[i].clone()))
            .collect();
        if let Ok(m) = Morphism::extend_from_vertex_map(source, target, &vertex_map) {
            found.push(m);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ComplexData, RawCell};

    fn v(s: &str) -> VertexId {
        VertexId::new(s)
    }

    fn vmap(pairs: &[(&str, &str)]) -> BTreeMap<VertexId, VertexId> {
        pairs.iter().map(|(a, b)| (v(a), v(b))).collect()
    }

    fn complex(
        vertices: &[&str],
        edges: &[(&str, &str, Weight)],
        cells: &[(&[&str], u64)],
    ) -> WeightedComplex {
        let data = ComplexData {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(u, w2, w)| (u.to_string(), w2.to_string(), *w))
                .collect(),
            cells: cells
                .iter()
                .map(|(boundary, w)| RawCell {
                    boundary: boundary.iter().map(|s| s.to_string()).collect(),
                    weight: Weight::Finite(*w),
                })
                .collect(),
        };
        WeightedComplex::from_data(&data).unwrap()
    }

    fn dihedral_like(w: u64) -> WeightedComplex {
        complex(&["u", "v"], &[("u", "v", Weight::Finite(w))], &[])
    }

    fn triangle_with_cell() -> WeightedComplex {
        complex(
            &["a", "b", "c"],
            &[
                ("a", "b", Weight::Finite(2)),
                ("b", "c", Weight::Finite(2)),
                ("a", "c", Weight::Finite(2)),
            ],
            &[(&["a", "b", "c"], 2)],
        )
    }

    #[test]
    fn identity_is_valid_and_clean() {
        let c = triangle_with_cell();
        let id = Morphism::identity(&c);
        assert!(id.axiom_violations().is_empty());
        assert_eq!(
            id.cell_image(&Cycle::canonicalize(&[v("a"), v("b"), v("c")]).unwrap()),
            Some(&CellImage::Cell(
                Cycle::canonicalize(&[v("a"), v("b"), v("c")]).unwrap()
            ))
        );
    }

    #[test]
    fn edge_collapse_is_allowed() {
        let src = complex(&["a", "b"], &[("a", "b", Weight::Finite(3))], &[]);
        let dst = complex(&["p"], &[], &[]);
        let m =
            Morphism::extend_from_vertex_map(&src, &dst, &vmap(&[("a", "p"), ("b", "p")])).unwrap();
        assert_eq!(
            m.edge_image(&EdgeKey::new(v("a"), v("b")).unwrap()),
            Some(&EdgeImage::Collapsed(v("p")))
        );
        assert!(m.axiom_violations().is_empty());
    }

    #[test]
    fn weight_divisibility_points_from_image_to_source() {
        let d6 = dihedral_like(6);
        let d3 = dihedral_like(3);
        let id_map = vmap(&[("u", "u"), ("v", "v")]);
        assert!(Morphism::extend_from_vertex_map(&d6, &d3, &id_map).is_ok());
        let err = Morphism::extend_from_vertex_map(&d3, &d6, &id_map).unwrap_err();
        assert!(matches!(err, MorphismError::EdgeWeightIndivisible { .. }));
    }

    #[test]
    fn missing_target_edge_is_an_error() {
        let src = complex(&["a", "b"], &[("a", "b", Weight::Finite(2))], &[]);
        let dst = complex(&["x", "y"], &[], &[]);
        let err = Morphism::extend_from_vertex_map(&src, &dst, &vmap(&[("a", "x"), ("b", "y")]))
            .unwrap_err();
        assert!(matches!(err, MorphismError::MissingTargetEdge { .. }));
    }

    #[test]
    fn totality_and_membership_are_checked() {
        let src = complex(&["a"], &[], &[]);
        let dst = complex(&["x"], &[], &[]);
        assert!(matches!(
            Morphism::extend_from_vertex_map(&src, &dst, &vmap(&[])),
            Err(MorphismError::UnmappedVertex(_))
        ));
        assert!(matches!(
            Morphism::extend_from_vertex_map(&src, &dst, &vmap(&[("a", "z")])),
            Err(MorphismError::ImageNotAVertex(_, _))
        ));
        assert!(matches!(
            Morphism::extend_from_vertex_map(&src, &dst, &vmap(&[("a", "x"), ("q", "x")])),
            Err(MorphismError::UnknownSourceVertex(_))
        ));
    }

    #[test]
    fn cell_collapses_to_a_point() {
        let src = triangle_with_cell();
        let dst = complex(&["p"], &[], &[]);
        let m = Morphism::extend_from_vertex_map(
            &src,
            &dst,
            &vmap(&[("a", "p"), ("b", "p"), ("c", "p")]),
        )
        .unwrap();
        let cycle = Cycle::canonicalize(&[v("a"), v("b"), v("c")]).unwrap();
        assert_eq!(m.cell_image(&cycle), Some(&CellImage::Collapsed(v("p"))));
        assert!(m.axiom_violations().is_empty());
    }

    #[test]
    fn rotation_automorphism_preserves_the_cell() {
        let c = triangle_with_cell();
        let rot =
            Morphism::extend_from_vertex_map(&c, &c, &vmap(&[("a", "b"), ("b", "c"), ("c", "a")]))
                .unwrap();
        let cycle = Cycle::canonicalize(&[v("a"), v("b"), v("c")]).unwrap();
        assert_eq!(
            rot.cell_image(&cycle),
            Some(&CellImage::Cell(cycle.clone()))
        );
        assert!(rot.axiom_violations().is_empty());
    }

    fn hexagon_with_cell() -> WeightedComplex {
        complex(
            &["h1", "h2", "h3", "h4", "h5", "h6"],
            &[
                ("h1", "h2", Weight::Finite(2)),
                ("h2", "h3", Weight::Finite(2)),
                ("h3", "h4", Weight::Finite(2)),
                ("h4", "h5", Weight::Finite(2)),
                ("h5", "h6", Weight::Finite(2)),
                ("h1", "h6", Weight::Finite(2)),
            ],
            &[(&["h1", "h2", "h3", "h4", "h5", "h6"], 2)],
        )
    }

    #[test]
    fn uniform_double_cover_of_a_target_cell_is_accepted() {
        let hexagon = hexagon_with_cell();
        let triangle = triangle_with_cell();
        let m = Morphism::extend_from_vertex_map(
            &hexagon,
            &triangle,
            &vmap(&[
                ("h1", "a"),
                ("h2", "b"),
                ("h3", "c"),
                ("h4", "a"),
                ("h5", "b"),
                ("h6", "c"),
            ]),
        )
        .unwrap();
        let hex_cycle = Cycle::canonicalize(&["h1", "h2", "h3", "h4", "h5", "h6"].map(v)).unwrap();
        let tri_cycle = Cycle::canonicalize(&[v("a"), v("b"), v("c")]).unwrap();
        assert_eq!(m.cell_image(&hex_cycle), Some(&CellImage::Cell(tri_cycle)));
        assert!(m.axiom_violations().is_empty());
    }

    fn square_with_cell() -> WeightedComplex {
        complex(
            &["q1", "q2", "q3", "q4"],
            &[
                ("q1", "q2", Weight::Finite(2)),
                ("q2", "q3", Weight::Finite(2)),
                ("q3", "q4", Weight::Finite(2)),
                ("q1", "q4", Weight::Finite(2)),
            ],
            &[(&["q1", "q2", "q3", "q4"], 2)],
        )
    }

    #[test]
    fn alternating_image_walk_is_too_short() {
        // q1,q3 -> x and q2,q4 -> y gives the walk (x,y,x,y): period 2.
        let square = square_with_cell();
        let k2 = complex(&["x", "y"], &[("x", "y", Weight::Finite(2))], &[]);
        let err = Morphism::extend_from_vertex_map(
            &square,
            &k2,
            &vmap(&[("q1", "x"), ("q2", "y"), ("q3", "x"), ("q4", "y")]),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            MorphismError::CellImageTooShort { len: 2, .. }
        ));
    }

    #[test]
    fn pinched_image_walk_is_an_error() {
        // Walk (x,y,x,z): minimal period 4 but x repeats.
        let square = square_with_cell();
        let star = complex(
            &["x", "y", "z"],
            &[("x", "y", Weight::Finite(2)), ("x", "z", Weight::Finite(2))],
            &[],
        );
        let err = Morphism::extend_from_vertex_map(
            &square,
            &star,
            &vmap(&[("q1", "x"), ("q2", "y"), ("q3", "x"), ("q4", "z")]),
        )
        .unwrap_err();
        assert!(matches!(err, MorphismError::CellImagePinched { .. }));
    }

    #[test]
    fn missing_target_cell_is_an_error() {
        let src = triangle_with_cell();
        let dst = complex(
            &["a", "b", "c"],
            &[
                ("a", "b", Weight::Finite(2)),
                ("b", "c", Weight::Finite(2)),
                ("a", "c", Weight::Finite(2)),
            ],
            &[],
        );
        let err = Morphism::extend_from_vertex_map(
            &src,
            &dst,
            &vmap(&[("a", "a"), ("b", "b"), ("c", "c")]),
        )
        .unwrap_err();
        assert!(matches!(err, MorphismError::MissingTargetCell { .. }));
    }

    #[test]
    fn composition_chains_weight_divisions() {
        let d12 = dihedral_like(12);
        let d6 = dihedral_like(6);
        let d3 = dihedral_like(3);
        let id_map = vmap(&[("u", "u"), ("v", "v")]);
        let f = Morphism::extend_from_vertex_map(&d12, &d6, &id_map).unwrap();
        let g = Morphism::extend_from_vertex_map(&d6, &d3, &id_map).unwrap();
        let gf = compose(&g, &f).unwrap();
        assert_eq!(gf.source(), &d12);
        assert_eq!(gf.target(), &d3);
        assert!(gf.axiom_violations().is_empty());
        assert!(compose(&f, &g).is_err());
    }

    #[test]
    fn identities_are_neutral_for_composition() {
        let d6 = dihedral_like(6);
        let d3 = dihedral_like(3);
        let f =
            Morphism::extend_from_vertex_map(&d6, &d3, &vmap(&[("u", "u"), ("v", "v")])).unwrap();
        assert_eq!(compose(&Morphism::identity(&d3), &f).unwrap(), f);
        assert_eq!(compose(&f, &Morphism::identity(&d6)).unwrap(), f);
    }

    #[test]
    fn hom_set_of_points_is_a_single_morphism() {
        let p = complex(&["v"], &[], &[]);
        let homs = morphisms_between(&p, &p, DEFAULT_HOM_BOUND).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0], Morphism::identity(&p));
    }

    #[test]
    fn hom_set_from_discrete_pair_to_an_edge_has_four_maps() {
        let free = complex(&["x", "y"], &[], &[]);
        let k2 = complex(&["p", "q"], &[("p", "q", Weight::Finite(2))], &[]);
        let homs = morphisms_between(&free, &k2, DEFAULT_HOM_BOUND).unwrap();
        assert_eq!(homs.len(), 4);
    }

    #[test]
    fn hom_set_between_dihedral_complexes_keeps_only_collapses() {
        // From weight 3 to weight 6 the edge cannot map onto the edge
        // (6 does not divide 3), so only the two collapsing maps remain.
        let d3 = dihedral_like(3);
        let d6 = dihedral_like(6);
        let homs = morphisms_between(&d3, &d6, DEFAULT_HOM_BOUND).unwrap();
        let maps: Vec<&BTreeMap<VertexId, VertexId>> =
            homs.iter().map(Morphism::vertex_map).collect();
        assert_eq!(
            maps,
            vec![
                &vmap(&[("u", "u"), ("v", "u")]),
                &vmap(&[("u", "v"), ("v", "v")])
            ]
        );
    }

    #[test]
    fn hom_set_of_the_triangle_has_six_symmetries_and_three_collapses() {
        let t = triangle_with_cell();
        let homs = morphisms_between(&t, &t, DEFAULT_HOM_BOUND).unwrap();
        assert_eq!(homs.len(), 9);
        let constant = homs
            .iter()
            .filter(|m| {
                m.vertex_map()
                    .values()
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
                    == 1
            })
            .count();
        assert_eq!(constant, 3);
        for m in &homs {
            assert!(m.axiom_violations().is_empty());
        }
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let c = complex(&["a", "b", "c", "d", "e"], &[], &[]);
        let err = morphisms_between(&c, &c, 100).unwrap_err();
        assert_eq!(
            err,
            MorphismError::EnumerationBoundExceeded {
                count: 3125,
                bound: 100
            }
        );
    }

    #[test]
    fn empty_source_has_exactly_one_morphism_anywhere() {
        let empty = WeightedComplex::empty();
        let t = triangle_with_cell();
        assert_eq!(morphisms_between(&empty, &t, 10).unwrap().len(), 1);
        assert_eq!(morphisms_between(&empty, &empty, 10).unwrap().len(), 1);
        assert_eq!(morphisms_between(&t, &empty, 10).unwrap().len(), 0);
    }

    #[test]
    fn enumerated_morphisms_are_distinct_by_vertex_map() {
        let t = triangle_with_cell();
        let homs = morphisms_between(&t, &t, DEFAULT_HOM_BOUND).unwrap();
        let distinct: std::collections::BTreeSet<_> =
            homs.iter().map(|m| m.vertex_map().clone()).collect();
        assert_eq!(distinct.len(), homs.len());
    }

    #[test]
    fn composition_is_associative_over_small_hom_sets() {
        let d12 = dihedral_like(12);
        let d6 = dihedral_like(6);
        let d3 = dihedral_like(3);
        let fs = morphisms_between(&d12, &d6, DEFAULT_HOM_BOUND).unwrap();
        let gs = morphisms_between(&d6, &d3, DEFAULT_HOM_BOUND).unwrap();
        let hs = morphisms_between(&d3, &d3, DEFAULT_HOM_BOUND).unwrap();
        for f in &fs {
            for g in &gs {
                for h in &hs {
                    let left = compose(h, &compose(g, f).unwrap()).unwrap();
                    let right = compose(&compose(h, g).unwrap(), f).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn walk_classification_cases() {
        let walk = |names: &[&str]| names.iter().map(|s| v(s)).collect::<Vec<_>>();
        assert_eq!(
            classify_closed_walk(&cyclic_dedup(&walk(&["x", "x", "x"]))),
            WalkShape::Point(v("x"))
        );
        assert_eq!(
            classify_closed_walk(&walk(&["x", "y", "z"])),
            WalkShape::Covered {
                base: walk(&["x", "y", "z"]),
                times: 1
            }
        );
        assert_eq!(
            classify_closed_walk(&walk(&["x", "y", "z", "x", "y", "z"])),
            WalkShape::Covered {
                base: walk(&["x", "y", "z"]),
                times: 2
            }
        );
        assert_eq!(
            classify_closed_walk(&walk(&["x", "y", "x", "y"])),
            WalkShape::TooShort(2)
        );
        assert_eq!(
            classify_closed_walk(&walk(&["x", "y", "x", "z"])),
            WalkShape::Pinched(v("x"))
        );
        // Cyclic wrap-around duplicates reduce before classification.
        assert_eq!(
            cyclic_dedup(&walk(&["x", "y", "y", "x"])),
            walk(&["x", "y"])
        );
    }
}
