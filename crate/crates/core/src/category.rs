//! Categorical constructions on weighted 2-complexes.
//!
//! Disjoint unions (coproducts), strong products, equalizers, and
//! coequalizers, each packaged as a [`ConstructionResult`] carrying the
//! constructed object together with its structural legs (injections,
//! projections, the equalizing embedding, or the coequalizing projection).
//! [`factor_through`] computes the mediating morphism for a compatible cone
//! or cocone and reports precisely why an incompatible one fails. The module
//! also carries the free/underlying adjunction between plain vertex sets and
//! complexes: a discrete complex is free on its vertices, and morphisms out
//! of a free complex are in bijection with set maps into the target's
//! vertices.
//!
//! Naming is positional and injective: disjoint unions prefix every vertex
//! with its part index (`"0:a"`), products name vertices by coordinate
//! tuples (`"(a,p)"`, with `\`-escaping of commas and backslashes inside
//! coordinates).

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Cycle, EdgeKey, VertexId, WeightedComplex};
use crate::morphism::{compose, Morphism, MorphismError};
use crate::quotient::{quotient, QuotientError, QuotientMode, VertexPartition};
use crate::util::{lcm_usize, mixed_radix};
use crate::weight::{weight_lcm, Weight};

/// Which construction produced a [`ConstructionResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    Coproduct,
    Product,
    Equalizer,
    Coequalizer,
}

/// A constructed object with its structural legs: injections into a
/// coproduct, projections out of a product, the embedding of an equalizer,
/// or the projection of a coequalizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub kind: ConstructionKind,
    pub object: WeightedComplex,
    pub legs: Vec<Morphism>,
    /// The defining parallel pair, for (co)equalizers.
    pair: Option<(Morphism, Morphism)>,
}

impl ConstructionResult {
    /// The parallel pair an equalizer or coequalizer was built from.
    pub fn defining_pair(&self) -> Option<(&Morphism, &Morphism)> {
        self.pair.as_ref().map(|(a, b)| (a, b))
    }
}

/// Why a construction or factorization fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("product of an empty family is not defined")]
    EmptyProduct,
    #[error("morphisms are not parallel")]
    NotParallel,
    #[error("product cells collide: tuple {tuple} repeats boundary {boundary}")]
    ProductCellCollision { tuple: String, boundary: String },
    #[error("expected {expected} legs, got {got}")]
    WrongLegCount { expected: usize, got: usize },
    #[error("leg {index} has mismatched endpoints")]
    LegEndpointMismatch { index: usize },
    #[error("legs do not share a common {0}")]
    LegsNotConcurrent(&'static str),
    #[error("cannot infer the cone target from zero legs")]
    EmptyCone,
    #[error("morphism does not equalize the pair")]
    DoesNotEqualize,
    #[error("morphism does not coequalize the pair")]
    DoesNotCoequalize,
    #[error("legs inconsistent: {0}")]
    LegsInconsistent(MorphismError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("source of the transpose is not a discrete complex")]
    NotDiscrete,
    #[error("construction produced invalid data: {0}")]
    Internal(String),
}

fn part_vertex(index: usize, v: &VertexId) -> VertexId {
    VertexId::new(format!("{index}:{v}"))
}

/// Disjoint union of any family of complexes, with injections as legs.
/// Every element is relabeled with its part index so parts never clash.
pub fn disjoint_union(parts: &[WeightedComplex]) -> ConstructionResult {
    let mut vertices: Vec<VertexId> = Vec::new();
    let mut edges: Vec<(EdgeKey, Weight)> = Vec::new();
    let mut cells: Vec<(Cycle, Weight)> = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        vertices.extend(part.vertices().iter().map(|v| part_vertex(i, v)));
        for (key, &w) in part.edges() {
            let (u, v) = key.endpoints();
            let key = EdgeKey::new(part_vertex(i, u), part_vertex(i, v))
                .expect("prefixing preserves distinctness");
            edges.push((key, w));
        }
        for (cycle, &w) in part.cells() {
            let listing: Vec<VertexId> =
                cycle.vertices().iter().map(|v| part_vertex(i, v)).collect();
            let cycle = Cycle::canonicalize(&listing).expect("prefixing preserves cycles");
            cells.push((cycle, w));
        }
    }
    let object = WeightedComplex::from_parts(vertices, edges, cells)
        .expect("a union of disjoint complexes is valid");
    let legs: Vec<Morphism> = parts
        .iter()
        .enumerate()
        .map(|(i, part)| {
            let vmap: BTreeMap<VertexId, VertexId> = part
                .vertices()
                .iter()
                .map(|v| (v.clone(), part_vertex(i, v)))
                .collect();
            Morphism::extend_from_vertex_map(part, &object, &vmap)
                .expect("injections are morphisms")
        })
        .collect();
    ConstructionResult {
        kind: ConstructionKind::Coproduct,
        object,
        legs,
        pair: None,
    }
}

fn escape_coordinate(s: &str) -> String {
    s.replace('\\', "\\\\").replace(',', "\\,")
}

fn tuple_vertex(coords: &[&VertexId]) -> VertexId {
    let inner: Vec<String> = coords
        .iter()
        .map(|v| escape_coordinate(v.as_str()))
        .collect();
    VertexId::new(format!("({})", inner.join(",")))
}

/// Either a vertex or an edge of a factor, for building product edges.
enum Skeleton<'a> {
    Vertex(&'a VertexId),
    Edge(&'a EdgeKey, Weight),
}

/// Either a vertex or a cell of a factor, for building product cells.
enum Face<'a> {
    Vertex(&'a VertexId),
    Cell(&'a Cycle, Weight),
}

/// Strong product of a nonempty family, with projections as legs.
///
/// Vertices are coordinate tuples. An edge arises from every tuple of
/// per-factor choices "stay at a vertex / move along an edge" with at least
/// one move: its endpoints pair the chosen darts (orientation classes up to
/// the global flip), and its weight is the LCM of the moving weights. A cell
/// arises from every tuple of choices "stay at a vertex / sweep a cell" with
/// at least one cell: its boundary steps all chosen boundaries in lockstep
/// from their canonical starts and directions (length = LCM of the boundary
/// lengths), and its weight is the LCM of the cell weights.
pub fn strong_product(parts: &[WeightedComplex]) -> Result<ConstructionResult, CategoryError> {
    if parts.is_empty() {
        return Err(CategoryError::EmptyProduct);
    }
    let vertex_pools: Vec<Vec<&VertexId>> = parts
        .iter()
        .map(|p| p.vertices().iter().collect())
        .collect();

    let mut vertices: Vec<VertexId> = Vec::new();
    for combo in mixed_radix(&vertex_pools.iter().map(Vec::len).collect::<Vec<_>>()) {
        let coords: Vec<&VertexId> = combo
            .iter()
            .enumerate()
            .map(|(i, &j)| vertex_pools[i][j])
            .collect();
        vertices.push(tuple_vertex(&coords));
    }

    let skeleton_pools: Vec<Vec<Skeleton>> = parts
        .iter()
        .map(|p| {
            let mut pool: Vec<Skeleton> = p.vertices().iter().map(Skeleton::Vertex).collect();
            pool.extend(p.edges().iter().map(|(k, &w)| Skeleton::Edge(k, w)));
            pool
        })
        .collect();
    let mut edges: BTreeMap<EdgeKey, Weight> = BTreeMap::new();
    for combo in mixed_radix(&skeleton_pools.iter().map(Vec::len).collect::<Vec<_>>()) {
        let choice: Vec<&Skeleton> = combo
            .iter()
            .enumerate()
            .map(|(i, &j)| &skeleton_pools[i][j])
            .collect();
        let moving: Vec<usize> = choice
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c, Skeleton::Edge(_, _)))
            .map(|(i, _)| i)
            .collect();
        if moving.is_empty() {
            continue;
        }
        let weight = weight_lcm(choice.iter().filter_map(|c| match c {
            Skeleton::Edge(_, w) => Some(*w),
            Skeleton::Vertex(_) => None,
        }))
        .expect("at least one moving coordinate");
        // Orientations of the moving coordinates, modulo the global flip:
        // the first moving coordinate is pinned forward.
        for orientation in mixed_radix(&vec![2; moving.len() - 1]) {
            let mut heads: Vec<&VertexId> = Vec::with_capacity(choice.len());
            let mut tails: Vec<&VertexId> = Vec::with_capacity(choice.len());
            let mut flip_of = BTreeMap::new();
            for (rank, &i) in moving.iter().enumerate() {
                let flipped = rank > 0 && orientation[rank - 1] == 1;
                flip_of.insert(i, flipped);
            }
            for (i, c) in choice.iter().enumerate() {
                match c {
                    Skeleton::Vertex(v) => {
                        heads.push(v);
                        tails.push(v);
                    }
                    Skeleton::Edge(key, _) => {
                        let (a, b) = key.endpoints();
                        if flip_of[&i] {
                            heads.push(b);
                            tails.push(a);
                        } else {
                            heads.push(a);
                            tails.push(b);
                        }
                    }
                }
            }
            let key = EdgeKey::new(tuple_vertex(&heads), tuple_vertex(&tails))
                .expect("a moving coordinate separates the endpoints");
            if edges.insert(key.clone(), weight).is_some() {
                return Err(CategoryError::Internal(format!(
                    "product edge {key} arose twice"
                )));
            }
        }
    }

    let face_pools: Vec<Vec<Face>> = parts
        .iter()
        .map(|p| {
            let mut pool: Vec<Face> = p.vertices().iter().map(Face::Vertex).collect();
            pool.extend(p.cells().iter().map(|(c, &w)| Face::Cell(c, w)));
            pool
        })
        .collect();
    let mut cells: BTreeMap<Cycle, Weight> = BTreeMap::new();
    for combo in mixed_radix(&face_pools.iter().map(Vec::len).collect::<Vec<_>>()) {
        let choice: Vec<&Face> = combo
            .iter()
            .enumerate()
            .map(|(i, &j)| &face_pools[i][j])
            .collect();
        let lengths: Vec<usize> = choice
            .iter()
            .filter_map(|c| match c {
                Face::Cell(cycle, _) => Some(cycle.len()),
                Face::Vertex(_) => None,
            })
            .collect();
        if lengths.is_empty() {
            continue;
        }
        let total = lengths.iter().copied().fold(1, lcm_usize);
        let walk: Vec<VertexId> = (0..total)
            .map(|step| {
                let coords: Vec<&VertexId> = choice
                    .iter()
                    .map(|c| match c {
                        Face::Vertex(v) => *v,
                        Face::Cell(cycle, _) => {
                            let listing = cycle.circuit().expect("cells are circuits");
                            &listing[step % listing.len()]
                        }
                    })
                    .collect();
                tuple_vertex(&coords)
            })
            .collect();
        let boundary = Cycle::canonicalize(&walk).map_err(|e| {
            CategoryError::Internal(format!("synchronized walk is not a cycle: {e}"))
        })?;
        let weight = weight_lcm(choice.iter().filter_map(|c| match c {
            Face::Cell(_, w) => Some(*w),
            Face::Vertex(_) => None,
        }))
        .expect("at least one cell coordinate");
        let tuple_desc = choice
            .iter()
            .map(|c| match c {
                Face::Vertex(v) => v.to_string(),
                Face::Cell(cycle, _) => cycle.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" x ");
        if cells.insert(boundary.clone(), weight).is_some() {
            return Err(CategoryError::ProductCellCollision {
                tuple: tuple_desc,
                boundary: boundary.to_string(),
            });
        }
    }

    let object = WeightedComplex::from_parts(vertices, edges, cells)
        .map_err(|v| CategoryError::Internal(format!("product data invalid: {v:?}")))?;

    let mut legs = Vec::with_capacity(parts.len());
    for (j, part) in parts.iter().enumerate() {
        let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for combo in mixed_radix(&vertex_pools.iter().map(Vec::len).collect::<Vec<_>>()) {
            let coords: Vec<&VertexId> = combo
                .iter()
                .enumerate()
                .map(|(i, &k)| vertex_pools[i][k])
                .collect();
            vmap.insert(tuple_vertex(&coords), coords[j].clone());
        }
        let leg = Morphism::extend_from_vertex_map(&object, part, &vmap)
            .map_err(|e| CategoryError::Internal(format!("projection {j} failed: {e}")))?;
        legs.push(leg);
    }
    Ok(ConstructionResult {
        kind: ConstructionKind::Product,
        object,
        legs,
        pair: None,
    })
}

/// Equalizer of a parallel pair: the sub-complex of the common source
/// induced by the vertices on which the two morphisms agree, with its
/// embedding as the single leg.
pub fn equalizer(phi: &Morphism, psi: &Morphism) -> Result<ConstructionResult, CategoryError> {
    if !phi.is_parallel_to(psi) {
        return Err(CategoryError::NotParallel);
    }
    let source = phi.source();
    let agreeing: BTreeSet<VertexId> = source
        .vertices()
        .iter()
        .filter(|v| phi.vertex_image(v) == psi.vertex_image(v))
        .cloned()
        .collect();
    let edges: Vec<(EdgeKey, Weight)> = source
        .edges()
        .iter()
        .filter(|(k, _)| {
            let (u, v) = k.endpoints();
            agreeing.contains(u) && agreeing.contains(v)
        })
        .map(|(k, &w)| (k.clone(), w))
        .collect();
    let cells: Vec<(Cycle, Weight)> = source
        .cells()
        .iter()
        .filter(|(c, _)| c.vertices().iter().all(|v| agreeing.contains(v)))
        .map(|(c, &w)| (c.clone(), w))
        .collect();
    let object = WeightedComplex::from_parts(agreeing.clone(), edges, cells)
        .expect("an induced sub-complex is valid");
    let vmap: BTreeMap<VertexId, VertexId> =
        agreeing.iter().map(|v| (v.clone(), v.clone())).collect();
    let embedding = Morphism::extend_from_vertex_map(&object, source, &vmap)
        .expect("sub-complex inclusion is a morphism");
    Ok(ConstructionResult {
        kind: ConstructionKind::Equalizer,
        object,
        legs: vec![embedding],
        pair: Some((phi.clone(), psi.clone())),
    })
}

/// Coequalizer of a parallel pair: the quotient of the common target by the
/// closure of the relation identifying the two images of every source
/// vertex, with the projection as the single leg.
pub fn coequalizer(
    phi: &Morphism,
    psi: &Morphism,
    mode: QuotientMode,
) -> Result<ConstructionResult, CategoryError> {
    if !phi.is_parallel_to(psi) {
        return Err(CategoryError::NotParallel);
    }
    let target = phi.target();
    let pairs: Vec<(VertexId, VertexId)> = phi
        .source()
        .vertices()
        .iter()
        .map(|v| {
            (
                phi.vertex_image(v).expect("total").clone(),
                psi.vertex_image(v).expect("total").clone(),
            )
        })
        .collect();
    let partition =
        VertexPartition::from_pairs(target.vertices(), pairs).expect("images lie in the target");
    let (object, projection) = quotient(target, &partition, mode)?;
    Ok(ConstructionResult {
        kind: ConstructionKind::Coequalizer,
        object,
        legs: vec![projection],
        pair: Some((phi.clone(), psi.clone())),
    })
}

/// Compute the mediating morphism through a construction for a compatible
/// cone or cocone `sigma` (one morphism for (co)equalizers, one per part for
/// (co)products). The mediator is unique whenever it exists; incompatible
/// cones are rejected with a reason.
pub fn factor_through(
    construction: &ConstructionResult,
    sigma: &[Morphism],
) -> Result<Morphism, CategoryError> {
    match construction.kind {
        ConstructionKind::Equalizer => {
            let [s] = expect_legs::<1>(sigma)?;
            let (phi, psi) = construction
                .defining_pair()
                .expect("equalizers carry their pair");
            if s.target() != phi.source() {
                return Err(CategoryError::LegEndpointMismatch { index: 0 });
            }
            let left = compose(phi, s).expect("endpoints align");
            let right = compose(psi, s).expect("endpoints align");
            if left != right {
                return Err(CategoryError::DoesNotEqualize);
            }
            Morphism::extend_from_vertex_map(s.source(), &construction.object, s.vertex_map())
                .map_err(|e| {
                    CategoryError::Internal(format!("equalizing cone failed to factor: {e}"))
                })
        }
        ConstructionKind::Coequalizer => {
            let [s] = expect_legs::<1>(sigma)?;
            let (phi, psi) = construction
                .defining_pair()
                .expect("coequalizers carry their pair");
            if s.source() != phi.target() {
                return Err(CategoryError::LegEndpointMismatch { index: 0 });
            }
            let left = compose(s, phi).expect("endpoints align");
            let right = compose(s, psi).expect("endpoints align");
            if left != right {
                return Err(CategoryError::DoesNotCoequalize);
            }
            let vmap: BTreeMap<VertexId, VertexId> = construction
                .object
                .vertices()
                .iter()
                .map(|class| {
                    (
                        class.clone(),
                        s.vertex_image(class)
                            .expect("classes are target vertices")
                            .clone(),
                    )
                })
                .collect();
            Morphism::extend_from_vertex_map(&construction.object, s.target(), &vmap).map_err(|e| {
                CategoryError::Internal(format!("coequalizing cocone failed to factor: {e}"))
            })
        }
        ConstructionKind::Coproduct => {
            if sigma.len() != construction.legs.len() {
                return Err(CategoryError::WrongLegCount {
                    expected: construction.legs.len(),
                    got: sigma.len(),
                });
            }
            let target = match sigma.first() {
                None => return Err(CategoryError::EmptyCone),
                Some(first) => first.target().clone(),
            };
            let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
            for (j, (s, leg)) in sigma.iter().zip(&construction.legs).enumerate() {
                if s.source() != leg.source() {
                    return Err(CategoryError::LegEndpointMismatch { index: j });
                }
                if s.target() != &target {
                    return Err(CategoryError::LegsNotConcurrent("target"));
                }
                for v in s.source().vertices() {
                    let in_union = leg.vertex_image(v).expect("total").clone();
                    let out = s.vertex_image(v).expect("total").clone();
                    vmap.insert(in_union, out);
                }
            }
            Morphism::extend_from_vertex_map(&construction.object, &target, &vmap).map_err(|e| {
                CategoryError::Internal(format!("cocone failed to factor through the union: {e}"))
            })
        }
        ConstructionKind::Product => {
            if sigma.len() != construction.legs.len() {
                return Err(CategoryError::WrongLegCount {
                    expected: construction.legs.len(),
                    got: sigma.len(),
                });
            }
            let source = match sigma.first() {
                None => return Err(CategoryError::EmptyCone),
                Some(first) => first.source().clone(),
            };
            for (j, (s, leg)) in sigma.iter().zip(&construction.legs).enumerate() {
                if s.target() != leg.target() {
                    return Err(CategoryError::LegEndpointMismatch { index: j });
                }
                if s.source() != &source {
                    return Err(CategoryError::LegsNotConcurrent("source"));
                }
            }
            let vmap: BTreeMap<VertexId, VertexId> = source
                .vertices()
                .iter()
                .map(|x| {
                    let coords: Vec<&VertexId> = sigma
                        .iter()
                        .map(|s| s.vertex_image(x).expect("total"))
                        .collect();
                    (x.clone(), tuple_vertex(&coords))
                })
                .collect();
            // The paired vertex map is the only candidate (projections pin
            // every coordinate); if it is not a morphism, the cone admits no
            // mediator at all.
            Morphism::extend_from_vertex_map(&source, &construction.object, &vmap)
                .map_err(CategoryError::LegsInconsistent)
        }
    }
}

fn expect_legs<const N: usize>(sigma: &[Morphism]) -> Result<&[Morphism; N], CategoryError> {
    sigma.try_into().map_err(|_| CategoryError::WrongLegCount {
        expected: N,
        got: sigma.len(),
    })
}

/// The free complex on a set of vertex names: discrete, no edges or cells.
pub fn free_complex(vertices: impl IntoIterator<Item = VertexId>) -> WeightedComplex {
    WeightedComplex::from_parts(vertices, [], []).expect("discrete data is always valid")
}

/// The underlying vertex set of a complex.
pub fn underlying_vertices(c: &WeightedComplex) -> BTreeSet<VertexId> {
    c.vertices().clone()
}

/// Transpose a morphism out of a free (discrete) complex into the set map it
/// corresponds to under the adjunction.
pub fn transpose(m: &Morphism) -> Result<BTreeMap<VertexId, VertexId>, CategoryError> {
    if !m.source().is_discrete() {
        return Err(CategoryError::NotDiscrete);
    }
    Ok(m.vertex_map().clone())
}

/// Inverse transpose: a set map from `domain` into the vertices of `target`
/// corresponds to a morphism from the free complex on `domain`.
pub fn transpose_inverse(
    domain: &BTreeSet<VertexId>,
    target: &WeightedComplex,
    map: &BTreeMap<VertexId, VertexId>,
) -> Result<Morphism, MorphismError> {
    let free = free_complex(domain.iter().cloned());
    Morphism::extend_from_vertex_map(&free, target, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ComplexData, RawCell};
    use crate::morphism::morphisms_between;
    use crate::morphism::DEFAULT_HOM_BOUND;

    fn v(s: &str) -> VertexId {
        VertexId::new(s)
    }

    fn k2(names: (&str, &str), w: u64) -> WeightedComplex {
        WeightedComplex::from_data(&ComplexData {
            vertices: vec![names.0.into(), names.1.into()],
            edges: vec![(names.0.into(), names.1.into(), Weight::Finite(w))],
            cells: vec![],
        })
        .unwrap()
    }

    fn point(name: &str) -> WeightedComplex {
        WeightedComplex::from_data(&ComplexData {
            vertices: vec![name.into()],
            edges: vec![],
            cells: vec![],
        })
        .unwrap()
    }

    fn triangle() -> WeightedComplex {
        WeightedComplex::from_data(&ComplexData {
            vertices: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![
                ("a".into(), "b".into(), Weight::Finite(2)),
                ("b".into(), "c".into(), Weight::Finite(2)),
                ("a".into(), "c".into(), Weight::Finite(2)),
            ],
            cells: vec![RawCell {
                boundary: vec!["a".into(), "b".into(), "c".into()],
                weight: Weight::Finite(2),
            }],
        })
        .unwrap()
    }

    fn strip_prefix(c: &WeightedComplex, prefix: &str) -> WeightedComplex {
        c.rename_vertices(|x| {
            VertexId::new(
                x.as_str()
                    .strip_prefix(prefix)
                    .unwrap_or(x.as_str())
                    .to_owned(),
            )
        })
        .unwrap()
    }

    #[test]
    fn union_with_the_empty_complex_is_the_identity_up_to_relabeling() {
        let c = triangle();
        let u = disjoint_union(&[c.clone(), WeightedComplex::empty()]);
        assert_eq!(strip_prefix(&u.object, "0:"), c);
        assert_eq!(u.legs.len(), 2);
        assert!(u.legs.iter().all(|m| m.axiom_violations().is_empty()));
    }

    #[test]
    fn union_of_two_points_is_the_discrete_pair() {
        let u = disjoint_union(&[point("v"), point("v")]);
        assert!(u.object.is_discrete());
        assert_eq!(u.object.vertex_count(), 2);
        assert!(u.object.has_vertex(&v("0:v")));
        assert!(u.object.has_vertex(&v("1:v")));
    }

    #[test]
    fn union_is_commutative_up_to_swapping_prefixes() {
        let a = triangle();
        let b = k2(("u", "v"), 5);
        let left = disjoint_union(&[a.clone(), b.clone()]);
        let right = disjoint_union(&[b, a]);
        let swapped = right
            .object
            .rename_vertices(|x| {
                let s = x.as_str();
                if let Some(rest) = s.strip_prefix("0:") {
                    VertexId::new(format!("1:{rest}"))
                } else if let Some(rest) = s.strip_prefix("1:") {
                    VertexId::new(format!("0:{rest}"))
                } else {
                    x.clone()
                }
            })
            .unwrap();
        assert_eq!(left.object, swapped);
    }

    #[test]
    fn product_of_two_edges_has_the_expected_census() {
        let p = strong_product(&[k2(("a", "b"), 2), k2(("p", "q"), 3)]).unwrap();
        assert_eq!(p.object.vertex_count(), 4);
        assert_eq!(p.object.edge_count(), 6);
        let w = |a: &str, b: &str| p.object.edge_weight(&v(a), &v(b)).unwrap();
        assert_eq!(w("(a,p)", "(b,p)"), Weight::Finite(2));
        assert_eq!(w("(a,q)", "(b,q)"), Weight::Finite(2));
        assert_eq!(w("(a,p)", "(a,q)"), Weight::Finite(3));
        assert_eq!(w("(b,p)", "(b,q)"), Weight::Finite(3));
        assert_eq!(w("(a,p)", "(b,q)"), Weight::Finite(6));
        assert_eq!(w("(a,q)", "(b,p)"), Weight::Finite(6));
        for leg in &p.legs {
            assert!(leg.axiom_violations().is_empty());
        }
    }

    #[test]
    fn product_with_a_point_is_the_identity_up_to_relabeling() {
        let c = triangle();
        let p = strong_product(&[c.clone(), point("z")]).unwrap();
        let stripped = p
            .object
            .rename_vertices(|x| {
                let s = x.as_str();
                let inner = s.strip_prefix('(').unwrap().strip_suffix(",z)").unwrap();
                VertexId::new(inner.to_owned())
            })
            .unwrap();
        assert_eq!(stripped, c);
    }

    #[test]
    fn product_with_the_empty_complex_is_empty() {
        let p = strong_product(&[triangle(), WeightedComplex::empty()]).unwrap();
        assert_eq!(p.object, WeightedComplex::empty());
        assert!(strong_product(&[]).is_err());
    }

    #[test]
    fn product_cell_synchronizes_boundaries() {
        // Triangle x triangle: one product cell per ordered pair of cells
        // (plus vertex-cell mixtures), each of boundary length 3.
        let t = triangle();
        let p = strong_product(&[t.clone(), t.clone()]).unwrap();
        // 3 vertices x 1 cell + 1 cell x 3 vertices + 1 cell x 1 cell = 7.
        assert_eq!(p.object.cell_count(), 7);
        for cycle in p.object.cells().keys() {
            assert_eq!(cycle.len(), 3);
        }
        for leg in &p.legs {
            assert!(leg.axiom_violations().is_empty());
        }
    }

    #[test]
    fn product_cell_length_is_the_lcm_of_boundary_lengths() {
        let square = WeightedComplex::from_data(&ComplexData {
            vertices: vec!["q1".into(), "q2".into(), "q3".into(), "q4".into()],
            edges: vec![
                ("q1".into(), "q2".into(), Weight::Finite(2)),
                ("q2".into(), "q3".into(), Weight::Finite(2)),
                ("q3".into(), "q4".into(), Weight::Finite(2)),
                ("q1".into(), "q4".into(), Weight::Finite(3)),
            ],
            cells: vec![RawCell {
                boundary: vec!["q1".into(), "q2".into(), "q3".into(), "q4".into()],
                weight: Weight::Finite(3),
            }],
        })
        .unwrap();
        let p = strong_product(&[triangle(), square]).unwrap();
        let lengths: Vec<usize> = p.object.cells().keys().map(Cycle::len).collect();
        // 3 cells from triangle-cell x square-vertex... no: triangle has one
        // cell, square has one cell. Mixtures: cell x 4 vertices (len 3),
        // 3 vertices x cell (len 4), cell x cell (len lcm(3,4) = 12).
        let mut sorted = lengths;
        sorted.sort_unstable();
        assert_eq!(sorted, vec![3, 3, 3, 3, 4, 4, 4, 12]);
        // The synchronized cell's weight is lcm(2, 3) = 6.
        let twelve = p
            .object
            .cells()
            .iter()
            .find(|(c, _)| c.len() == 12)
            .unwrap();
        assert_eq!(*twelve.1, Weight::Finite(6));
        for leg in &p.legs {
            assert!(leg.axiom_violations().is_empty());
        }
    }

    #[test]
    fn equalizer_of_identical_morphisms_is_the_whole_source() {
        let t = triangle();
        let id = Morphism::identity(&t);
        let eq = equalizer(&id, &id).unwrap();
        assert_eq!(eq.object, t);
    }

    #[test]
    fn equalizer_of_disagreeing_morphisms_keeps_the_agreement_locus() {
        let t = triangle();
        let id = Morphism::identity(&t);
        let swap = Morphism::extend_from_vertex_map(
            &t,
            &t,
            &[(v("a"), v("b")), (v("b"), v("a")), (v("c"), v("c"))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let eq = equalizer(&id, &swap).unwrap();
        assert_eq!(eq.object.vertex_count(), 1);
        assert!(eq.object.has_vertex(&v("c")));
        assert_eq!(eq.object.edge_count(), 0);
        let not_parallel = Morphism::identity(&point("z"));
        assert!(matches!(
            equalizer(&id, &not_parallel),
            Err(CategoryError::NotParallel)
        ));
    }

    #[test]
    fn equalizer_factors_equalizing_cones_uniquely() {
        let t = triangle();
        let id = Morphism::identity(&t);
        let swap = Morphism::extend_from_vertex_map(
            &t,
            &t,
            &[(v("a"), v("b")), (v("b"), v("a")), (v("c"), v("c"))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let eq = equalizer(&id, &swap).unwrap();
        // A cone: the point mapping to c equalizes id and swap.
        let x = point("x");
        let sigma =
            Morphism::extend_from_vertex_map(&x, &t, &[(v("x"), v("c"))].into_iter().collect())
                .unwrap();
        let mediator = factor_through(&eq, std::slice::from_ref(&sigma)).unwrap();
        assert_eq!(compose(&eq.legs[0], &mediator).unwrap(), sigma);
        // Uniqueness: no other morphism x -> eq gives the same composite.
        let all = morphisms_between(&x, &eq.object, DEFAULT_HOM_BOUND).unwrap();
        let matching: Vec<_> = all
            .iter()
            .filter(|m| compose(&eq.legs[0], m).unwrap() == sigma)
            .collect();
        assert_eq!(matching.len(), 1);
        // A non-equalizing cone is rejected.
        let bad =
            Morphism::extend_from_vertex_map(&x, &t, &[(v("x"), v("a"))].into_iter().collect())
                .unwrap();
        assert!(matches!(
            factor_through(&eq, &[bad]),
            Err(CategoryError::DoesNotEqualize)
        ));
    }

    #[test]
    fn coequalizer_merges_the_two_images() {
        // Two maps from a point into a 2-weighted edge pick out its ends;
        // the coequalizer wants to glue them: strict refuses (loop), lax
        // collapses to a point.
        let p = point("x");
        let e = k2(("a", "b"), 2);
        let to_a =
            Morphism::extend_from_vertex_map(&p, &e, &[(v("x"), v("a"))].into_iter().collect())
                .unwrap();
        let to_b =
            Morphism::extend_from_vertex_map(&p, &e, &[(v("x"), v("b"))].into_iter().collect())
                .unwrap();
        assert!(matches!(
            coequalizer(&to_a, &to_b, QuotientMode::Strict),
            Err(CategoryError::Quotient(
                QuotientError::EdgeBecomesLoop { .. }
            ))
        ));
        let co = coequalizer(&to_a, &to_b, QuotientMode::Lax).unwrap();
        assert_eq!(co.object.vertex_count(), 1);
        assert!(co.object.is_discrete());
    }

    #[test]
    fn coequalizer_of_equal_morphisms_is_the_identity_quotient() {
        let t = triangle();
        let id = Morphism::identity(&t);
        let co = coequalizer(&id, &id, QuotientMode::Strict).unwrap();
        assert_eq!(co.object, t);
        assert_eq!(co.legs[0], id);
    }

    #[test]
    fn coequalizer_factors_coequalizing_cocones_uniquely() {
        let free = free_complex([v("x"), v("y")]);
        let e = k2(("a", "b"), 4);
        let phi = Morphism::extend_from_vertex_map(
            &free,
            &e,
            &[(v("x"), v("a")), (v("y"), v("a"))].into_iter().collect(),
        )
        .unwrap();
        let psi = Morphism::extend_from_vertex_map(
            &free,
            &e,
            &[(v("x"), v("a")), (v("y"), v("b"))].into_iter().collect(),
        )
        .unwrap();
        // Coequalizer glues a ~ b.
        assert!(coequalizer(&phi, &psi, QuotientMode::Strict).is_err());
        let co = coequalizer(&phi, &psi, QuotientMode::Lax).unwrap();
        assert_eq!(co.object.vertex_count(), 1);
        // A cocone: collapse the edge to a point.
        let z = point("z");
        let sigma = Morphism::extend_from_vertex_map(
            &e,
            &z,
            &[(v("a"), v("z")), (v("b"), v("z"))].into_iter().collect(),
        )
        .unwrap();
        let mediator = factor_through(&co, std::slice::from_ref(&sigma)).unwrap();
        assert_eq!(compose(&mediator, &co.legs[0]).unwrap(), sigma);
        let all = morphisms_between(&co.object, &z, DEFAULT_HOM_BOUND).unwrap();
        let matching: Vec<_> = all
            .iter()
            .filter(|m| compose(m, &co.legs[0]).unwrap() == sigma)
            .collect();
        assert_eq!(matching.len(), 1);
        // The identity on the edge does not coequalize.
        assert!(matches!(
            factor_through(&co, &[Morphism::identity(&e)]),
            Err(CategoryError::DoesNotCoequalize)
        ));
    }

    #[test]
    fn coproduct_factors_cocones_uniquely() {
        let a = point("a");
        let b = k2(("u", "w"), 2);
        let u = disjoint_union(&[a.clone(), b.clone()]);
        let x = k2(("u", "w"), 2);
        let s0 =
            Morphism::extend_from_vertex_map(&a, &x, &[(v("a"), v("u"))].into_iter().collect())
                .unwrap();
        let s1 = Morphism::identity(&b);
        let mediator = factor_through(&u, &[s0.clone(), s1.clone()]).unwrap();
        assert_eq!(compose(&mediator, &u.legs[0]).unwrap(), s0);
        assert_eq!(compose(&mediator, &u.legs[1]).unwrap(), s1);
        let all = morphisms_between(&u.object, &x, DEFAULT_HOM_BOUND).unwrap();
        let matching: Vec<_> = all
            .iter()
            .filter(|m| {
                compose(m, &u.legs[0]).unwrap() == s0 && compose(m, &u.legs[1]).unwrap() == s1
            })
            .collect();
        assert_eq!(matching.len(), 1);
        assert!(matches!(
            factor_through(&u, &[s0]),
            Err(CategoryError::WrongLegCount {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn product_factors_compatible_cones_uniquely() {
        let t = triangle();
        let p = strong_product(&[t.clone(), t.clone()]).unwrap();
        // The diagonal cone (id, id).
        let id = Morphism::identity(&t);
        let mediator = factor_through(&p, &[id.clone(), id.clone()]).unwrap();
        assert_eq!(compose(&p.legs[0], &mediator).unwrap(), id);
        assert_eq!(compose(&p.legs[1], &mediator).unwrap(), id);
        assert!(mediator.axiom_violations().is_empty());
    }

    #[test]
    fn product_rejects_inconsistent_cones_truthfully() {
        // The triangle's rotation against the identity: the paired walk
        // ((a,b),(b,c),(c,a)) is a triangle in the product skeleton, but it
        // is not the boundary of any synchronized product cell... unless it
        // is; either way, factor_through's verdict must agree with an
        // exhaustive search of the Hom-set.
        let t = triangle();
        let p = strong_product(&[t.clone(), t.clone()]).unwrap();
        let id = Morphism::identity(&t);
        let rot = Morphism::extend_from_vertex_map(
            &t,
            &t,
            &[(v("a"), v("b")), (v("b"), v("c")), (v("c"), v("a"))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let verdict = factor_through(&p, &[id.clone(), rot.clone()]);
        let all = morphisms_between(&t, &p.object, DEFAULT_HOM_BOUND).unwrap();
        let matching: Vec<_> = all
            .iter()
            .filter(|m| {
                compose(&p.legs[0], m).unwrap() == id && compose(&p.legs[1], m).unwrap() == rot
            })
            .collect();
        match verdict {
            Ok(mediator) => {
                assert_eq!(matching.len(), 1);
                assert_eq!(&mediator, matching[0]);
            }
            Err(CategoryError::LegsInconsistent(_)) => assert!(matching.is_empty()),
            Err(other) => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn free_and_underlying_form_an_adjunction() {
        let domain: BTreeSet<VertexId> = [v("x"), v("y")].into_iter().collect();
        let target = triangle();
        // Bijection: morphisms FC(X) -> Y correspond to set maps X -> V(Y).
        let free = free_complex(domain.iter().cloned());
        let homs = morphisms_between(&free, &target, DEFAULT_HOM_BOUND).unwrap();
        assert_eq!(homs.len(), 9); // |V|^|X| = 3^2
        for m in &homs {
            let f = transpose(m).unwrap();
            let back = transpose_inverse(&domain, &target, &f).unwrap();
            assert_eq!(&back, m);
        }
        // Transposing a morphism out of a non-discrete complex is an error.
        assert!(matches!(
            transpose(&Morphism::identity(&target)),
            Err(CategoryError::NotDiscrete)
        ));
    }

    #[test]
    fn transpose_is_natural_in_the_target() {
        let domain: BTreeSet<VertexId> = [v("x")].into_iter().collect();
        let d6 = k2(("u", "w"), 6);
        let d3 = k2(("u", "w"), 3);
        let g = Morphism::extend_from_vertex_map(
            &d6,
            &d3,
            &[(v("u"), v("u")), (v("w"), v("w"))].into_iter().collect(),
        )
        .unwrap();
        for m in morphisms_between(&free_complex(domain.iter().cloned()), &d6, 100).unwrap() {
            let lhs = transpose(&compose(&g, &m).unwrap()).unwrap();
            let rhs: BTreeMap<VertexId, VertexId> = transpose(&m)
                .unwrap()
                .into_iter()
                .map(|(x, y)| (x, g.vertex_image(&y).unwrap().clone()))
                .collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tuple_names_with_commas_stay_injective() {
        let odd = WeightedComplex::from_parts([v("a,b"), v("a")], [], []).unwrap();
        let other = WeightedComplex::from_parts([v("c"), v("b,c")], [], []).unwrap();
        let p = strong_product(&[odd, other]).unwrap();
        assert_eq!(p.object.vertex_count(), 4);
    }
}
