//! Quotients of complexes by vertex partitions.
//!
//! A partition of the vertex set induces a quotient complex: each class
//! becomes one vertex (named by its least member, so the discrete partition
//! is a no-op), edges whose endpoint classes differ descend classwise with
//! the GCD of the merged weights, and cells descend along their class-image
//! boundary walks, again with GCD weights when several cells land on the
//! same boundary. Degeneracies split by mode: in strict mode an edge whose
//! endpoints merge is an error; in lax mode such edges collapse and cells
//! whose whole boundary collapses shrink to a vertex. In both modes a merged
//! weight of 1, a boundary reducing to length 2, and a boundary walk that
//! revisits a class without closing up ("pinching") are errors — no legal
//! complex can represent the result.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Cycle, EdgeKey, VertexId, WeightedComplex};
use crate::morphism::{classify_closed_walk, cyclic_dedup, Morphism, WalkShape};
use crate::weight::{weight_gcd, Weight};

/// A partition of a vertex set into disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<BTreeSet<VertexId>>,
}

/// Why a set of blocks is not a partition of the complex's vertices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("partition contains an empty block")]
    EmptyBlock,
    #[error("vertex {0} appears in more than one block")]
    Overlap(VertexId),
    #[error("partition names unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is not covered by the partition")]
    Uncovered(VertexId),
}

impl VertexPartition {
    /// Build from explicit blocks; blocks must be nonempty and disjoint.
    pub fn new(
        blocks: impl IntoIterator<Item = BTreeSet<VertexId>>,
    ) -> Result<VertexPartition, PartitionError> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out: Vec<BTreeSet<VertexId>> = Vec::new();
        for block in blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for v in &block {
                if !seen.insert(v.clone()) {
                    return Err(PartitionError::Overlap(v.clone()));
                }
            }
            out.push(block);
        }
        out.sort_by(|a, b| a.first().cmp(&b.first()));
        Ok(VertexPartition { blocks: out })
    }

    /// The discrete partition: every vertex in its own block.
    pub fn discrete(vertices: &BTreeSet<VertexId>) -> VertexPartition {
        VertexPartition {
            blocks: vertices
                .iter()
                .map(|v| BTreeSet::from([v.clone()]))
                .collect(),
        }
    }

    /// The finest partition of `vertices` merging each given pair
    /// (transitive closure). Pairs must name known vertices.
    pub fn from_pairs(
        vertices: &BTreeSet<VertexId>,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<VertexPartition, PartitionError> {
        let index: BTreeMap<&VertexId, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let ordered: Vec<&VertexId> = vertices.iter().collect();
        let mut parent: Vec<usize> = (0..vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, b) in pairs {
            let ia = *index
                .get(&a)
                .ok_or(PartitionError::UnknownVertex(a.clone()))?;
            let ib = *index
                .get(&b)
                .ok_or(PartitionError::UnknownVertex(b.clone()))?;
            let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
            // Attach the larger root to the smaller so representatives are
            // stable and deterministic.
            let (keep, drop) = (ra.min(rb), ra.max(rb));
            parent[drop] = keep;
        }
        let mut grouped: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (i, v) in ordered.iter().enumerate() {
            let root = find(&mut parent, i);
            grouped.entry(root).or_default().insert((*v).clone());
        }
        VertexPartition::new(grouped.into_values())
    }

    pub fn blocks(&self) -> &[BTreeSet<VertexId>] {
        &self.blocks
    }

    /// The class representative (least member) of the block containing `v`.
    pub fn representative(&self, v: &VertexId) -> Option<&VertexId> {
        self.blocks
            .iter()
            .find(|b| b.contains(v))
            .map(|b| b.first().expect("blocks are nonempty"))
    }

    /// Check that the blocks exactly cover `vertices`.
    fn check_cover(&self, vertices: &BTreeSet<VertexId>) -> Result<(), PartitionError> {
        let mut covered: BTreeSet<&VertexId> = BTreeSet::new();
        for block in &self.blocks {
            for v in block {
                if !vertices.contains(v) {
                    return Err(PartitionError::UnknownVertex(v.clone()));
                }
                covered.insert(v);
            }
        }
        for v in vertices {
            if !covered.contains(v) {
                return Err(PartitionError::Uncovered(v.clone()));
            }
        }
        Ok(())
    }
}

/// How to treat degeneracies while taking a quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientMode {
    /// Any collapsing edge is an error.
    Strict,
    /// Collapsing edges disappear; fully collapsing cells become vertices.
    Lax,
}

/// Why a quotient cannot be formed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("edge {u}-{v} becomes a loop at class {class}")]
    EdgeBecomesLoop {
        u: VertexId,
        v: VertexId,
        class: VertexId,
    },
    #[error("merged edge {u}-{v} gets weight 1")]
    MergedEdgeWeightOne { u: VertexId, v: VertexId },
    #[error("cell {boundary} pinches at class {class}")]
    CellPinched { boundary: Cycle, class: VertexId },
    #[error("cell {boundary} reduces to boundary length {len}")]
    CellTooShort { boundary: Cycle, len: usize },
    #[error("merged cell {boundary} gets weight 1")]
    MergedCellWeightOne { boundary: Cycle },
}

/// Quotient `complex` by `partition`, returning the quotient and the
/// projection morphism onto it.
pub fn quotient(
    complex: &WeightedComplex,
    partition: &VertexPartition,
    mode: QuotientMode,
) -> Result<(WeightedComplex, Morphism), QuotientError> {
    partition.check_cover(complex.vertices())?;
    let rep: BTreeMap<VertexId, VertexId> = partition
        .blocks()
        .iter()
        .flat_map(|b| {
            let r = b.first().expect("blocks are nonempty").clone();
            b.iter().map(move |v| (v.clone(), r.clone()))
        })
        .collect();

    let class_vertices: BTreeSet<VertexId> = partition
        .blocks()
        .iter()
        .map(|b| b.first().expect("nonempty").clone())
        .collect();

    let mut merged_edges: BTreeMap<EdgeKey, Vec<Weight>> = BTreeMap::new();
    for (edge, &w) in complex.edges() {
        let (u, v) = edge.endpoints();
        let (ru, rv) = (&rep[u], &rep[v]);
        if ru == rv {
            match mode {
                QuotientMode::Strict => {
                    return Err(QuotientError::EdgeBecomesLoop {
                        u: u.clone(),
                        v: v.clone(),
                        class: ru.clone(),
                    })
                }
                QuotientMode::Lax => continue, // collapses to the class vertex
            }
        }
        let key = EdgeKey::new(ru.clone(), rv.clone()).expect("distinct classes");
        merged_edges.entry(key).or_default().push(w);
    }
    let mut class_edges: BTreeMap<EdgeKey, Weight> = BTreeMap::new();
    for (key, weights) in merged_edges {
        let g = weight_gcd(weights).expect("at least one merged weight");
        if g == Weight::Finite(1) {
            let (u, v) = key.endpoints();
            return Err(QuotientError::MergedEdgeWeightOne {
                u: u.clone(),
                v: v.clone(),
            });
        }
        class_edges.insert(key, g);
    }

    let mut merged_cells: BTreeMap<Cycle, Vec<Weight>> = BTreeMap::new();
    for (cycle, &w) in complex.cells() {
        let walk: Vec<VertexId> = cycle.vertices().iter().map(|v| rep[v].clone()).collect();
        let reduced = cyclic_dedup(&walk);
        match classify_closed_walk(&reduced) {
            WalkShape::Point(_) => {
                debug_assert!(
                    mode == QuotientMode::Lax,
                    "strict collapse caught as edge loop"
                );
                continue; // the cell shrinks to its class vertex
            }
            WalkShape::TooShort(len) => {
                return Err(QuotientError::CellTooShort {
                    boundary: cycle.clone(),
                    len,
                })
            }
            WalkShape::Pinched(class) => {
                return Err(QuotientError::CellPinched {
                    boundary: cycle.clone(),
                    class,
                })
            }
            WalkShape::Covered { base, times } => {
                // A quotient must *create* its cells, and a wrapped walk is
                // not a legal boundary; only a plain cycle descends.
                if times > 1 {
                    return Err(QuotientError::CellPinched {
                        boundary: cycle.clone(),
                        class: base[0].clone(),
                    });
                }
                let class_cycle = Cycle::canonicalize(&base).expect("simple cycle");
                merged_cells.entry(class_cycle).or_default().push(w);
            }
        }
    }
    let mut class_cells: BTreeMap<Cycle, Weight> = BTreeMap::new();
    for (cycle, weights) in merged_cells {
        let g = weight_gcd(weights).expect("at least one merged weight");
        if g == Weight::Finite(1) {
            return Err(QuotientError::MergedCellWeightOne { boundary: cycle });
        }
        class_cells.insert(cycle, g);
    }

    let quotient_complex = WeightedComplex::from_parts(class_vertices, class_edges, class_cells)
        .expect("quotient data satisfies the axioms by construction");
    let projection = Morphism::extend_from_vertex_map(complex, &quotient_complex, &rep)
        .expect("class map is a morphism by construction");
    Ok((quotient_complex, projection))
}
