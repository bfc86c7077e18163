//! Constructors for the standard complex families.
//!
//! Each family is a weighted 2-complex whose group realizes a classical
//! presentation: `discrete(r)` the free product of r copies of Z/2,
//! `complete2(r)` their direct product, `coxeter(M)` the Coxeter system of
//! a matrix, `sympath(n)` the symmetric group S_{n+1}, `dihedral(n)` the
//! dihedral group of order 2n, and `gvp(n)` / `gnk(n,k)` the pure Gauss
//! virtual braid group and its k-subset generalization, where 2-cells
//! carry the triangle and palindromic relations.
//!
//! Everything here is built from explicit raw data and then checked by the
//! full complex validator, so every family object satisfies the axioms by
//! construction.

use std::collections::BTreeSet;

use crate::complex::{ComplexData, Cycle, RawCell, VertexId, WeightedComplex};
use crate::weight::Weight;

/// A validated Coxeter matrix: square, symmetric, exactly 1 on the
/// diagonal, off-diagonal entries at least 2 or `inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<Weight>>,
}

/// Why a matrix is not a Coxeter matrix (indices are 1-based, matching the
/// generator names `v1..vn`).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is not valid JSON: {0}")]
    Syntax(String),
    #[error("row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("diagonal entry at {index} is {found}, must be 1")]
    Diagonal { index: usize, found: Weight },
    #[error("asymmetric at ({row},{col}): {found} vs {mirror}")]
    Asymmetric {
        row: usize,
        col: usize,
        found: Weight,
        mirror: Weight,
    },
    #[error("entry ({row},{col}) is {found}, must be at least 2 or inf")]
    EntryTooSmall {
        row: usize,
        col: usize,
        found: Weight,
    },
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<Weight>>) -> Result<CoxeterMatrix, MatrixError> {
        let rank = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != rank {
                return Err(MatrixError::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    rank,
                });
            }
        }
        for (i, row) in entries.iter().enumerate() {
            if row[i] != Weight::ONE {
                return Err(MatrixError::Diagonal {
                    index: i + 1,
                    found: row[i],
                });
            }
            for j in (i + 1)..rank {
                if row[j] != entries[j][i] {
                    return Err(MatrixError::Asymmetric {
                        row: i + 1,
                        col: j + 1,
                        found: row[j],
                        mirror: entries[j][i],
                    });
                }
                if let Weight::Finite(m) = row[j] {
                    if m < 2 {
                        return Err(MatrixError::EntryTooSmall {
                            row: i + 1,
                            col: j + 1,
                            found: row[j],
                        });
                    }
                }
            }
        }
        Ok(CoxeterMatrix { entries })
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry m_{ij}, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> Weight {
        self.entries[i][j]
    }
}

/// Parse a Coxeter matrix from JSON: an array of arrays of naturals, with
/// the string `"inf"` for infinite entries.
pub fn parse_coxeter_matrix(json: &str) -> Result<CoxeterMatrix, MatrixError> {
    let entries: Vec<Vec<Weight>> =
        serde_json::from_str(json).map_err(|e| MatrixError::Syntax(e.to_string()))?;
    CoxeterMatrix::new(entries)
}

/// A named family of complexes together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Empty,
    Point,
    Discrete(usize),
    Complete2(usize),
    Coxeter(CoxeterMatrix),
    Sympath(usize),
    Dihedral(u64),
    Gvp(usize),
    Gnk(usize, usize),
}

/// Why a family request is invalid.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("dihedral weight must be at least 2, got {0}")]
    DihedralWeight(u64),
    #[error("gnk requires 2 <= k < n, got n={n} k={k}")]
    GnkParameters { n: usize, k: usize },
}

/// Build the member of a family.
pub fn build_family(family: &Family) -> Result<WeightedComplex, FamilyError> {
    match family {
        Family::Empty => Ok(WeightedComplex::empty()),
        Family::Point => Ok(point()),
        Family::Discrete(r) => Ok(discrete(*r)),
        Family::Complete2(r) => Ok(complete2(*r)),
        Family::Coxeter(m) => Ok(coxeter(m)),
        Family::Sympath(n) => Ok(sympath(*n)),
        Family::Dihedral(n) => dihedral(*n),
        Family::Gvp(n) => Ok(gvp(*n)),
        Family::Gnk(n, k) => gnk(*n, *k),
    }
}

fn assemble(data: ComplexData) -> WeightedComplex {
    WeightedComplex::from_data(&data).expect("family construction satisfies the axioms")
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// The one-vertex complex (group Z/2).
pub fn point() -> WeightedComplex {
    assemble(ComplexData {
        vertices: vec!["v".to_owned()],
        edges: vec![],
        cells: vec![],
    })
}

/// `r` isolated vertices `v1..vr` (free product of r copies of Z/2).
pub fn discrete(r: usize) -> WeightedComplex {
    assemble(ComplexData {
        vertices: numbered("v", r),
        edges: vec![],
        cells: vec![],
    })
}

/// Complete graph on `v1..vr`, every edge weight 2 (direct product of r
/// copies of Z/2).
pub fn complete2(r: usize) -> WeightedComplex {
    let vertices = numbered("v", r);
    let edges = (0..r)
        .flat_map(|i| {
            let vertices = &vertices;
            ((i + 1)..r).map(move |j| (vertices[i].clone(), vertices[j].clone(), Weight::Finite(2)))
        })
        .collect();
    assemble(ComplexData {
        vertices,
        edges,
        cells: vec![],
    })
}

/// The graph of a Coxeter matrix: vertices `v1..vn`, an edge of weight
/// m_{ij} for every pair — infinite entries included as `inf` edges.
pub fn coxeter(matrix: &CoxeterMatrix) -> WeightedComplex {
    let n = matrix.rank();
    let vertices = numbered("v", n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((vertices[i].clone(), vertices[j].clone(), matrix.entry(i, j)));
        }
    }
    assemble(ComplexData {
        vertices,
        edges,
        cells: vec![],
    })
}

/// Complete graph on `v1..vn` with weight 3 between consecutive vertices
/// and weight 2 otherwise (the symmetric group S_{n+1}).
pub fn sympath(n: usize) -> WeightedComplex {
    let vertices = numbered("v", n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = if j == i + 1 { 3 } else { 2 };
            edges.push((vertices[i].clone(), vertices[j].clone(), Weight::Finite(w)));
        }
    }
    assemble(ComplexData {
        vertices,
        edges,
        cells: vec![],
    })
}

/// Two vertices `u`, `v` joined by one edge of weight `n` (the dihedral
/// group of order 2n). Requires `n >= 2`.
pub fn dihedral(n: u64) -> Result<WeightedComplex, FamilyError> {
    if n < 2 {
        return Err(FamilyError::DihedralWeight(n));
    }
    Ok(assemble(ComplexData {
        vertices: vec!["u".to_owned(), "v".to_owned()],
        edges: vec![("u".to_owned(), "v".to_owned(), Weight::Finite(n))],
        cells: vec![],
    }))
}

fn subset_name(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(usize::to_string).collect();
    format!("g{}", parts.join("_"))
}

/// All size-`k` subsets of `1..=n`, each sorted ascending, in
/// lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recurse(
        n: usize,
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            recurse(n, k, i + 1, current, out);
            current.pop();
        }
    }
    recurse(n, k, 1, &mut current, &mut out);
    out
}

/// The pure Gauss virtual braid group complex: one vertex `g{i}_{j}` per
/// pair i < j of `1..=n`, weight-2 edges between index-disjoint pairs,
/// `inf` edges between index-sharing pairs, and per 3-subset {i,j,k} one
/// weight-2 triangle cell through its three pair-vertices.
pub fn gvp(n: usize) -> WeightedComplex {
    let pairs = k_subsets(n, 2);
    let vertices: Vec<String> = pairs.iter().map(|p| subset_name(p)).collect();
    let mut edges = Vec::new();
    for a in 0..pairs.len() {
        for b in (a + 1)..pairs.len() {
            let disjoint = pairs[a].iter().all(|i| !pairs[b].contains(i));
            let w = if disjoint {
                Weight::Finite(2)
            } else {
                Weight::Infinity
            };
            edges.push((vertices[a].clone(), vertices[b].clone(), w));
        }
    }
    let cells = k_subsets(n, 3)
        .into_iter()
        .map(|t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            RawCell {
                boundary: vec![
                    subset_name(&[i, j]),
                    subset_name(&[i, k]),
                    subset_name(&[j, k]),
                ],
                weight: Weight::Finite(2),
            }
        })
        .collect();
    assemble(ComplexData {
        vertices,
        edges,
        cells,
    })
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|i| b.contains(i)).count()
}

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn recurse(
        m: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for i in 0..m {
            if !used[i] {
                used[i] = true;
                current.push(i);
                recurse(m, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    recurse(m, &mut current, &mut used, &mut out);
    out
}

/// The k-subset generalization of [`gvp`]: vertices are the k-subsets of
/// `1..=n`, with weight-2 edges between subsets meeting in fewer than k−1
/// indices and `inf` edges between subsets meeting in exactly k−1. Every
/// (k+1)-subset U contributes the k!/2 weight-2 cells whose boundaries are
/// the distinct cyclic orderings (up to rotation and reversal) of the k+1
/// k-subsets of U. Requires 2 <= k < n; `gnk(n, 2)` equals `gvp(n)`.
pub fn gnk(n: usize, k: usize) -> Result<WeightedComplex, FamilyError> {
    if k < 2 || k >= n {
        return Err(FamilyError::GnkParameters { n, k });
    }
    let subsets = k_subsets(n, k);
    let vertices: Vec<String> = subsets.iter().map(|s| subset_name(s)).collect();
    let mut edges = Vec::new();
    for a in 0..subsets.len() {
        for b in (a + 1)..subsets.len() {
            let w = if intersection_size(&subsets[a], &subsets[b]) == k - 1 {
                Weight::Infinity
            } else {
                Weight::Finite(2)
            };
            edges.push((vertices[a].clone(), vertices[b].clone(), w));
        }
    }
    let mut cells = Vec::new();
    for u in k_subsets(n, k + 1) {
        // The k+1 facets of U, i.e. U minus one element each.
        let facets: Vec<VertexId> = (0..u.len())
            .map(|drop| {
                let facet: Vec<usize> = u
                    .iter()
                    .enumerate()
                    .filter(|&(pos, _)| pos != drop)
                    .map(|(_, &i)| i)
                    .collect();
                VertexId::new(subset_name(&facet))
            })
            .collect();
        let mut boundaries: BTreeSet<Cycle> = BTreeSet::new();
        for sigma in permutations(facets.len()) {
            let walk: Vec<VertexId> = sigma.iter().map(|&i| facets[i].clone()).collect();
            boundaries.insert(Cycle::canonicalize(&walk).expect("facets are pairwise distinct"));
        }
        for boundary in boundaries {
            cells.push(RawCell {
                boundary: boundary
                    .vertices()
                    .iter()
                    .map(|v| v.as_str().to_owned())
                    .collect(),
                weight: Weight::Finite(2),
            });
        }
    }
    Ok(assemble(ComplexData {
        vertices,
        edges,
        cells,
    }))
}
