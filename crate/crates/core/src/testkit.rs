//! Deterministic random data for tests: seeded complexes and partitions.
//!
//! Everything here is driven by an explicitly seeded ChaCha stream so test
//! corpora are reproducible across runs and platforms.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{Cycle, EdgeKey, VertexId, WeightedComplex};
use crate::quotient::VertexPartition;
use crate::weight::Weight;

/// A reproducible RNG for test corpora.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
const EDGE_WEIGHTS: [Weight; 5] = [
    Weight::Finite(2),
    Weight::Finite(3),
    Weight::Finite(4),
    Weight::Finite(6),
    Weight::Infinity,
];
const CELL_WEIGHTS: [Weight; 3] = [Weight::Finite(2), Weight::Finite(3), Weight::Finite(4)];

/// A random complex with at most `max_vertices` vertices: random edges with
/// mixed weights, and a random selection of the simple cycles available in
/// the resulting graph as cells.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> WeightedComplex {
    let n = rng.random_range(0..=max_vertices.min(NAMES.len()));
    let vertices: Vec<VertexId> = NAMES[..n].iter().map(|s| VertexId::new(*s)).collect();

    let mut edges: Vec<(EdgeKey, Weight)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(0.6) {
                let key = EdgeKey::new(vertices[i].clone(), vertices[j].clone()).unwrap();
                edges.push((key, *EDGE_WEIGHTS.choose(rng).unwrap()));
            }
        }
    }
    let edge_keys: BTreeSet<EdgeKey> = edges.iter().map(|(k, _)| k.clone()).collect();

    // Candidate cells: simple cycles of length 3 or 4 whose edges all exist,
    // one per dihedral class.
    let mut candidates: BTreeSet<Cycle> = BTreeSet::new();
    for cycle_len in [3usize, 4] {
        if n < cycle_len {
            continue;
        }
        for subset in index_subsets(n, cycle_len) {
            for perm in permutations(&subset) {
                let listing: Vec<VertexId> = perm.iter().map(|&i| vertices[i].clone()).collect();
                let cycle = Cycle::canonicalize(&listing).expect("distinct vertices");
                let closed = cycle.edges().iter().all(|e| edge_keys.contains(e));
                if closed {
                    candidates.insert(cycle);
                }
            }
        }
    }
    let mut cells: Vec<(Cycle, Weight)> = Vec::new();
    for cycle in candidates {
        if rng.random_bool(0.5) {
            cells.push((cycle, *CELL_WEIGHTS.choose(rng).unwrap()));
        }
    }

    WeightedComplex::from_parts(vertices, edges, cells)
        .expect("randomly assembled data is valid by construction")
}

/// A random partition of the complex's vertices into at most
/// `vertex_count` buckets (often merging something).
pub fn random_partition(rng: &mut ChaCha8Rng, complex: &WeightedComplex) -> VertexPartition {
    let vertices: Vec<&VertexId> = complex.vertices().iter().collect();
    if vertices.is_empty() {
        return VertexPartition::discrete(complex.vertices());
    }
    let buckets = rng.random_range(1..=vertices.len());
    let mut blocks: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); buckets];
    for v in vertices {
        let b = rng.random_range(0..buckets);
        blocks[b].insert((*v).clone());
    }
    VertexPartition::new(blocks.into_iter().filter(|b| !b.is_empty()))
        .expect("buckets are disjoint")
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}
