//! Todd–Coxeter coset enumeration, the independent order oracle.
//!
//! The enumerator runs HLT-style relator scanning over the trivial
//! subgroup: cosets are defined in first-missing-entry order, coincidences
//! are processed immediately through a union-find keeping the
//! least-numbered representative, and relator words are indexed virtually
//! (`word`, `exponent`), so huge weights never materialize huge relators.
//! Because every generator is an involution here (square relators are
//! required up front), the table stores one column per generator and every
//! write is symmetric: `a·g = b` implies `b·g = a`.
//!
//! The `limit` caps **live** cosets: enumeration that would need
//! `limit + 1` live cosets stops with [`Enumeration::Exceeded`] — possibly
//! even when the group itself is smaller, since HLT can overshoot before
//! coincidences collapse the table. A completed run, by contrast, is
//! verified on the spot (columns are involutory permutations, every
//! relator closes everywhere) and its order is exact. Total definitions
//! are additionally capped at `max(10 * limit, limit + 1000)` to bound
//! memory when live counts plateau while dead cosets accumulate.
//!
//! Everything is deterministic: identical inputs give identical tables.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::complex::VertexId;
use crate::morphism::Morphism;
use crate::presentation::GroupPresentation;

const UNDEF: u32 = u32::MAX;

/// Default cap on live cosets.
pub const DEFAULT_COSET_LIMIT: usize = 1_000_000;

/// A completed coset table: the regular permutation representation of the
/// presented group. Cosets are numbered `1..=order` publicly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<VertexId>,
    order: usize,
    table: Vec<u32>, // order × generators.len(), row-major, all defined
}

/// The outcome of an enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumeration {
    Completed(CosetTable),
    Exceeded { limit: usize },
}

impl Enumeration {
    pub fn completed(&self) -> Option<&CosetTable> {
        match self {
            Enumeration::Completed(t) => Some(t),
            Enumeration::Exceeded { .. } => None,
        }
    }

    pub fn order(&self) -> Option<u64> {
        self.completed().map(CosetTable::order)
    }
}

/// Why an enumeration cannot start.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("generator {0} has no square relator, so the involutory table would be unsound")]
    MissingSquare(VertexId),
    #[error("coset limit must be at least 1")]
    ZeroLimit,
}

/// Why a word cannot be traced through a table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("unknown generator {0}")]
    UnknownGenerator(VertexId),
    #[error("coset {coset} out of range 1..={order}")]
    CosetOutOfRange { coset: usize, order: usize },
}

impl CosetTable {
    pub fn order(&self) -> u64 {
        self.order as u64
    }

    pub fn generators(&self) -> &[VertexId] {
        &self.generators
    }

    fn gen_index(&self, g: &VertexId) -> Option<usize> {
        self.generators.binary_search(g).ok()
    }

    fn step(&self, coset: usize, g: usize) -> usize {
        self.table[coset * self.generators.len() + g] as usize
    }

    /// Trace a word from a coset (both 1-based).
    pub fn trace(&self, coset: usize, word: &[VertexId]) -> Result<usize, TraceError> {
        if coset == 0 || coset > self.order {
            return Err(TraceError::CosetOutOfRange {
                coset,
                order: self.order,
            });
        }
        let mut c = coset - 1;
        for letter in word {
            let g = self
                .gen_index(letter)
                .ok_or_else(|| TraceError::UnknownGenerator(letter.clone()))?;
            c = self.step(c, g);
        }
        Ok(c + 1)
    }

    /// Whether a word acts trivially on every coset (i.e. represents the
    /// identity of the presented group).
    pub fn is_trivial_word(&self, word: &[VertexId]) -> Result<bool, TraceError> {
        for coset in 1..=self.order {
            if self.trace(coset, word)? != coset {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The permutation a generator induces on cosets, as 1-based images.
    pub fn generator_permutation(&self, g: &VertexId) -> Option<Vec<usize>> {
        let g = self.gen_index(g)?;
        Some((0..self.order).map(|c| self.step(c, g) + 1).collect())
    }

    /// The permutation a word of generator indices induces (0-based).
    fn word_permutation(&self, word: &[usize]) -> Vec<u32> {
        (0..self.order)
            .map(|c| word.iter().fold(c, |acc, &g| self.step(acc, g)) as u32)
            .collect()
    }
}

/// Does `perm^exponent` equal the identity? True iff every cycle length
/// divides the exponent — checked without expanding the power.
fn power_is_identity(perm: &[u32], exponent: u64) -> bool {
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len: u64 = 0;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = perm[c] as usize;
            len += 1;
        }
        if !exponent.is_multiple_of(len) {
            return false;
        }
    }
    true
}

/// Image coset of coset 1 under a word — the group element's coset.
pub fn multiplication_action(table: &CosetTable, word: &[VertexId]) -> Result<usize, TraceError> {
    table.trace(1, word)
}

/// Independent order cross-check: close the generator permutations of a
/// completed table under composition and count the distinct permutations.
/// The regular action is faithful, so this equals the group order.
pub fn permutation_closure_order(table: &CosetTable) -> u64 {
    let n = table.order;
    let gens: Vec<Vec<u32>> = (0..table.generators.len())
        .map(|g| (0..n).map(|c| table.step(c, g) as u32).collect())
        .collect();
    let identity: Vec<u32> = (0..n as u32).collect();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut queue = vec![identity];
    while let Some(p) = queue.pop() {
        for g in &gens {
            let q: Vec<u32> = p.iter().map(|&x| g[x as usize]).collect();
            if seen.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    seen.len() as u64
}

/// A map sending each source generator to a word in target generators.
pub type GeneratorMap = BTreeMap<VertexId, Vec<VertexId>>;

/// The generator map a morphism induces on presentations: each source
/// vertex goes to its image vertex as a length-1 word.
pub fn induced_generator_map(m: &Morphism) -> GeneratorMap {
    m.vertex_map()
        .iter()
        .map(|(v, w)| (v.clone(), vec![w.clone()]))
        .collect()
}

/// Why a homomorphism check cannot run.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("source generator {0} is unmapped")]
    UnmappedGenerator(VertexId),
    #[error("image uses unknown target generator {0}")]
    UnknownTargetGenerator(VertexId),
}

/// Check whether a generator map defines a homomorphism into the finite
/// image a completed table realizes: the image of every source relator
/// must act trivially on every coset. Exponents are handled through cycle
/// lengths, never by expanding powers.
pub fn verify_homomorphism(
    genmap: &GeneratorMap,
    source: &GroupPresentation,
    table: &CosetTable,
) -> Result<bool, VerifyError> {
    let mut image_words: BTreeMap<&VertexId, Vec<usize>> = BTreeMap::new();
    for g in source.generators() {
        let word = genmap
            .get(g)
            .ok_or_else(|| VerifyError::UnmappedGenerator(g.clone()))?;
        let mut indices = Vec::with_capacity(word.len());
        for letter in word {
            indices.push(
                table
                    .gen_index(letter)
                    .ok_or_else(|| VerifyError::UnknownTargetGenerator(letter.clone()))?,
            );
        }
        image_words.insert(g, indices);
    }
    for r in source.relators() {
        let mapped: Vec<usize> = r
            .word()
            .iter()
            .flat_map(|letter| image_words[letter].iter().copied())
            .collect();
        if mapped.is_empty() {
            continue;
        }
        let perm = table.word_permutation(&mapped);
        if !power_is_identity(&perm, r.exponent()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerate the cosets of the trivial subgroup. Completion yields the
/// exact group order and the full table; running out of the live-coset
/// budget yields [`Enumeration::Exceeded`], never a wrong number.
pub fn coset_enumerate(
    p: &GroupPresentation,
    limit: usize,
) -> Result<Enumeration, EnumerationError> {
    if limit == 0 {
        return Err(EnumerationError::ZeroLimit);
    }
    for g in p.generators() {
        if !p.has_square(g) {
            return Err(EnumerationError::MissingSquare(g.clone()));
        }
    }
    let generators: Vec<VertexId> = p.generators().to_vec();
    let relators: Vec<(Vec<usize>, u64)> = p
        .relators()
        .iter()
        .map(|r| {
            let word: Vec<usize> = r
                .word()
                .iter()
                .map(|l| {
                    p.generator_index(l)
                        .expect("presentation letters are generators")
                })
                .collect();
            (word, r.exponent())
        })
        .collect();
    let mut e = Enumerator {
        ncols: generators.len(),
        table: Vec::new(),
        parent: Vec::new(),
        live: 0,
        total: 0,
        limit,
        cap: (10usize.saturating_mul(limit)).max(limit + 1000),
    };
    match e.run(&relators) {
        Err(Exceeded) => Ok(Enumeration::Exceeded { limit }),
        Ok(()) => {
            let table = e.compress(generators);
            table.verify_complete(&relators);
            Ok(Enumeration::Completed(table))
        }
    }
}

/// Internal signal: the coset budget ran out.
struct Exceeded;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>, // parent.len() × ncols, UNDEF-padded
    parent: Vec<u32>,
    live: usize,
    total: usize,
    limit: usize,
    cap: usize,
}

impl Enumerator {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn raw(&self, c: u32, g: usize) -> u32 {
        self.table[c as usize * self.ncols + g]
    }

    fn set_raw(&mut self, c: u32, g: usize, value: u32) {
        self.table[c as usize * self.ncols + g] = value;
    }

    /// Read an entry, resolving it to a live representative.
    fn get(&mut self, c: u32, g: usize) -> u32 {
        let e = self.raw(c, g);
        if e == UNDEF {
            UNDEF
        } else {
            self.find(e)
        }
    }

    fn set_pair(&mut self, a: u32, g: usize, b: u32) {
        self.set_raw(a, g, b);
        self.set_raw(b, g, a);
    }

    fn new_coset(&mut self) -> Result<u32, Exceeded> {
        if self.live >= self.limit || self.total >= self.cap {
            return Err(Exceeded);
        }
        let c = self.parent.len() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        self.total += 1;
        Ok(c)
    }

    /// Define a new coset as `a·g` (with the symmetric write).
    fn define(&mut self, a: u32, g: usize) -> Result<u32, Exceeded> {
        let b = self.new_coset()?;
        self.set_pair(a, g, b);
        Ok(b)
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut VecDeque<u32>) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (keep, dead) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[dead as usize] = keep;
        self.live -= 1;
        queue.push_back(dead);
    }

    /// Record that two cosets are equal and propagate all consequences.
    /// Each dead coset's row is transferred onto its class representative;
    /// conflicting entries queue further coincidences.
    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue: VecDeque<u32> = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for g in 0..self.ncols {
                let delta = self.raw(dead, g);
                if delta == UNDEF {
                    continue;
                }
                self.set_raw(dead, g, UNDEF);
                // Dissolve the back-pointer so the edge can be re-rooted at
                // the representatives (a stale pointer here would otherwise
                // shadow the rewrite below and lose the edge).
                if delta != dead {
                    let back = self.raw(delta, g);
                    if back != UNDEF && self.find(back) == self.find(dead) {
                        self.set_raw(delta, g, UNDEF);
                    }
                }
                let mu = self.find(dead);
                let nu = self.find(delta);
                let mu_entry = self.raw(mu, g);
                if mu_entry != UNDEF {
                    self.merge(nu, mu_entry, &mut queue);
                } else {
                    let nu_entry = self.raw(nu, g);
                    if nu_entry != UNDEF {
                        self.merge(mu, nu_entry, &mut queue);
                    } else {
                        self.set_raw(mu, g, nu);
                        self.set_raw(nu, g, mu);
                    }
                }
            }
        }
    }

    /// Walk defined entries forward through positions `[i, to)` of the
    /// virtual word `word^∞`, stopping at the first gap. Long defined
    /// stretches are shortcut by cycle detection on (coset, phase) states,
    /// so huge exponents cost at most one lap around the table.
    fn trace_defined_forward(
        &mut self,
        mut c: u32,
        word: &[usize],
        mut i: u128,
        to: u128,
    ) -> (u32, u128) {
        let len = word.len() as u128;
        let phase0 = (i % len) as u32;
        let mut memo: BTreeMap<u32, u128> = BTreeMap::new();
        let mut jumped = false;
        while i < to {
            let g = word[(i % len) as usize];
            let next = self.get(c, g);
            if next == UNDEF {
                return (c, i);
            }
            c = next;
            i += 1;
            if !jumped && (i % len) as u32 == phase0 {
                if let Some(&prev) = memo.get(&c) {
                    let period = i - prev;
                    i += ((to - i) / period) * period;
                    jumped = true;
                } else {
                    memo.insert(c, i);
                }
            }
        }
        (c, i)
    }

    /// The backward counterpart: walk defined entries from position `j`
    /// down to `down_to`, consuming letter `j-1` at each step (generators
    /// are involutions, so stepping backward uses the same column).
    fn trace_defined_backward(
        &mut self,
        mut c: u32,
        word: &[usize],
        mut j: u128,
        down_to: u128,
    ) -> (u32, u128) {
        let len = word.len() as u128;
        let phase0 = (j % len) as u32;
        let mut memo: BTreeMap<u32, u128> = BTreeMap::new();
        let mut jumped = false;
        while j > down_to {
            let g = word[((j - 1) % len) as usize];
            let next = self.get(c, g);
            if next == UNDEF {
                return (c, j);
            }
            c = next;
            j -= 1;
            if !jumped && (j % len) as u32 == phase0 {
                if let Some(&prev) = memo.get(&c) {
                    let period = prev - j;
                    j -= ((j - down_to) / period) * period;
                    jumped = true;
                } else {
                    memo.insert(c, j);
                }
            }
        }
        (c, j)
    }

    /// Scan one relator from one coset, filling gaps with new cosets
    /// (HLT). Positions `[0, i)` are consumed forward, `[j, n)` backward;
    /// a single-letter gap closes by deduction, a met-in-the-middle
    /// mismatch by coincidence.
    fn scan_and_fill(&mut self, alpha: u32, word: &[usize], exponent: u64) -> Result<(), Exceeded> {
        let len = word.len() as u128;
        let n = len * exponent as u128;
        let mut f = alpha;
        let mut i: u128 = 0;
        let mut b = alpha;
        let mut j: u128 = n;
        loop {
            let (nf, ni) = self.trace_defined_forward(f, word, i, j);
            f = nf;
            i = ni;
            if i == j {
                let (rf, rb) = (self.find(f), self.find(b));
                if rf != rb {
                    self.coincide(rf, rb);
                }
                return Ok(());
            }
            let (nb, nj) = self.trace_defined_backward(b, word, j, i);
            b = nb;
            j = nj;
            if j == i {
                let (rf, rb) = (self.find(f), self.find(b));
                if rf != rb {
                    self.coincide(rf, rb);
                }
                return Ok(());
            }
            let g = word[(i % len) as usize];
            if j == i + 1 {
                // Deduction: both facing entries are open, close the cycle.
                let (rf, rb) = (self.find(f), self.find(b));
                self.set_pair(rf, g, rb);
                return Ok(());
            }
            let rf = self.find(f);
            self.define(rf, g)?;
        }
    }

    fn run(&mut self, relators: &[(Vec<usize>, u64)]) -> Result<(), Exceeded> {
        self.new_coset()?;
        let mut alpha: u32 = 0;
        while (alpha as usize) < self.parent.len() {
            if self.find(alpha) != alpha {
                alpha += 1;
                continue;
            }
            for (word, exponent) in relators {
                self.scan_and_fill(alpha, word, *exponent)?;
                if self.find(alpha) != alpha {
                    break;
                }
            }
            if self.find(alpha) == alpha {
                for g in 0..self.ncols {
                    if self.get(alpha, g) == UNDEF {
                        self.define(alpha, g)?;
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    fn compress(&mut self, generators: Vec<VertexId>) -> CosetTable {
        let mut reps: Vec<u32> = Vec::with_capacity(self.live);
        for c in 0..self.parent.len() as u32 {
            if self.find(c) == c {
                reps.push(c);
            }
        }
        debug_assert_eq!(reps.len(), self.live);
        let index: BTreeMap<u32, u32> = reps
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();
        let mut table = Vec::with_capacity(reps.len() * self.ncols);
        for &rep in &reps {
            for g in 0..self.ncols {
                let e = self.get(rep, g);
                assert_ne!(e, UNDEF, "completed table has an undefined entry");
                table.push(index[&e]);
            }
        }
        CosetTable {
            generators,
            order: reps.len(),
            table,
        }
    }
}

impl CosetTable {
    /// Defense in depth for completed runs: every column must be an
    /// involutory permutation and every relator must close from every
    /// coset. A failure here would be a bug, so it stops the program
    /// rather than returning a wrong order.
    fn verify_complete(&self, relators: &[(Vec<usize>, u64)]) {
        for g in 0..self.generators.len() {
            for c in 0..self.order {
                let d = self.step(c, g);
                assert!(d < self.order, "table entry out of range");
                assert_eq!(self.step(d, g), c, "generator column is not involutory");
            }
        }
        for (word, exponent) in relators {
            let perm = self.word_permutation(word);
            assert!(
                power_is_identity(&perm, *exponent),
                "relator fails to close on the completed table"
            );
        }
    }
}
