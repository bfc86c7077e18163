//! Group presentations of weighted 2-complexes.
//!
//! Every complex presents a group: one involutive generator per vertex
//! (square relators), one pair relator `(uv)^w` per finite-weight edge
//! (infinite-weight edges impose nothing), and one boundary-word relator
//! per cell, powered by the cell weight. Relator words are canonicalized
//! under cyclic rotation and reversal — both are harmless for words in
//! involutive generators, so equal relators always compare equal.
//!
//! The module also computes the F2 abelianization rank (exact because all
//! generators are involutions) and exports presentations as native text,
//! GAP scripts, or Magma scripts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complex::{least_cyclic_listing, VertexId, WeightedComplex};
use crate::weight::Weight;

/// A relator `word^exponent`, with the word canonical under cyclic
/// rotation and reversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    word: Vec<VertexId>,
    exponent: u64,
}

/// Why a relator cannot be formed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelatorError {
    #[error("relator word is empty")]
    EmptyWord,
    #[error("relator exponent must be at least 1")]
    ZeroExponent,
}

impl Relator {
    /// Build a relator, canonicalizing the word.
    pub fn new(
        word: impl IntoIterator<Item = VertexId>,
        exponent: u64,
    ) -> Result<Relator, RelatorError> {
        let word: Vec<VertexId> = word.into_iter().collect();
        if word.is_empty() {
            return Err(RelatorError::EmptyWord);
        }
        if exponent == 0 {
            return Err(RelatorError::ZeroExponent);
        }
        Ok(Relator {
            word: least_cyclic_listing(&word),
            exponent,
        })
    }

    /// The canonical word.
    pub fn word(&self) -> &[VertexId] {
        &self.word
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Total letter count of the expanded relator (`|word| * exponent`),
    /// wide enough that huge exponents cannot overflow.
    pub fn total_length(&self) -> u128 {
        self.word.len() as u128 * self.exponent as u128
    }

    /// The `i`-th letter of the expanded relator, without expanding it.
    pub fn letter(&self, i: u128) -> &VertexId {
        &self.word[(i % self.word.len() as u128) as usize]
    }

    /// Whether this relator says exactly "`g` squared is trivial".
    pub fn is_square_of(&self, g: &VertexId) -> bool {
        self.word.iter().all(|x| x == g) && self.total_length() == 2
    }

    fn render(&self, names: &BTreeMap<&VertexId, String>) -> String {
        let letters: Vec<&str> = self.word.iter().map(|g| names[g].as_str()).collect();
        if letters.len() == 1 {
            format!("{}^{}", letters[0], self.exponent)
        } else {
            format!("({})^{}", letters.join("*"), self.exponent)
        }
    }
}

/// Canonicalize a relator word under cyclic rotation and reversal.
pub fn normalize_relator(word: &[VertexId], exponent: u64) -> Result<Relator, RelatorError> {
    Relator::new(word.iter().cloned(), exponent)
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: BTreeMap<&VertexId, String> =
            self.word.iter().map(|g| (g, g.to_string())).collect();
        f.write_str(&self.render(&names))
    }
}

impl Ord for Relator {
    /// Shorter words first, then lexicographic, then exponent — so squares
    /// precede pair relators precede boundary relators.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word, self.exponent).cmp(&(
            other.word.len(),
            &other.word,
            other.exponent,
        ))
    }
}

impl PartialOrd for Relator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Why a presentation cannot be assembled.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("duplicate generator {0}")]
    DuplicateGenerator(VertexId),
    #[error("relator {relator} uses unknown generator {letter}")]
    UnknownLetter { relator: String, letter: VertexId },
    #[error(transparent)]
    Relator(#[from] RelatorError),
}

/// A finite group presentation: ordered generators plus canonical relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<VertexId>,
    relators: Vec<Relator>,
}

impl GroupPresentation {
    /// Assemble a presentation. Generators are sorted; relators are
    /// sorted and deduplicated; every relator letter must be a generator.
    pub fn new(
        generators: impl IntoIterator<Item = VertexId>,
        relators: impl IntoIterator<Item = Relator>,
    ) -> Result<GroupPresentation, PresentationError> {
        let mut gens: Vec<VertexId> = generators.into_iter().collect();
        gens.sort();
        if let Some(pair) = gens.windows(2).find(|w| w[0] == w[1]) {
            return Err(PresentationError::DuplicateGenerator(pair[0].clone()));
        }
        let gen_set: BTreeSet<&VertexId> = gens.iter().collect();
        let mut rels: Vec<Relator> = Vec::new();
        for r in relators {
            if let Some(letter) = r.word().iter().find(|l| !gen_set.contains(l)) {
                return Err(PresentationError::UnknownLetter {
                    relator: r.to_string(),
                    letter: letter.clone(),
                });
            }
            rels.push(r);
        }
        rels.sort();
        rels.dedup();
        Ok(GroupPresentation {
            generators: gens,
            relators: rels,
        })
    }

    pub fn generators(&self) -> &[VertexId] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    /// Position of a generator in the sorted generator list.
    pub fn generator_index(&self, g: &VertexId) -> Option<usize> {
        self.generators.binary_search(g).ok()
    }

    /// Whether the presentation contains the square relator for `g`.
    pub fn has_square(&self, g: &VertexId) -> bool {
        self.relators.iter().any(|r| r.is_square_of(g))
    }

    /// Native text format: a `gens:` line, then one `rel:` line per
    /// relator. No trailing newline.
    pub fn to_native(&self) -> String {
        let names: BTreeMap<&VertexId, String> =
            self.generators.iter().map(|g| (g, g.to_string())).collect();
        let mut lines = vec![format!(
            "gens:{}",
            self.generators
                .iter()
                .map(|g| format!(" {g}"))
                .collect::<String>()
        )];
        for r in &self.relators {
            lines.push(format!("rel: {}", r.render(&names)));
        }
        lines.join("\n")
    }

    /// A GAP script defining the presented group as `G`. Generators are
    /// referenced positionally (`F.1`, `F.2`, ...), so sanitized names only
    /// affect printing inside GAP.
    pub fn to_gap(&self) -> String {
        if self.generators.is_empty() {
            return "F := FreeGroup(0);;\nrels := [];;\nG := F / rels;;".to_owned();
        }
        let sanitized = sanitize_identifiers(&self.generators);
        let names: BTreeMap<&VertexId, String> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g, format!("F.{}", i + 1)))
            .collect();
        let quoted: Vec<String> = sanitized.iter().map(|s| format!("\"{s}\"")).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.render(&names)).collect();
        format!(
            "F := FreeGroup({});;\nrels := [ {} ];;\nG := F / rels;;",
            quoted.join(", "),
            rels.join(", ")
        )
    }

    /// A Magma statement defining the presented group as `G`.
    pub fn to_magma(&self) -> String {
        if self.generators.is_empty() {
            return "G<t> := Group< t | t >;".to_owned();
        }
        let sanitized = sanitize_identifiers(&self.generators);
        let names: BTreeMap<&VertexId, String> = self
            .generators
            .iter()
            .zip(sanitized.iter())
            .map(|(g, s)| (g, s.clone()))
            .collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.render(&names)).collect();
        format!(
            "G<{}> := Group< {} | {} >;",
            sanitized.join(", "),
            sanitized.join(", "),
            rels.join(", ")
        )
    }

    /// Parse the native text format back into a presentation. Relators are
    /// re-normalized, so parsing an exported presentation reproduces it
    /// exactly. Generator names containing whitespace or the punctuation
    /// used by the grammar (`(`, `)`, `*`, `^`) cannot round-trip.
    pub fn parse_native(text: &str) -> Result<GroupPresentation, NativeParseError> {
        let err = |line: usize, message: &str| NativeParseError {
            line,
            message: message.to_owned(),
        };
        let mut generators: Option<Vec<VertexId>> = None;
        let mut relators: Vec<Relator> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if generators.is_some() {
                    return Err(err(lineno, "second gens: line"));
                }
                generators = Some(rest.split_whitespace().map(VertexId::from).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let known: &[VertexId] = match &generators {
                    None => return Err(err(lineno, "rel: line before gens: line")),
                    Some(g) => g,
                };
                let rest = rest.trim();
                let caret = rest
                    .rfind('^')
                    .ok_or_else(|| err(lineno, "relator is missing ^exponent"))?;
                let (word_part, exp_part) = rest.split_at(caret);
                let exponent: u64 = exp_part[1..]
                    .parse()
                    .map_err(|_| err(lineno, "exponent is not a positive integer"))?;
                if exponent == 0 {
                    return Err(err(lineno, "exponent must be at least 1"));
                }
                let word_part = word_part.trim();
                let letters: Vec<&str> = match word_part
                    .strip_prefix('(')
                    .and_then(|w| w.strip_suffix(')'))
                {
                    Some(inner) => inner.split('*').map(str::trim).collect(),
                    None => vec![word_part],
                };
                let mut word: Vec<VertexId> = Vec::with_capacity(letters.len());
                for l in letters {
                    if l.is_empty() {
                        return Err(err(lineno, "empty letter in relator word"));
                    }
                    let g = VertexId::from(l);
                    if !known.contains(&g) {
                        return Err(err(lineno, &format!("unknown generator {g}")));
                    }
                    word.push(g);
                }
                relators
                    .push(Relator::new(word, exponent).expect("nonempty word, positive exponent"));
            } else {
                return Err(err(lineno, "unrecognized line"));
            }
        }
        let generators =
            generators.ok_or_else(|| err(text.lines().count() + 1, "missing gens: line"))?;
        GroupPresentation::new(generators, relators).map_err(|e| err(0, &e.to_string()))
    }
}

/// A syntax error in the native presentation format.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct NativeParseError {
    pub line: usize,
    pub message: String,
}

/// The group presentation of a complex: squares for vertices, pair
/// relators for finite-weight edges, boundary-word relators for cells.
/// Complexes are valid by construction, so this cannot fail.
pub fn presentation_of(c: &WeightedComplex) -> GroupPresentation {
    let mut relators: Vec<Relator> = Vec::new();
    for v in c.vertices() {
        relators.push(Relator::new([v.clone()], 2).expect("square relator"));
    }
    for (key, &w) in c.edges() {
        if let Weight::Finite(e) = w {
            let (u, v) = key.endpoints();
            relators.push(Relator::new([u.clone(), v.clone()], e).expect("pair relator"));
        }
    }
    for (cycle, &w) in c.cells() {
        let e = match w {
            Weight::Finite(e) => e,
            Weight::Infinity => unreachable!("cell weights are finite"),
        };
        relators.push(Relator::new(cycle.vertices().iter().cloned(), e).expect("boundary relator"));
    }
    GroupPresentation::new(c.vertices().iter().cloned(), relators)
        .expect("all relator letters are vertices")
}

/// Why the abelianization rank cannot be computed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbelianizationError {
    #[error("generator {0} has no square relator")]
    MissingSquare(VertexId),
}

/// The number `d` with abelianization isomorphic to `(Z/2)^d`, computed by
/// F2 Gaussian elimination: one row per odd-exponent relator (the letter
/// counts of its word, mod 2); even exponents contribute nothing. Exact
/// because every generator is an involution, which is why each generator
/// must carry its square relator.
pub fn abelianization_rank(p: &GroupPresentation) -> Result<usize, AbelianizationError> {
    for g in p.generators() {
        if !p.has_square(g) {
            return Err(AbelianizationError::MissingSquare(g.clone()));
        }
    }
    let n = p.generators().len();
    let index: BTreeMap<&VertexId, usize> = p
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| (g, i))
        .collect();
    let width = n.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for r in p.relators() {
        if r.exponent() % 2 == 0 {
            continue;
        }
        let mut row = vec![0u64; width];
        for letter in r.word() {
            let i = index[letter];
            row[i / 64] ^= 1 << (i % 64);
        }
        if row.iter().any(|&w| w != 0) {
            rows.push(row);
        }
    }
    Ok(n - f2_rank(rows))
}

fn first_set_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn f2_rank(rows: Vec<Vec<u64>>) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for mut row in rows {
        loop {
            match first_set_bit(&row) {
                None => break,
                Some(p) => {
                    if let Some(b) = basis.iter().find(|b| first_set_bit(b) == Some(p)) {
                        for (r, w) in row.iter_mut().zip(b.iter()) {
                            *r ^= w;
                        }
                    } else {
                        basis.push(row);
                        break;
                    }
                }
            }
        }
    }
    basis.len()
}

/// Deterministically sanitize names for GAP/Magma: characters outside
/// `[A-Za-z0-9_]` become `_`; names that are empty or start with a digit
/// get a `g` prefix; collisions get `_2`, `_3`, ... suffixes in order.
pub fn sanitize_identifiers(names: &[VertexId]) -> Vec<String> {
    let mut used: BTreeSet<String> = BTreeSet::new();
    names
        .iter()
        .map(|n| {
            let mut s: String = n
                .as_str()
                .chars()
                .map(|c| {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        c
                    } else {
                        '_'
                    }
                })
                .collect();
            if s.is_empty() || s.starts_with(|c: char| c.is_ascii_digit()) {
                s.insert(0, 'g');
            }
            if used.contains(&s) {
                let mut k = 2;
                loop {
                    let candidate = format!("{s}_{k}");
                    if !used.contains(&candidate) {
                        s = candidate;
                        break;
                    }
                    k += 1;
                }
            }
            used.insert(s.clone());
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ComplexData, RawCell};
    use crate::testkit;

    fn v(s: &str) -> VertexId {
        VertexId::new(s)
    }

    fn word(parts: &[&str]) -> Vec<VertexId> {
        parts.iter().map(|s| v(s)).collect()
    }

    #[test]
    fn relators_normalize_under_rotation_and_reversal() {
        let canonical = normalize_relator(&word(&["a", "b", "c"]), 2).unwrap();
        assert_eq!(canonical.word(), word(&["a", "b", "c"]).as_slice());
        assert_eq!(
            normalize_relator(&word(&["b", "c", "a"]), 2).unwrap(),
            canonical
        );
        assert_eq!(
            normalize_relator(&word(&["c", "b", "a"]), 2).unwrap(),
            canonical
        );
        let fixed = normalize_relator(&word(&["v"]), 2).unwrap();
        assert_eq!(fixed.word(), word(&["v"]).as_slice());
        assert_eq!(normalize_relator(&[], 2), Err(RelatorError::EmptyWord));
        assert_eq!(
            normalize_relator(&word(&["v"]), 0),
            Err(RelatorError::ZeroExponent)
        );
    }

    #[test]
    fn relator_normalization_is_constant_on_random_orbits() {
        let mut rng = testkit::rng(171);
        for _ in 0..200 {
            let c = testkit::random_complex(&mut rng, 6);
            for cycle in c.cells().keys() {
                let base = cycle.vertices().to_vec();
                let canonical = normalize_relator(&base, 2).unwrap();
                for rot in 0..base.len() {
                    let mut turned: Vec<VertexId> = base.clone();
                    turned.rotate_left(rot);
                    assert_eq!(normalize_relator(&turned, 2).unwrap(), canonical);
                    turned.reverse();
                    assert_eq!(normalize_relator(&turned, 2).unwrap(), canonical);
                }
            }
        }
    }

    #[test]
    fn point_presentation_exports_exactly() {
        let c = WeightedComplex::from_parts([v("v")], [], []).unwrap();
        let p = presentation_of(&c);
        assert_eq!(p.to_native(), "gens: v\nrel: v^2");
    }

    #[test]
    fn pair_presentation_exports_exactly() {
        let c = WeightedComplex::from_data(&ComplexData {
            vertices: vec!["u".into(), "v".into()],
            edges: vec![("u".into(), "v".into(), Weight::Finite(3))],
            cells: vec![],
        })
        .unwrap();
        let p = presentation_of(&c);
        assert_eq!(p.to_native(), "gens: u v\nrel: u^2\nrel: v^2\nrel: (u*v)^3");
        assert_eq!(
            p.to_gap(),
            "F := FreeGroup(\"u\", \"v\");;\nrels := [ F.1^2, F.2^2, (F.1*F.2)^3 ];;\nG := F / rels;;"
        );
        assert_eq!(
            p.to_magma(),
            "G<u, v> := Group< u, v | u^2, v^2, (u*v)^3 >;"
        );
    }

    #[test]
    fn infinite_edges_contribute_no_relator() {
        let c = WeightedComplex::from_data(&ComplexData {
            vertices: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![
                ("a".into(), "b".into(), Weight::Infinity),
                ("b".into(), "c".into(), Weight::Infinity),
                ("a".into(), "c".into(), Weight::Infinity),
            ],
            cells: vec![RawCell {
                boundary: vec!["a".into(), "b".into(), "c".into()],
                weight: Weight::Finite(2),
            }],
        })
        .unwrap();
        let p = presentation_of(&c);
        assert_eq!(
            p.to_native(),
            "gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: (a*b*c)^2"
        );
    }

    #[test]
    fn empty_presentation_exports() {
        let p = presentation_of(&WeightedComplex::empty());
        assert_eq!(p.to_native(), "gens:");
        assert_eq!(
            p.to_gap(),
            "F := FreeGroup(0);;\nrels := [];;\nG := F / rels;;"
        );
        assert_eq!(p.to_magma(), "G<t> := Group< t | t >;");
        assert_eq!(GroupPresentation::parse_native("gens:").unwrap(), p);
    }

    #[test]
    fn native_roundtrip_on_random_complexes() {
        let mut rng = testkit::rng(48);
        for _ in 0..120 {
            let c = testkit::random_complex(&mut rng, 6);
            let p = presentation_of(&c);
            let back = GroupPresentation::parse_native(&p.to_native()).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn native_parse_reports_line_errors() {
        let bad = |text: &str| GroupPresentation::parse_native(text).unwrap_err();
        assert_eq!(bad("rel: v^2").line, 1);
        assert_eq!(bad("gens: v\nrel: v").line, 2);
        assert_eq!(bad("gens: v\nrel: w^2").line, 2);
        assert_eq!(bad("gens: v\nrel: v^0").line, 2);
        assert_eq!(bad("gens: v\nnonsense").line, 2);
        assert_eq!(bad("gens: v\ngens: w").line, 2);
        assert!(bad("").message.contains("missing gens"));
        assert_eq!(bad("gens: v\nrel: (v*)^2").line, 2);
    }

    #[test]
    fn parse_renormalizes_relators() {
        let p = GroupPresentation::parse_native(
            "gens: a b c\nrel: a^2\nrel: b^2\nrel: c^2\nrel: (c*b*a)^2",
        )
        .unwrap();
        assert_eq!(
            p.relators().last().unwrap().word(),
            word(&["a", "b", "c"]).as_slice()
        );
    }

    #[test]
    fn presentation_rejects_duplicate_generators_and_unknown_letters() {
        assert!(matches!(
            GroupPresentation::new([v("a"), v("a")], []),
            Err(PresentationError::DuplicateGenerator(_))
        ));
        let r = Relator::new([v("z")], 2).unwrap();
        assert!(matches!(
            GroupPresentation::new([v("a")], [r]),
            Err(PresentationError::UnknownLetter { .. })
        ));
    }

    #[test]
    fn abelianization_of_the_discrete_complex_is_full_rank() {
        let c = WeightedComplex::from_parts([v("a"), v("b"), v("c")], [], []).unwrap();
        assert_eq!(abelianization_rank(&presentation_of(&c)), Ok(3));
    }

    #[test]
    fn abelianization_of_all_weight_two_edges_is_full_rank() {
        // Pairwise weight-2 edges force commutation only: (Z/2)^3.
        let c = WeightedComplex::from_data(&ComplexData {
            vertices: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![
                ("a".into(), "b".into(), Weight::Finite(2)),
                ("b".into(), "c".into(), Weight::Finite(2)),
                ("a".into(), "c".into(), Weight::Finite(2)),
            ],
            cells: vec![],
        })
        .unwrap();
        assert_eq!(abelianization_rank(&presentation_of(&c)), Ok(3));
    }

    #[test]
    fn abelianization_of_a_symmetric_group_presentation_is_one() {
        // Adjacent weight-3 edges identify all generators mod 2.
        let c = WeightedComplex::from_data(&ComplexData {
            vertices: vec!["v1".into(), "v2".into(), "v3".into()],
            edges: vec![
                ("v1".into(), "v2".into(), Weight::Finite(3)),
                ("v2".into(), "v3".into(), Weight::Finite(3)),
                ("v1".into(), "v3".into(), Weight::Finite(2)),
            ],
            cells: vec![],
        })
        .unwrap();
        assert_eq!(abelianization_rank(&presentation_of(&c)), Ok(1));
    }

    #[test]
    fn abelianization_requires_square_relators() {
        let p = GroupPresentation::new([v("a")], [Relator::new([v("a")], 3).unwrap()]).unwrap();
        assert_eq!(
            abelianization_rank(&p),
            Err(AbelianizationError::MissingSquare(v("a")))
        );
        // The doubled-word spelling of the square is accepted.
        let q =
            GroupPresentation::new([v("a")], [Relator::new([v("a"), v("a")], 1).unwrap()]).unwrap();
        assert_eq!(abelianization_rank(&q), Ok(1));
    }

    #[test]
    fn abelianization_rank_survives_renaming_and_reordering() {
        let mut rng = testkit::rng(93);
        for _ in 0..60 {
            let c = testkit::random_complex(&mut rng, 5);
            let p = presentation_of(&c);
            let d = abelianization_rank(&p).unwrap();
            let renamed = c
                .rename_vertices(|x| VertexId::new(format!("zz_{x}")))
                .unwrap();
            assert_eq!(abelianization_rank(&presentation_of(&renamed)), Ok(d));
        }
    }

    #[test]
    fn presentation_of_a_union_concatenates_presentations() {
        let mut rng = testkit::rng(17);
        for _ in 0..40 {
            let a = testkit::random_complex(&mut rng, 4);
            let b = testkit::random_complex(&mut rng, 4);
            let union = crate::category::disjoint_union(&[a.clone(), b.clone()]);
            let got = presentation_of(&union.object);
            let expected_gens: Vec<VertexId> = got.generators().to_vec();
            let mut expected_rels: Vec<Relator> = Vec::new();
            for (i, part) in [a, b].into_iter().enumerate() {
                let p = presentation_of(&part);
                for r in p.relators() {
                    let renamed: Vec<VertexId> = r
                        .word()
                        .iter()
                        .map(|x| VertexId::new(format!("{i}:{x}")))
                        .collect();
                    expected_rels.push(Relator::new(renamed, r.exponent()).unwrap());
                }
            }
            let expected = GroupPresentation::new(expected_gens, expected_rels).unwrap();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn sanitization_is_deterministic_and_collision_free() {
        let names = vec![v("a b"), v("a_b"), v("1x"), v(""), v("ok")];
        assert_eq!(
            sanitize_identifiers(&names),
            vec!["a_b", "a_b_2", "g1x", "g", "ok"]
        );
        let tricky = vec![v("x"), v("x"), v("x_2")];
        assert_eq!(sanitize_identifiers(&tricky), vec!["x", "x_2", "x_2_2"]);
    }
}
