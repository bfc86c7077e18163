//! Weighted 2-complexes, their category, and the groups they present.
//!
//! This crate models finite weighted 2-complexes — simple graphs with
//! distinguished boundary cycles, every element carrying a weight — together
//! with their morphisms, quotients, products and coproducts, equalizers and
//! coequalizers, and the free/underlying adjunction with plain vertex sets.
//! Each complex presents a group: one involution per vertex, one
//! `(uv)^w`-style relator per finite-weight edge, one boundary-word relator
//! per cell. A verification layer (coset enumeration and mod-2
//! abelianization) computes group-level facts by independent means so the
//! combinatorial layer can be cross-checked.
//!
//! The `wc2` binary exposes building, validation, presentation export, order
//! computation, abelianization, binary operations, and homomorphism checks
//! over a small JSON interchange format.

pub mod builders;
pub mod category;
pub mod cli;
pub mod complex;
pub mod coset;
pub mod document;
pub mod morphism;
pub mod presentation;
pub mod quotient;
pub mod testkit;
pub mod weight;

pub(crate) mod util;

pub use complex::{ComplexData, Cycle, EdgeKey, RawCell, VertexId, Violation, WeightedComplex};
pub use weight::Weight;
