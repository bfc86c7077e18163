//! The canonical JSON document format for complexes and vertex maps.
//!
//! A complex document is a single JSON object
//! `{"vertices": [...], "edges": [[u, v, w], ...], "cells": [{"boundary":
//! [...], "weight": w}, ...]}` where weights are naturals or the string
//! `"inf"`. Parsing accepts any ordering and any boundary listing of each
//! cycle; serialization is canonical — vertices sorted, each edge with its
//! lexicographically smaller endpoint first and edges sorted, boundaries
//! in canonical cycle form and cells sorted by boundary — so equal
//! complexes produce byte-identical documents.
//!
//! A vertex-map document is `{"map": {"source-vertex": "target-vertex",
//! ...}}`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::complex::{ComplexData, VertexId, Violation, WeightedComplex};

/// Why a document failed to load.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("line {line} column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

fn syntax_error(e: serde_json::Error) -> DocumentError {
    let full = e.to_string();
    // serde_json appends " at line L column C"; the position is reported
    // structurally, so strip the suffix from the message.
    let message = full.split(" at line ").next().unwrap_or(&full).to_owned();
    DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message,
    }
}

/// Parse a complex document, running full validation.
pub fn parse(text: &str) -> Result<WeightedComplex, DocumentError> {
    let data: ComplexData = serde_json::from_str(text).map_err(syntax_error)?;
    WeightedComplex::from_data(&data).map_err(DocumentError::Invalid)
}

/// Serialize a complex canonically: equal complexes give byte-identical
/// text.
pub fn serialize(c: &WeightedComplex) -> String {
    serde_json::to_string(&c.to_data()).expect("complex data always serializes")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDocument {
    map: BTreeMap<String, String>,
}

/// Parse a vertex-map document `{"map": {...}}` into a vertex map.
pub fn parse_vertex_map(text: &str) -> Result<BTreeMap<VertexId, VertexId>, DocumentError> {
    let doc: MapDocument = serde_json::from_str(text).map_err(syntax_error)?;
    Ok(doc
        .map
        .into_iter()
        .map(|(k, v)| (VertexId::new(k), VertexId::new(v)))
        .collect())
}
