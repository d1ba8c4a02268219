//! Text and structured-record formats.
//!
//! Vectors are bit strings, index 0 leftmost. Function specs are JSON
//! objects `{"n": 10, "indices": [5, 7, 8], "kind": "polynomial"}` where
//! `kind` is `"valued"` (A(F), read as π) or `"polynomial"` (B(E), read as γ).
//! A [`TransformRecord`] carries the same three fields plus the output bit
//! string and op counts, so it can be fed back in as a spec.

use std::path::Path;

use sbf_core::{FunctionSpec, IndexKind, ParityCheckCounter, ReducedVector, TransformResult};
use serde::{Deserialize, Serialize};

use crate::{Result, ToolError};

/// Parses `"5,7,8"` (whitespace tolerated). An empty string is the empty set.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|e| ToolError::parse("index list", format!("{tok:?}: {e}")))
        })
        .collect()
}

/// Joins indices with `sep`.
pub fn join_indices(indices: &[usize], sep: &str) -> String {
    indices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn parse_kind(s: &str) -> Result<IndexKind> {
    match s {
        "valued" => Ok(IndexKind::Valued),
        "polynomial" => Ok(IndexKind::Polynomial),
        other => Err(ToolError::parse("kind", other)),
    }
}

pub fn spec_from_json(text: &str) -> Result<FunctionSpec> {
    Ok(serde_json::from_str(text)?)
}

pub fn spec_to_json(spec: &FunctionSpec) -> Result<String> {
    Ok(serde_json::to_string(spec)?)
}

/// Reads a spec record from a file, or from stdin when `path` is `-`.
pub fn read_spec(path: &Path) -> Result<FunctionSpec> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path)?
    };
    spec_from_json(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpsRecord {
    pub primitive_checks: u64,
    pub accumulation_xors: u64,
}

impl From<ParityCheckCounter> for OpsRecord {
    fn from(c: ParityCheckCounter) -> Self {
        OpsRecord {
            primitive_checks: c.primitive_checks,
            accumulation_xors: c.accumulation_xors,
        }
    }
}

/// Machine-readable transform output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub n: usize,
    pub indices: Vec<usize>,
    pub kind: IndexKind,
    pub vector: String,
    pub ops: OpsRecord,
}

impl TransformRecord {
    /// `kind` is the reading of the *output* vector.
    pub fn new(result: &TransformResult, kind: IndexKind) -> Self {
        TransformRecord {
            n: result.vector.n(),
            indices: result.vector.positions().collect(),
            kind,
            vector: result.vector.to_string(),
            ops: result.ops.into(),
        }
    }

    pub fn vector(&self) -> Result<ReducedVector> {
        Ok(self.vector.parse()?)
    }
}
