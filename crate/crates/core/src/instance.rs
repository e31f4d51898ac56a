//! JSON instance files.
//!
//! ```json
//! {"kind": "intervals", "name": "three", "items": [{"center": 0}, {"center": 2, "length": 1, "weight": 3}]}
//! {"kind": "squares", "items": [{"x": 0, "y": 0}, {"x": 3, "y": 4, "weight": 2}]}
//! ```
//!
//! `length` and `weight` default to 1. Floats are written in shortest
//! round-trip form, so `parse(emit(f)) == f` holds bit for bit.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{Collection, Interval};
use crate::squares::UnitSquare;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("items[{index}].{field}: {message}")]
    Field { index: usize, field: &'static str, message: String },
    #[error("instance has no items")]
    Empty,
}

fn is_one(v: &f64) -> bool {
    *v == 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalItem {
    pub center: f64,
    #[serde(skip_serializing_if = "is_one")]
    pub length: f64,
    #[serde(skip_serializing_if = "is_one")]
    pub weight: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SquareItem {
    pub x: f64,
    pub y: f64,
    #[serde(skip_serializing_if = "is_one")]
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InstanceFile {
    Intervals {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        items: Vec<IntervalItem>,
    },
    Squares {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        items: Vec<SquareItem>,
    },
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawKind {
    Intervals,
    Squares,
}

// Flat parse target; an internally tagged enum would buffer the input and
// lose line/column information.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    kind: RawKind,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    seed: Option<u64>,
    items: Vec<RawItem>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawItem {
    center: Option<f64>,
    length: Option<f64>,
    x: Option<f64>,
    y: Option<f64>,
    weight: Option<f64>,
}

/// A validated instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Intervals(Collection),
    Squares(Vec<UnitSquare>),
}

impl InstanceFile {
    pub fn from_collection(collection: &Collection, name: Option<String>, seed: Option<u64>) -> Self {
        let items = collection
            .iter()
            .map(|it| IntervalItem { center: it.center(), length: it.length(), weight: it.weight() })
            .collect();
        InstanceFile::Intervals { name, seed, items }
    }

    pub fn from_squares(squares: &[UnitSquare], name: Option<String>, seed: Option<u64>) -> Self {
        let items = squares.iter().map(|s| SquareItem { x: s.x, y: s.y, weight: s.weight }).collect();
        InstanceFile::Squares { name, seed, items }
    }

    pub fn len(&self) -> usize {
        match self {
            InstanceFile::Intervals { items, .. } => items.len(),
            InstanceFile::Squares { items, .. } => items.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn parse_str(text: &str) -> Result<Self, InstanceError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| InstanceError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let field = |index, field, message: &str| InstanceError::Field { index, field, message: message.to_string() };
        let required = |index, name, v: Option<f64>| v.ok_or_else(|| field(index, name, "missing"));
        let forbidden = |index, name, v: Option<f64>, kind: &str| match v {
            Some(_) => Err(field(index, name, &format!("not allowed for kind {kind}"))),
            None => Ok(()),
        };
        Ok(match raw.kind {
            RawKind::Intervals => {
                let mut items = Vec::with_capacity(raw.items.len());
                for (i, it) in raw.items.into_iter().enumerate() {
                    forbidden(i, "x", it.x, "intervals")?;
                    forbidden(i, "y", it.y, "intervals")?;
                    items.push(IntervalItem {
                        center: required(i, "center", it.center)?,
                        length: it.length.unwrap_or(1.0),
                        weight: it.weight.unwrap_or(1.0),
                    });
                }
                InstanceFile::Intervals { name: raw.name, seed: raw.seed, items }
            }
            RawKind::Squares => {
                let mut items = Vec::with_capacity(raw.items.len());
                for (i, it) in raw.items.into_iter().enumerate() {
                    forbidden(i, "center", it.center, "squares")?;
                    forbidden(i, "length", it.length, "squares")?;
                    items.push(SquareItem {
                        x: required(i, "x", it.x)?,
                        y: required(i, "y", it.y)?,
                        weight: it.weight.unwrap_or(1.0),
                    });
                }
                InstanceFile::Squares { name: raw.name, seed: raw.seed, items }
            }
        })
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    /// Validates every item, reporting the first offending field.
    pub fn validate(&self) -> Result<Instance, InstanceError> {
        if self.is_empty() {
            return Err(InstanceError::Empty);
        }
        let field_err = |index, field, message: String| InstanceError::Field { index, field, message };
        match self {
            InstanceFile::Intervals { items, .. } => {
                let mut out = Vec::with_capacity(items.len());
                for (i, it) in items.iter().enumerate() {
                    if !it.center.is_finite() {
                        return Err(field_err(i, "center", "must be finite".into()));
                    }
                    if !(it.length.is_finite() && it.length > 0.0) {
                        return Err(field_err(i, "length", format!("must be positive, got {}", it.length)));
                    }
                    if !(it.weight.is_finite() && it.weight > 0.0) {
                        return Err(field_err(i, "weight", format!("must be positive, got {}", it.weight)));
                    }
                    out.push(Interval::new(it.center, it.length, it.weight).map_err(|e| field_err(i, "center", e.to_string()))?);
                }
                Ok(Instance::Intervals(Collection::new(out)))
            }
            InstanceFile::Squares { items, .. } => {
                let mut out = Vec::with_capacity(items.len());
                for (i, s) in items.iter().enumerate() {
                    if !s.x.is_finite() {
                        return Err(field_err(i, "x", "must be finite".into()));
                    }
                    if !s.y.is_finite() {
                        return Err(field_err(i, "y", "must be finite".into()));
                    }
                    let sq = UnitSquare::new(s.x, s.y, s.weight).map_err(|e| field_err(i, "weight", e.to_string()))?;
                    out.push(sq);
                }
                Ok(Instance::Squares(out))
            }
        }
    }
}

pub fn parse_instance(path: &Path) -> Result<Instance, InstanceError> {
    let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io { path: path.display().to_string(), source })?;
    InstanceFile::parse_str(&text)?.validate()
}
