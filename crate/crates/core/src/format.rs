//! JSON structure files.
//!
//! Every document carries a `kind` tag:
//!
//! ```text
//! {"kind":"group","order":n,"op":[[..],..]}
//! {"kind":"semilattice","size":n,"meet":[[..],..]}
//! {"kind":"skew_brace","order":n,"add":[[..],..],"mul":[[..],..]}
//! {"kind":"dual_weak_brace","order":n,"add":[[..],..],"mul":[[..],..]}
//! {"kind":"strong_semilattice","semilattice":{..},"braces":{"0":{..},..},"homs":{"0>1":[..],..}}
//! {"kind":"solution","order":n,"map":[[[u,v],..],..]}
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    validate_group, validate_semilattice, FiniteGroupTable, GroupError, SemilatticeError,
    SemilatticeTable,
};
use crate::brace::{
    validate_dual_weak_brace, validate_skew_brace, BraceError, DualWeakBrace, SkewBrace,
};
use crate::compose::{compose, ComposeError, SpecError, StrongSemilatticeSpec};
use crate::solution::{SolutionError, SolutionTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Document {
    Group {
        order: usize,
        op: Vec<Vec<usize>>,
    },
    Semilattice {
        size: usize,
        meet: Vec<Vec<usize>>,
    },
    SkewBrace {
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    },
    DualWeakBrace {
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    },
    StrongSemilattice {
        semilattice: Box<Document>,
        braces: BTreeMap<String, Document>,
        homs: BTreeMap<String, Vec<usize>>,
    },
    Solution {
        order: usize,
        map: Vec<Vec<[usize; 2]>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("group: {0}")]
    Group(#[from] GroupError),
    #[error("semilattice: {0}")]
    Semilattice(#[from] SemilatticeError),
    #[error("brace: {0}")]
    Brace(#[from] BraceError),
    #[error("strong semilattice: {0}")]
    Spec(#[from] SpecError),
    #[error("solution: {0}")]
    Solution(#[from] SolutionError),
    #[error(transparent)]
    Compose(#[from] ComposeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at byte {offset} (line {line}, column {column}): {message}")]
    Parse {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("declared size {declared} but the table has {rows} rows")]
    SizeMismatch { declared: usize, rows: usize },
    #[error("expected a {expected} document, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("malformed key {0:?}")]
    BadKey(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
}

/// A validated structure of any supported kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Group(FiniteGroupTable),
    Semilattice(SemilatticeTable),
    SkewBrace(SkewBrace),
    DualWeakBrace(DualWeakBrace),
    Spec(StrongSemilatticeSpec),
    Solution(SolutionTable),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Group(_) => "group",
            Structure::Semilattice(_) => "semilattice",
            Structure::SkewBrace(_) => "skew_brace",
            Structure::DualWeakBrace(_) => "dual_weak_brace",
            Structure::Spec(_) => "strong_semilattice",
            Structure::Solution(_) => "solution",
        }
    }

    /// The structure viewed as a dual weak brace, composing specs and
    /// promoting groups to trivial braces.
    pub fn to_dual_weak_brace(&self) -> Option<DualWeakBrace> {
        match self {
            Structure::Group(g) => Some(SkewBrace::trivial(g).to_dual_weak_brace()),
            Structure::Semilattice(y) => Some(DualWeakBrace::trivial(
                &crate::algebra::CliffordTable::from_table(y.table().clone())
                    .expect("semilattices are Clifford"),
            )),
            Structure::SkewBrace(b) => Some(b.to_dual_weak_brace()),
            Structure::DualWeakBrace(s) => Some(s.clone()),
            Structure::Spec(spec) => compose(spec).ok(),
            Structure::Solution(_) => None,
        }
    }

    pub fn to_document(&self) -> Document {
        match self {
            Structure::Group(g) => Document::Group {
                order: g.order(),
                op: g.rows(),
            },
            Structure::Semilattice(y) => Document::Semilattice {
                size: y.size(),
                meet: y.rows(),
            },
            Structure::SkewBrace(b) => Document::SkewBrace {
                order: b.order(),
                add: b.add_group().rows(),
                mul: b.mul_group().rows(),
            },
            Structure::DualWeakBrace(s) => Document::DualWeakBrace {
                order: s.order(),
                add: s.add_table().rows(),
                mul: s.mul_table().rows(),
            },
            Structure::Spec(spec) => Document::StrongSemilattice {
                semilattice: Box::new(
                    Structure::Semilattice(spec.semilattice().clone()).to_document(),
                ),
                braces: spec
                    .braces()
                    .iter()
                    .enumerate()
                    .map(|(i, b)| (i.to_string(), Structure::SkewBrace(b.clone()).to_document()))
                    .collect(),
                homs: spec
                    .homs()
                    .iter()
                    .map(|(&(a, b), m)| (format!("{a}>{b}"), m.clone()))
                    .collect(),
            },
            Structure::Solution(r) => Document::Solution {
                order: r.order(),
                map: r
                    .rows()
                    .into_iter()
                    .map(|row| row.into_iter().map(|(u, v)| [u, v]).collect())
                    .collect(),
            },
        }
    }
}

impl Document {
    fn kind(&self) -> &'static str {
        match self {
            Document::Group { .. } => "group",
            Document::Semilattice { .. } => "semilattice",
            Document::SkewBrace { .. } => "skew_brace",
            Document::DualWeakBrace { .. } => "dual_weak_brace",
            Document::StrongSemilattice { .. } => "strong_semilattice",
            Document::Solution { .. } => "solution",
        }
    }

    pub fn into_structure(self) -> Result<Structure, LoadError> {
        fn sized<T>(declared: usize, rows: &[T]) -> Result<(), LoadError> {
            if declared == rows.len() {
                Ok(())
            } else {
                Err(LoadError::SizeMismatch {
                    declared,
                    rows: rows.len(),
                })
            }
        }
        let invalid = |e: ValidationError| LoadError::Validation(e);
        Ok(match self {
            Document::Group { order, op } => {
                sized(order, &op)?;
                Structure::Group(validate_group(&op).map_err(|e| invalid(e.into()))?)
            }
            Document::Semilattice { size, meet } => {
                sized(size, &meet)?;
                Structure::Semilattice(validate_semilattice(&meet).map_err(|e| invalid(e.into()))?)
            }
            Document::SkewBrace { order, add, mul } => {
                sized(order, &add)?;
                sized(order, &mul)?;
                Structure::SkewBrace(
                    validate_skew_brace(&add, &mul).map_err(|e| invalid(e.into()))?,
                )
            }
            Document::DualWeakBrace { order, add, mul } => {
                sized(order, &add)?;
                sized(order, &mul)?;
                Structure::DualWeakBrace(
                    validate_dual_weak_brace(&add, &mul).map_err(|e| invalid(e.into()))?,
                )
            }
            Document::StrongSemilattice {
                semilattice,
                braces,
                homs,
            } => {
                let found = semilattice.kind();
                let Structure::Semilattice(y) = semilattice.into_structure()? else {
                    return Err(LoadError::WrongKind {
                        expected: "semilattice",
                        found,
                    });
                };
                let mut indexed = BTreeMap::new();
                for (key, doc) in braces {
                    let idx: usize = key.parse().map_err(|_| LoadError::BadKey(key.clone()))?;
                    let found = doc.kind();
                    let Structure::SkewBrace(b) = doc.into_structure()? else {
                        return Err(LoadError::WrongKind {
                            expected: "skew_brace",
                            found,
                        });
                    };
                    indexed.insert(idx, b);
                }
                if indexed.keys().copied().ne(0..indexed.len()) {
                    return Err(LoadError::BadKey("brace keys must be 0..n-1".into()));
                }
                let mut maps = BTreeMap::new();
                for (key, map) in homs {
                    let parsed = key
                        .split_once('>')
                        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
                    maps.insert(parsed.ok_or(LoadError::BadKey(key))?, map);
                }
                let spec = StrongSemilatticeSpec::new(y, indexed.into_values().collect(), maps)
                    .map_err(|e| invalid(e.into()))?;
                compose(&spec).map_err(|e| invalid(e.into()))?;
                Structure::Spec(spec)
            }
            Document::Solution { order, map } => {
                sized(order, &map)?;
                let rows: Vec<Vec<(usize, usize)>> = map
                    .into_iter()
                    .map(|row| row.into_iter().map(|[u, v]| (u, v)).collect())
                    .collect();
                Structure::Solution(SolutionTable::from_rows(&rows).map_err(|e| invalid(e.into()))?)
            }
        })
    }
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<Structure, LoadError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        LoadError::Parse {
            offset: byte_offset(text, line, column),
            line,
            column,
            message: e.to_string(),
        }
    })?;
    doc.into_structure()
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (start + column.saturating_sub(1)).min(text.len())
}

/// Loads `catalog:<name>` from the built-in catalog, anything else from disk.
pub fn load(source: &str) -> Result<Structure, LoadError> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return crate::catalog::entry(name).map(|e| e.structure);
    }
    let text = std::fs::read_to_string(Path::new(source)).map_err(|e| LoadError::Io {
        path: source.to_string(),
        message: e.to_string(),
    })?;
    parse(&text)
}

/// Canonical single-line JSON.
pub fn serialize(s: &Structure) -> String {
    serde_json::to_string(&s.to_document()).expect("documents always serialize")
}
