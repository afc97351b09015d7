//! Built-in structures, frozen as tables in `catalog/catalog.json`.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::algebra::FiniteGroupTable;
use crate::brace::{DualWeakBrace, SkewBrace};
use crate::compose::StrongSemilatticeSpec;
use crate::format::{Document, LoadError, Structure};

const CATALOG_JSON: &str = include_str!("../catalog/catalog.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub provenance: String,
    pub structure: Structure,
}

impl CatalogEntry {
    pub fn kind(&self) -> &'static str {
        self.structure.kind()
    }
}

#[derive(Deserialize)]
struct RawCatalog {
    permutation_convention: String,
    entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    provenance: String,
    structure: Document,
}

struct Catalog {
    convention: String,
    entries: Vec<CatalogEntry>,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let raw: RawCatalog = serde_json::from_str(CATALOG_JSON).expect("catalog.json parses");
        let entries = raw
            .entries
            .into_iter()
            .map(|e| CatalogEntry {
                structure: e
                    .structure
                    .into_structure()
                    .unwrap_or_else(|err| panic!("catalog entry {}: {err}", e.name)),
                name: e.name,
                provenance: e.provenance,
            })
            .collect();
        Catalog {
            convention: raw.permutation_convention,
            entries,
        }
    })
}

/// Entry names in catalog order.
pub fn names() -> Vec<&'static str> {
    catalog().entries.iter().map(|e| e.name.as_str()).collect()
}

pub fn entries() -> &'static [CatalogEntry] {
    &catalog().entries
}

pub fn permutation_convention() -> &'static str {
    &catalog().convention
}

pub fn entry(name: &str) -> Result<CatalogEntry, LoadError> {
    catalog()
        .entries
        .iter()
        .find(|e| e.name == name)
        .cloned()
        .ok_or_else(|| LoadError::UnknownName(name.to_string()))
}

fn wrong(expected: &'static str, found: &'static str) -> LoadError {
    LoadError::WrongKind { expected, found }
}

pub fn group(name: &str) -> Result<FiniteGroupTable, LoadError> {
    match entry(name)?.structure {
        Structure::Group(g) => Ok(g),
        other => Err(wrong("group", other.kind())),
    }
}

pub fn skew_brace(name: &str) -> Result<SkewBrace, LoadError> {
    match entry(name)?.structure {
        Structure::SkewBrace(b) => Ok(b),
        other => Err(wrong("skew_brace", other.kind())),
    }
}

pub fn spec(name: &str) -> Result<StrongSemilatticeSpec, LoadError> {
    match entry(name)?.structure {
        Structure::Spec(s) => Ok(s),
        other => Err(wrong("strong_semilattice", other.kind())),
    }
}

/// Any entry except a solution, as a dual weak brace (specs are composed).
pub fn dual_weak_brace(name: &str) -> Result<DualWeakBrace, LoadError> {
    let s = entry(name)?.structure;
    s.to_dual_weak_brace()
        .ok_or_else(|| wrong("dual_weak_brace", s.kind()))
}

/// Names of every entry that is or composes to a dual weak brace.
pub fn brace_like_names() -> Vec<&'static str> {
    catalog()
        .entries
        .iter()
        .filter(|e| !matches!(e.structure, Structure::Solution(_) | Structure::Group(_)))
        .map(|e| e.name.as_str())
        .collect()
}
