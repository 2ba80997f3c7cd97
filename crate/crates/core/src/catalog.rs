//! Built-in examples and input resolution.
//!
//! An input string names a file if one exists at that path, otherwise a
//! catalog entry: first the built-ins, then `<name>.json` under the directory
//! in `ORBIKIT_CATALOG_DIR`.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::format::{Document, Loaded};

pub const CATALOG_DIR_ENV: &str = "ORBIKIT_CATALOG_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub source: String,
}

const KUMMER2: &str = r#"{
  "name": "kummer2",
  "dim": 2,
  "sectors": [
    {
      "order": 1,
      "exponents": [0, 0],
      "diamond": [
        {"p": 0, "q": 0, "h": 1},
        {"p": 0, "q": 2, "h": 1},
        {"p": 1, "q": 1, "h": 4},
        {"p": 2, "q": 0, "h": 1},
        {"p": 2, "q": 2, "h": 1}
      ],
      "label": "untwisted"
    },
    {
      "order": 2,
      "exponents": [1, 1],
      "diamond": [{"p": 0, "q": 0, "h": 1}],
      "count": 16,
      "label": "2-torsion point"
    }
  ]
}"#;

const KUMMER3: &str = r#"{"name": "kummer3", "family": "kummer", "params": {"n": 3}}"#;

const P2_MU3: &str =
    r#"{"name": "p2_mu3", "family": "projective_quotient", "params": {"n": 2, "orders": [3], "weights": [[0, 1, 2]]}}"#;

const PN_TRIVIAL: &str =
    r#"{"name": "pn_trivial", "family": "projective_quotient", "params": {"n": 2, "orders": [], "weights": []}}"#;

const QUINTIC_COLUMNS: &str = r#"{
  "name": "quintic_columns",
  "dim": 3,
  "columns": [{"i": 3, "c": 1}, {"i": 2, "c": 0}, {"i": 1, "c": 101}, {"i": 0, "c": 4}],
  "h01": 0
}"#;

const BUILTINS: [(&str, &str, &str); 5] = [
    (
        "kummer2",
        "Kummer surface A/{+-1}, n = 2: assembles to the K3 diamond",
        KUMMER2,
    ),
    (
        "kummer3",
        "Kummer threefold A/{+-1}, n = 3: 64 sectors of age 3/2, fractional grading",
        KUMMER3,
    ),
    (
        "p2_mu3",
        "P^2 / Z/3 with weights (0,1,2): Gorenstein, matches its crepant resolution (McKay)",
        P2_MU3,
    ),
    (
        "pn_trivial",
        "P^2 with the trivial group: untwisted sector only",
        PN_TRIVIAL,
    ),
    (
        "quintic_columns",
        "Column sums and h01 of a quintic threefold: reconstruction fixture",
        QUINTIC_COLUMNS,
    ),
];

pub fn builtins() -> Vec<CatalogEntry> {
    BUILTINS
        .iter()
        .map(|&(name, description, source)| CatalogEntry {
            name: name.into(),
            description: description.into(),
            source: source.into(),
        })
        .collect()
}

fn user_dir() -> Option<PathBuf> {
    std::env::var_os(CATALOG_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

/// User entries from `ORBIKIT_CATALOG_DIR`, sorted by name.
pub fn user_entries() -> Result<Vec<CatalogEntry>> {
    let Some(dir) = user_dir() else { return Ok(Vec::new()) };
    let read = std::fs::read_dir(&dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for item in read {
        let path = item.map_err(|e| Error::Io(e.to_string()))?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let Some(name) = path.file_stem().and_then(|s| s.to_str()) else {
            continue;
        };
        let source = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        out.push(CatalogEntry {
            name: name.to_string(),
            description: format!("user entry ({})", path.display()),
            source,
        });
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Built-ins followed by user entries not shadowing a built-in.
pub fn all_entries() -> Result<Vec<CatalogEntry>> {
    let mut entries = builtins();
    for e in user_entries()? {
        if !entries.iter().any(|b| b.name == e.name) {
            entries.push(e);
        }
    }
    Ok(entries)
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    if let Some(e) = builtins().into_iter().find(|e| e.name == name) {
        return Ok(e);
    }
    if let Some(dir) = user_dir() {
        let path = dir.join(format!("{name}.json"));
        if path.is_file() {
            let source = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            return Ok(CatalogEntry {
                name: name.into(),
                description: String::new(),
                source,
            });
        }
    }
    Err(Error::UnknownCatalogEntry(name.into()))
}

/// Reads an input path or catalog name into a parsed document.
pub fn read_document(input: &str) -> Result<Document> {
    let path = Path::new(input);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{input}: {e}")))?
    } else {
        lookup(input)?.source
    };
    Document::from_json(&text)
}

/// Reads and validates an input path or catalog name.
pub fn load(input: &str) -> Result<Loaded> {
    Loaded::from_document(&read_document(input)?)
}
