//! JSON file formats.
//!
//! Four document shapes share one parser, told apart by their distinguishing key:
//!
//! * `sectors` - raw inertia data (`OrbifoldFile`),
//! * `family` - a global-quotient generator,
//! * `entries` - a bare Hodge diamond (`DiamondFile`),
//! * `columns` - a reconstruction fixture.
//!
//! Unknown fields are errors. Grades are integers or `"a/b"` strings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diamond::{ColumnVector, HodgeDiamond};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::inertia::{InertiaComponent, OrbifoldPresentation};
use crate::invariants::reconstruct_gorenstein;
use crate::quotient::{build_kummer, build_projective_quotient, KummerSpec, ProjectiveQuotientSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub p: Grade,
    pub q: Grade,
    pub h: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorRecord {
    pub order: u32,
    pub exponents: Vec<u32>,
    pub diamond: Vec<EntryRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Raw inertia data, one record per sector (or per `count` identical sectors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbifoldFile {
    pub name: String,
    pub dim: u32,
    pub sectors: Vec<SectorRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub family: String,
    pub params: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientSpec {
    Projective(ProjectiveQuotientSpec),
    Kummer(KummerSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiamondFile {
    pub name: String,
    pub dim: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u64>,
    pub entries: Vec<EntryRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnRecord {
    pub i: i64,
    pub c: u64,
}

/// Column sums plus `h^{0,1}`, to be solved into a diamond.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReconstructionFile {
    pub name: String,
    pub dim: u32,
    pub columns: Vec<ColumnRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h01: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Orbifold(OrbifoldFile),
    Generator(GeneratorFile),
    Diamond(DiamondFile),
    Reconstruction(ReconstructionFile),
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(parse_err)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("top level must be a JSON object".into()))?;
        let doc = if obj.contains_key("family") {
            Document::Generator(serde_json::from_value(value).map_err(parse_err)?)
        } else if obj.contains_key("sectors") {
            Document::Orbifold(serde_json::from_value(value).map_err(parse_err)?)
        } else if obj.contains_key("entries") {
            Document::Diamond(serde_json::from_value(value).map_err(parse_err)?)
        } else if obj.contains_key("columns") {
            Document::Reconstruction(serde_json::from_value(value).map_err(parse_err)?)
        } else {
            return Err(Error::Parse(
                "unrecognized document: expected one of the keys \"sectors\", \"family\", \"entries\", \"columns\""
                    .into(),
            ));
        };
        Ok(doc)
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Document::Orbifold(f) => Some(&f.name),
            Document::Generator(f) => f.name.as_deref(),
            Document::Diamond(f) => Some(&f.name),
            Document::Reconstruction(f) => Some(&f.name),
        }
    }
}

fn entries_to_diamond(dim: u32, entries: &[EntryRecord]) -> Result<HodgeDiamond> {
    HodgeDiamond::new(dim, entries.iter().map(|e| (e.p, e.q, e.h)))
}

fn diamond_to_entries(d: &HodgeDiamond) -> Vec<EntryRecord> {
    d.entries().map(|(p, q, h)| EntryRecord { p, q, h }).collect()
}

impl OrbifoldFile {
    /// Expands `count` shorthands and validates.
    pub fn to_presentation(&self) -> Result<OrbifoldPresentation> {
        let mut components = Vec::new();
        for (i, s) in self.sectors.iter().enumerate() {
            let label = s.label.clone().unwrap_or_else(|| format!("sector {i}"));
            let count = s.count.unwrap_or(1);
            if count == 0 {
                return Err(Error::Parse("sector count must be positive".into()));
            }
            if s.exponents.len() != self.dim as usize {
                return Err(Error::InvalidComponent {
                    label,
                    reason: format!("{} exponents but dim is {}", s.exponents.len(), self.dim),
                });
            }
            let fixed = s.exponents.iter().filter(|&&a| a == 0).count() as u32;
            let coarse = entries_to_diamond(fixed, &s.diamond)?;
            let c = InertiaComponent::new(s.order, s.exponents.clone(), coarse, label)?;
            components.extend(std::iter::repeat_n(c, count as usize));
        }
        OrbifoldPresentation::new(self.name.clone(), self.dim, components)
    }

    /// Canonical form: sectors sorted by (order, exponents, label), runs of
    /// identical sectors folded into `count`.
    pub fn from_presentation(p: &OrbifoldPresentation) -> Self {
        let canon = p.canonicalized();
        let mut sectors: Vec<SectorRecord> = Vec::new();
        for c in canon.components() {
            let record = SectorRecord {
                order: c.order(),
                exponents: c.exponents().to_vec(),
                diamond: diamond_to_entries(c.coarse_diamond()),
                count: None,
                label: Some(c.label().to_string()),
            };
            match sectors.last_mut() {
                Some(last)
                    if SectorRecord {
                        count: None,
                        ..last.clone()
                    } == record =>
                {
                    last.count = Some(last.count.unwrap_or(1) + 1);
                }
                _ => sectors.push(record),
            }
        }
        OrbifoldFile {
            name: p.name().to_string(),
            dim: p.dim(),
            sectors,
        }
    }
}

impl GeneratorFile {
    pub fn spec(&self) -> Result<QuotientSpec> {
        match self.family.as_str() {
            "projective_quotient" => Ok(QuotientSpec::Projective(
                serde_json::from_value(self.params.clone()).map_err(parse_err)?,
            )),
            "kummer" => Ok(QuotientSpec::Kummer(
                serde_json::from_value(self.params.clone()).map_err(parse_err)?,
            )),
            other => Err(Error::Parse(format!(
                "unknown family {other:?} (expected \"projective_quotient\" or \"kummer\")"
            ))),
        }
    }

    pub fn to_presentation(&self) -> Result<OrbifoldPresentation> {
        let p = match self.spec()? {
            QuotientSpec::Projective(s) => build_projective_quotient(&s)?,
            QuotientSpec::Kummer(s) => build_kummer(s)?,
        };
        Ok(match &self.name {
            Some(name) => p.renamed(name.clone()),
            None => p,
        })
    }
}

impl DiamondFile {
    pub fn to_diamond(&self) -> Result<HodgeDiamond> {
        let d = entries_to_diamond(self.dim, &self.entries)?;
        match self.level {
            Some(level) => d.with_level(level),
            None => Ok(d),
        }
    }

    pub fn from_diamond(name: &str, d: &HodgeDiamond) -> Self {
        DiamondFile {
            name: name.to_string(),
            dim: d.dim(),
            level: Some(d.level()),
            entries: diamond_to_entries(d),
        }
    }
}

/// Parses `"i:v,..."`. Indices `i >= 0` without an explicit `-i` are mirrored.
pub fn parse_column_list(dim: u32, text: &str) -> Result<ColumnVector> {
    let mut pairs = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (i, v) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("column item {item:?} is not of the form i:v")))?;
        let i: i64 = i
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad column index in {item:?}")))?;
        let v: u64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad column value in {item:?}")))?;
        pairs.push(ColumnRecord { i, c: v });
    }
    columns_from_records(dim, &pairs)
}

fn columns_from_records(dim: u32, records: &[ColumnRecord]) -> Result<ColumnVector> {
    let mut map = std::collections::BTreeMap::new();
    for r in records {
        if map.insert(r.i, r.c).is_some() {
            return Err(Error::Parse(format!("column {} given twice", r.i)));
        }
    }
    let explicit: Vec<i64> = map.keys().copied().collect();
    for i in explicit {
        if i > 0 {
            let v = map[&i];
            map.entry(-i).or_insert(v);
        }
    }
    ColumnVector::new(dim, map).map_err(|e| Error::Parse(e.to_string()))
}

impl ReconstructionFile {
    pub fn column_vector(&self) -> Result<ColumnVector> {
        columns_from_records(self.dim, &self.columns)
    }

    pub fn to_diamond(&self) -> Result<HodgeDiamond> {
        reconstruct_gorenstein(&self.column_vector()?, self.h01, self.dim)
    }
}

/// What an input resolves to after parsing and validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Presentation(OrbifoldPresentation),
    Diamond { name: String, diamond: HodgeDiamond },
}

impl Loaded {
    pub fn from_document(doc: &Document) -> Result<Self> {
        Ok(match doc {
            Document::Orbifold(f) => Loaded::Presentation(f.to_presentation()?),
            Document::Generator(f) => Loaded::Presentation(f.to_presentation()?),
            Document::Diamond(f) => Loaded::Diamond {
                name: f.name.clone(),
                diamond: f.to_diamond()?,
            },
            Document::Reconstruction(f) => Loaded::Diamond {
                name: f.name.clone(),
                diamond: f.to_diamond()?,
            },
        })
    }

    pub fn name(&self) -> &str {
        match self {
            Loaded::Presentation(p) => p.name(),
            Loaded::Diamond { name, .. } => name,
        }
    }

    /// The orbifold diamond, assembling it when the input is inertia data.
    pub fn diamond(&self) -> Result<HodgeDiamond> {
        match self {
            Loaded::Presentation(p) => crate::inertia::assemble_diamond(p),
            Loaded::Diamond { diamond, .. } => Ok(diamond.clone()),
        }
    }

    pub fn presentation(&self) -> Option<&OrbifoldPresentation> {
        match self {
            Loaded::Presentation(p) => Some(p),
            Loaded::Diamond { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatches_on_distinguishing_key() {
        let d = Document::from_json(r#"{"name":"pt","dim":0,"entries":[{"p":0,"q":0,"h":1}]}"#).unwrap();
        assert!(matches!(d, Document::Diamond(_)));
        let g = Document::from_json(r#"{"family":"kummer","params":{"n":2}}"#).unwrap();
        assert!(matches!(g, Document::Generator(_)));
        assert!(Document::from_json("[1,2]").is_err());
        assert!(Document::from_json(r#"{"name":"x"}"#).is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let e = Document::from_json(r#"{"name":"pt","dim":0,"entries":[],"colour":"red"}"#);
        assert!(matches!(e, Err(Error::Parse(_))));
        let e = Document::from_json(r#"{"name":"pt","dim":0,"entries":[{"p":0,"q":0,"h":1,"x":2}]}"#);
        assert!(matches!(e, Err(Error::Parse(_))));
        let g = Document::from_json(r#"{"family":"kummer","params":{"n":2,"m":1}}"#).unwrap();
        let Document::Generator(g) = g else { unreachable!() };
        assert!(matches!(g.spec(), Err(Error::Parse(_))));
    }

    #[test]
    fn decimal_grades_are_rejected() {
        let e = Document::from_json(r#"{"name":"x","dim":3,"entries":[{"p":1.5,"q":1.5,"h":1}]}"#);
        assert!(matches!(e, Err(Error::Parse(_))));
        let e = Document::from_json(r#"{"name":"x","dim":3,"entries":[{"p":"1.5","q":"1.5","h":1}]}"#);
        assert!(matches!(e, Err(Error::Parse(_))));
    }

    #[test]
    fn count_shorthand_expands() {
        let text = r#"{
            "name": "kummer2", "dim": 2,
            "sectors": [
                {"order": 1, "exponents": [0, 0], "label": "untwisted",
                 "diamond": [{"p":0,"q":0,"h":1},{"p":2,"q":0,"h":1},{"p":1,"q":1,"h":4},{"p":0,"q":2,"h":1},{"p":2,"q":2,"h":1}]},
                {"order": 2, "exponents": [1, 1], "count": 16, "diamond": [{"p":0,"q":0,"h":1}]}
            ]
        }"#;
        let Document::Orbifold(f) = Document::from_json(text).unwrap() else {
            panic!()
        };
        let p = f.to_presentation().unwrap();
        assert_eq!(p.components().len(), 17);
        let back = OrbifoldFile::from_presentation(&p);
        assert_eq!(back.sectors.len(), 2);
        assert_eq!(back.sectors[1].count, Some(16));
        assert_eq!(back.to_presentation().unwrap().canonicalized(), p.canonicalized());
    }

    #[test]
    fn pseudo_reflection_sector_is_a_validation_error() {
        let text = r#"{"name":"bad","dim":2,"sectors":[
            {"order":1,"exponents":[0,0],"diamond":[{"p":0,"q":0,"h":1},{"p":1,"q":1,"h":1},{"p":2,"q":2,"h":1}]},
            {"order":2,"exponents":[1,0],"diamond":[{"p":0,"q":0,"h":1},{"p":1,"q":1,"h":1}]}]}"#;
        let doc = Document::from_json(text).unwrap();
        let e = Loaded::from_document(&doc).unwrap_err();
        assert!(matches!(e, Error::PseudoReflection(_)));
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn column_lists() {
        let c = parse_column_list(3, "3:1, 2:0,1:101,0:4").unwrap();
        assert_eq!(c.get(-1), 101);
        assert_eq!(c.get(-3), 1);
        let c = parse_column_list(2, "2:1,-2:0,0:22").unwrap();
        assert_eq!(c.get(-2), 0);
        assert!(parse_column_list(2, "2=1").is_err());
        assert!(parse_column_list(2, "5:1").is_err());
        assert!(parse_column_list(2, "1:1,1:2").is_err());
    }

    #[test]
    fn diamond_file_level() {
        let f = DiamondFile {
            name: "x".into(),
            dim: 3,
            level: Some(4),
            entries: vec![EntryRecord {
                p: Grade::new(3, 2),
                q: Grade::new(3, 2),
                h: 1,
            }],
        };
        assert_eq!(f.to_diamond().unwrap().level(), 4);
        let bad = DiamondFile { level: Some(3), ..f };
        assert!(bad.to_diamond().is_err());
    }
}
