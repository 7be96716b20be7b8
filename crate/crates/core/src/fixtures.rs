//! Reference data: embedded copies of `data/*.json`, optionally replaced by a
//! directory on disk.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bracket::{BasisKind, TableFixture};
use crate::cubic::SurfaceFixture;
use crate::error::{Error, Result};
use crate::roots::{LambdaFixture, RootFixture};

pub const TABLE_NONION: &str = "table_nonion_s3.json";
pub const TABLE_TU3: &str = "table_tu3_s3.json";
pub const ROOTS_ALPHA: &str = "roots_alpha.json";
pub const ROOTS_BETA: &str = "roots_beta.json";
pub const SURFACE: &str = "surface_poly.json";
pub const LAMBDA: &str = "lambda_combos.json";
pub const CLIFFORD: &str = "clifford_census.json";
pub const TILDE: &str = "tilde_phases.json";

const EMBEDDED: [(&str, &str); 8] = [
    (TABLE_NONION, include_str!("../data/table_nonion_s3.json")),
    (TABLE_TU3, include_str!("../data/table_tu3_s3.json")),
    (ROOTS_ALPHA, include_str!("../data/roots_alpha.json")),
    (ROOTS_BETA, include_str!("../data/roots_beta.json")),
    (SURFACE, include_str!("../data/surface_poly.json")),
    (LAMBDA, include_str!("../data/lambda_combos.json")),
    (CLIFFORD, include_str!("../data/clifford_census.json")),
    (TILDE, include_str!("../data/tilde_phases.json")),
];

pub fn file_names() -> impl Iterator<Item = &'static str> {
    EMBEDDED.iter().map(|(n, _)| *n)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CliffordFixture {
    pub schema: String,
    pub dimensions: BTreeMap<String, u64>,
    pub degree_census: BTreeMap<String, Vec<u64>>,
    pub grade_splits_printed: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TildeEntry {
    pub index: usize,
    pub claimed_exponent: u8,
    pub printed_as: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TildeFixture {
    pub schema: String,
    pub phases: Vec<TildeEntry>,
}

fn parse_with_schema<T: for<'de> Deserialize<'de>>(
    text: &str,
    label: &str,
    schema: &str,
    get_schema: impl Fn(&T) -> &str,
) -> Result<T> {
    let bad = |message: String| Error::FixtureParse {
        path: label.to_string(),
        message,
    };
    let v: T = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if get_schema(&v) != schema {
        return Err(bad(format!("unexpected schema {:?}", get_schema(&v))));
    }
    Ok(v)
}

/// All fixtures, parsed and validated, with SHA-256 of their bytes.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub source: String,
    pub checksums: BTreeMap<String, String>,
    pub nonion_table: TableFixture,
    pub tu3_table: TableFixture,
    pub alpha: RootFixture,
    pub beta: RootFixture,
    pub surface: SurfaceFixture,
    pub lambda: LambdaFixture,
    pub clifford: CliffordFixture,
    pub tilde: TildeFixture,
}

impl FixtureSet {
    pub fn embedded() -> Result<Self> {
        let texts = EMBEDDED
            .iter()
            .map(|(n, t)| (n.to_string(), (format!("embedded:{n}"), t.to_string())))
            .collect();
        Self::from_texts("embedded".into(), texts)
    }

    /// Reads every fixture from `dir`; all must be present.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut texts = BTreeMap::new();
        for name in file_names() {
            let path: PathBuf = dir.join(name);
            let text = std::fs::read_to_string(&path).map_err(|e| Error::FixtureParse {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            texts.insert(name.to_string(), (path.display().to_string(), text));
        }
        Self::from_texts(dir.display().to_string(), texts)
    }

    pub fn load(dir: Option<&Path>) -> Result<Self> {
        match dir {
            Some(d) => Self::from_dir(d),
            None => Self::embedded(),
        }
    }

    fn from_texts(source: String, texts: BTreeMap<String, (String, String)>) -> Result<Self> {
        let get = |name: &str| -> Result<(&str, &str)> {
            texts
                .get(name)
                .map(|(l, t)| (l.as_str(), t.as_str()))
                .ok_or_else(|| Error::FixtureParse {
                    path: name.to_string(),
                    message: "missing".into(),
                })
        };
        let checksums = texts
            .iter()
            .map(|(n, (_, t))| (n.clone(), hex::encode(Sha256::digest(t.as_bytes()))))
            .collect();
        let table = |name: &str, kind: BasisKind| -> Result<TableFixture> {
            let (label, text) = get(name)?;
            let f = TableFixture::parse(text, label)?;
            if f.basis != kind {
                return Err(Error::FixtureParse {
                    path: label.to_string(),
                    message: format!("expected basis {kind}, found {}", f.basis),
                });
            }
            Ok(f)
        };
        let roots = |name: &str, kind: &str| -> Result<RootFixture> {
            let (label, text) = get(name)?;
            let f = RootFixture::parse(text, label)?;
            if f.kind != kind {
                return Err(Error::FixtureParse {
                    path: label.to_string(),
                    message: format!("expected {kind} roots, found {}", f.kind),
                });
            }
            Ok(f)
        };
        let (sl, st) = get(SURFACE)?;
        let (ll, lt) = get(LAMBDA)?;
        let (cl, ct) = get(CLIFFORD)?;
        let (tl, tt) = get(TILDE)?;
        Ok(FixtureSet {
            nonion_table: table(TABLE_NONION, BasisKind::Nonion)?,
            tu3_table: table(TABLE_TU3, BasisKind::Tu3)?,
            alpha: roots(ROOTS_ALPHA, "alpha")?,
            beta: roots(ROOTS_BETA, "beta")?,
            surface: SurfaceFixture::parse(st, sl)?,
            lambda: LambdaFixture::parse(lt, ll)?,
            clifford: parse_with_schema(ct, cl, "ternion/clifford-census/v1", |f: &CliffordFixture| {
                &f.schema
            })?,
            tilde: parse_with_schema(tt, tl, "ternion/tilde-phases/v1", |f: &TildeFixture| &f.schema)?,
            source,
            checksums,
        })
    }

    pub fn table(&self, kind: BasisKind) -> &TableFixture {
        match kind {
            BasisKind::Nonion => &self.nonion_table,
            BasisKind::Tu3 => &self.tu3_table,
        }
    }
}

/// Writes the embedded fixtures into `dir`.
pub fn export_embedded(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, text) in EMBEDDED {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}
