//! The S₃ triple bracket, structure tables, and diffs against reference tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{nonion_basis, tu3_basis};
use crate::error::{Error, Result};
use crate::mat3::{Mat3, OrthogonalBasis};
use crate::scalar::FieldElem;

/// `ABC + BCA + CAB − BAC − ACB − CBA`.
pub fn s3_bracket(a: &Mat3, b: &Mat3, c: &Mat3) -> Mat3 {
    let ab = a.mat_mul(b);
    let ba = b.mat_mul(a);
    let even = ab
        .mat_mul(c)
        .mat_add(&b.mat_mul(&c.mat_mul(a)))
        .mat_add(&c.mat_mul(&ab));
    let odd = ba
        .mat_mul(c)
        .mat_add(&a.mat_mul(&c.mat_mul(b)))
        .mat_add(&c.mat_mul(&ba));
    even.mat_sub(&odd)
}

/// With `e` commuting with `a` and `b`, the bracket `{a, b, e}` collapses to
/// `e(ab − ba)`; returns the bracket after checking that.
pub fn binary_reduction_check(a: &Mat3, b: &Mat3, e: &Mat3) -> Result<Mat3> {
    if a.mat_mul(e) != e.mat_mul(a) || b.mat_mul(e) != e.mat_mul(b) {
        return Err(Error::NotCentral);
    }
    let bracket = s3_bracket(a, b, e);
    let expected = e.mat_mul(&a.mat_mul(b).mat_sub(&b.mat_mul(a)));
    if bracket != expected {
        return Err(Error::Invariant(
            "bracket with a central element differs from the commutator".into(),
        ));
    }
    Ok(bracket)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Nonion,
    Tu3,
}

impl BasisKind {
    pub fn basis(self) -> &'static OrthogonalBasis {
        match self {
            BasisKind::Nonion => nonion_basis().orthogonal(),
            BasisKind::Tu3 => tu3_basis().orthogonal(),
        }
    }

    pub fn elements(self) -> &'static [Mat3; 9] {
        self.basis().elements()
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Nonion => "nonion",
            BasisKind::Tu3 => "tu3",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonion" => Ok(BasisKind::Nonion),
            "tu3" => Ok(BasisKind::Tu3),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    pub index: usize,
    pub coeff: FieldElem,
}

/// `{q_k, q_l, q_m} = Σ coeff · q_index`, zero coefficients omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureRow {
    pub triple: [usize; 3],
    pub targets: Vec<Target>,
}

impl StructureRow {
    pub fn is_zero(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn coeff(&self, index: usize) -> FieldElem {
        self.targets
            .iter()
            .find(|t| t.index == index)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(FieldElem::zero)
    }

    pub fn reconstruct(&self, kind: BasisKind) -> Mat3 {
        let mut coeffs: [FieldElem; 9] = std::array::from_fn(|_| FieldElem::zero());
        for t in &self.targets {
            coeffs[t.index] = t.coeff.clone();
        }
        kind.basis().combine(&coeffs)
    }
}

fn check_index(i: usize) -> Result<()> {
    if i < 9 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, bound: 9 })
    }
}

/// Bracket of three basis elements in the given argument order, decomposed.
pub fn bracket_row(kind: BasisKind, k: usize, l: usize, m: usize) -> Result<StructureRow> {
    for i in [k, l, m] {
        check_index(i)?;
    }
    let e = kind.elements();
    let b = s3_bracket(&e[k], &e[l], &e[m]);
    let coeffs = kind.basis().decompose(&b)?;
    let targets = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(index, coeff)| Target { index, coeff })
        .collect();
    Ok(StructureRow {
        triple: [k, l, m],
        targets,
    })
}

/// All `k < l < m` in lexicographic order; 84 of them.
pub fn sorted_triples() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(84);
    for k in 0..9 {
        for l in (k + 1)..9 {
            for m in (l + 1)..9 {
                out.push([k, l, m]);
            }
        }
    }
    out
}

pub fn structure_table(kind: BasisKind) -> Result<Vec<StructureRow>> {
    sorted_triples()
        .into_par_iter()
        .map(|[k, l, m]| bracket_row(kind, k, l, m))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    /// Row number in the printed table.
    pub row: usize,
    pub triple: [usize; 3],
    pub targets: Vec<Target>,
    pub printed_as: String,
    pub printed_order: [usize; 3],
    /// +1 or −1: parity of `printed_order` relative to `triple`.
    pub sign: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_printed_as: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFixture {
    pub schema: String,
    pub basis: BasisKind,
    pub rows: Vec<FixtureRow>,
}

pub const TABLE_SCHEMA: &str = "ternion/structure-table/v1";

impl TableFixture {
    /// Parses and validates: 84 rows, each a distinct sorted triple.
    pub fn parse(text: &str, label: &str) -> Result<Self> {
        let bad = |message: String| Error::FixtureParse {
            path: label.to_string(),
            message,
        };
        let fixture: TableFixture =
            serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if fixture.schema != TABLE_SCHEMA {
            return Err(bad(format!("unexpected schema {:?}", fixture.schema)));
        }
        if fixture.rows.len() != 84 {
            return Err(Error::FixtureRowCount {
                path: label.to_string(),
                expected: 84,
                found: fixture.rows.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for row in &fixture.rows {
            let [k, l, m] = row.triple;
            if !(k < l && l < m && m < 9) {
                return Err(bad(format!("triple {:?} is not sorted", row.triple)));
            }
            if !seen.insert(row.triple) {
                return Err(bad(format!("duplicate triple {:?}", row.triple)));
            }
        }
        Ok(fixture)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn row(&self, triple: [usize; 3]) -> Option<&FixtureRow> {
        self.rows.iter().find(|r| r.triple == triple)
    }

    /// Row counts per group tag, excluding untagged rows.
    pub fn group_sizes(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for g in self.rows.iter().filter_map(|r| r.group.as_ref()) {
            *out.entry(g.clone()).or_insert(0) += 1;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RowStatus {
    Match,
    Mismatch {
        expected: Vec<Target>,
        computed: Vec<Target>,
    },
    MissingInFixture,
    ExtraInFixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowDiff {
    pub triple: [usize; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_as: Option<String>,
    #[serde(flatten)]
    pub status: RowStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffSummary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub missing_in_fixture: usize,
    pub extra_in_fixture: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableDiff {
    pub rows: Vec<RowDiff>,
    pub summary: DiffSummary,
}

impl TableDiff {
    pub fn all_match(&self) -> bool {
        self.summary.matched == self.summary.total
    }

    pub fn status(&self, triple: [usize; 3]) -> Option<&RowStatus> {
        self.rows.iter().find(|r| r.triple == triple).map(|r| &r.status)
    }
}

fn sorted_targets(t: &[Target]) -> Vec<Target> {
    let mut v: Vec<Target> = t.iter().filter(|t| !t.coeff.is_zero()).cloned().collect();
    v.sort_by_key(|t| t.index);
    v
}

/// Exact row-by-row comparison, ordered by triple.
pub fn diff_rows(computed: &[StructureRow], expected: &[FixtureRow]) -> TableDiff {
    let computed: BTreeMap<[usize; 3], &StructureRow> =
        computed.iter().map(|r| (r.triple, r)).collect();
    let expected: BTreeMap<[usize; 3], &FixtureRow> =
        expected.iter().map(|r| (r.triple, r)).collect();
    let keys: BTreeSet<[usize; 3]> = computed.keys().chain(expected.keys()).copied().collect();
    let mut summary = DiffSummary::default();
    let rows = keys
        .into_iter()
        .map(|triple| {
            let status = match (computed.get(&triple), expected.get(&triple)) {
                (Some(c), Some(e)) => {
                    let cv = sorted_targets(&c.targets);
                    let ev = sorted_targets(&e.targets);
                    if cv == ev {
                        summary.matched += 1;
                        RowStatus::Match
                    } else {
                        summary.mismatched += 1;
                        RowStatus::Mismatch {
                            expected: ev,
                            computed: cv,
                        }
                    }
                }
                (Some(_), None) => {
                    summary.missing_in_fixture += 1;
                    RowStatus::MissingInFixture
                }
                _ => {
                    summary.extra_in_fixture += 1;
                    RowStatus::ExtraInFixture
                }
            };
            summary.total += 1;
            RowDiff {
                triple,
                printed_as: expected.get(&triple).map(|e| e.printed_as.clone()),
                status,
            }
        })
        .collect();
    TableDiff { rows, summary }
}

/// Loads the fixture at `path` and diffs `computed` against it.
pub fn diff_table(computed: &[StructureRow], path: &Path) -> Result<TableDiff> {
    let fixture = TableFixture::load(path)?;
    Ok(diff_rows(computed, &fixture.rows))
}

/// The sorted-order table rendered as a self-fixture, for round-trip checks.
pub fn table_as_fixture(kind: BasisKind, rows: &[StructureRow]) -> TableFixture {
    TableFixture {
        schema: TABLE_SCHEMA.to_string(),
        basis: kind,
        rows: rows
            .iter()
            .map(|r| FixtureRow {
                row: 0,
                triple: r.triple,
                targets: r.targets.clone(),
                printed_as: String::new(),
                printed_order: r.triple,
                sign: 1,
                group: None,
                group_printed_as: None,
            })
            .collect(),
    }
}
