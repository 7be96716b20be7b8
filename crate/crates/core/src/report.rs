//! Verification suites and report emission.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bases::{nonion_basis, pair_phase_matrix, tilde_check};
use crate::bracket::{
    binary_reduction_check, bracket_row, diff_rows, structure_table, BasisKind, RowStatus,
    StructureRow, TableDiff, Target,
};
use crate::clifford;
use crate::cubic::{self, term_census};
use crate::error::{Error, Result};
use crate::fixtures::FixtureSet;
use crate::mpoly::MPoly;
use crate::roots;
use crate::scalar::{sample_rational, FieldElem};

pub const REPORT_SCHEMA: &str = "ternion/report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    All,
    NonionTable,
    Tu3Table,
    Roots,
    Norm,
    TripleProduct,
    Clifford,
    Su3,
}

impl Scope {
    pub const SUITES: [Scope; 7] = [
        Scope::NonionTable,
        Scope::Tu3Table,
        Scope::Roots,
        Scope::Norm,
        Scope::TripleProduct,
        Scope::Clifford,
        Scope::Su3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::NonionTable => "nonion-table",
            Scope::Tu3Table => "tu3-table",
            Scope::Roots => "roots",
            Scope::Norm => "norm",
            Scope::TripleProduct => "triple-product",
            Scope::Clifford => "clifford",
            Scope::Su3 => "su3",
        }
    }
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Scope::All)
            .chain(Scope::SUITES)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scope {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

/// A table rendered into the Markdown report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MdTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub suite: Scope,
    pub status: Status,
    pub summary: String,
    pub details: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<MdTable>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureInfo {
    pub source: String,
    pub checksums: std::collections::BTreeMap<String, String>,
}

/// Everything that must be identical across reruns on the same inputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportBody {
    pub scope: Scope,
    pub strict: bool,
    pub sections: Vec<Section>,
    pub fixtures: FixtureInfo,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub os: String,
    pub arch: String,
}

impl Metadata {
    pub fn current() -> Self {
        Metadata {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            os: std::env::consts::OS.into(),
            arch: std::env::consts::ARCH.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub body: ReportBody,
    pub metadata: Metadata,
}

impl VerificationReport {
    /// True when every non-informational section passes.
    pub fn passed(&self) -> bool {
        self.body.sections.iter().all(|s| s.status != Status::Fail)
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.body.sections.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report ({})\n", self.body.scope.name());
        let _ = writeln!(
            out,
            "{} {} on {}/{}; strict: {}; fixtures: {}\n",
            self.metadata.tool,
            self.metadata.version,
            self.metadata.os,
            self.metadata.arch,
            self.body.strict,
            self.body.fixtures.source
        );
        out.push_str("| section | suite | status | summary |\n|---|---|---|---|\n");
        for s in &self.body.sections {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                s.name,
                s.suite.name(),
                status_label(s.status),
                escape(&s.summary)
            );
        }
        for s in &self.body.sections {
            let _ = writeln!(out, "\n## {} ({})\n\n{}", s.name, status_label(s.status), s.summary);
            if let Some(t) = &s.table {
                out.push('\n');
                out.push_str(&render_table(t));
            }
        }
        out.push_str("\n## Fixture checksums (SHA-256)\n\n| file | sha256 |\n|---|---|\n");
        for (f, c) in &self.body.fixtures.checksums {
            let _ = writeln!(out, "| {f} | `{c}` |");
        }
        out
    }
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Informational => "INFO",
    }
}

fn escape(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

pub fn render_table(t: &MdTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", t.headers.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(t.headers.len()));
    for r in &t.rows {
        let cells: Vec<String> = r.iter().map(|c| escape(c)).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

pub fn render(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => report.to_json(),
        Format::Markdown => Ok(report.to_markdown()),
    }
}

pub fn emit_report(report: &VerificationReport, format: Format, path: &Path) -> Result<()> {
    std::fs::write(path, render(report, format)?)?;
    Ok(())
}

/// `exact (≈ float)`.
pub fn exact_and_approx(x: &FieldElem) -> String {
    let (re, im) = x.approx_complex();
    let approx = if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{im:+.6}i")
    };
    format!("{x} (≈ {approx})")
}

pub fn format_targets(kind: BasisKind, targets: &[Target]) -> String {
    if targets.is_empty() {
        return "0".into();
    }
    let letter = match kind {
        BasisKind::Nonion => "q",
        BasisKind::Tu3 => "Q",
    };
    targets
        .iter()
        .map(|t| format!("[{}]·{letter}{}", exact_and_approx(&t.coeff), t.index))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Markdown view of a structure table.
pub fn table_markdown(kind: BasisKind, rows: &[StructureRow]) -> MdTable {
    MdTable {
        headers: vec!["triple".into(), "bracket".into()],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    format!("{{{},{},{}}}", r.triple[0], r.triple[1], r.triple[2]),
                    format_targets(kind, &r.targets),
                ]
            })
            .collect(),
    }
}

fn diff_markdown(kind: BasisKind, diff: &TableDiff, computed: &[StructureRow]) -> MdTable {
    MdTable {
        headers: vec![
            "triple".into(),
            "printed".into(),
            "computed".into(),
            "status".into(),
        ],
        rows: diff
            .rows
            .iter()
            .map(|r| {
                let comp = computed
                    .iter()
                    .find(|c| c.triple == r.triple)
                    .map(|c| format_targets(kind, &c.targets))
                    .unwrap_or_default();
                let status = match &r.status {
                    RowStatus::Match => "match".to_string(),
                    RowStatus::Mismatch { expected, .. } => {
                        format!("mismatch; fixture: {}", format_targets(kind, expected))
                    }
                    RowStatus::MissingInFixture => "missing in fixture".into(),
                    RowStatus::ExtraInFixture => "extra in fixture".into(),
                };
                vec![
                    format!("{{{},{},{}}}", r.triple[0], r.triple[1], r.triple[2]),
                    r.printed_as.clone().unwrap_or_default(),
                    comp,
                    status,
                ]
            })
            .collect(),
    }
}

struct Builder {
    strict: bool,
    sections: Vec<Section>,
}

impl Builder {
    fn check(&mut self, suite: Scope, name: &str, ok: bool, summary: String, details: Value) {
        self.push(suite, name, if ok { Status::Pass } else { Status::Fail }, summary, details, None);
    }

    /// Informational unless strict, in which case `ok` decides.
    fn info(
        &mut self,
        suite: Scope,
        name: &str,
        ok: bool,
        summary: String,
        details: Value,
        table: Option<MdTable>,
    ) {
        let status = match (self.strict, ok) {
            (false, _) => Status::Informational,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
        self.push(suite, name, status, summary, details, table);
    }

    fn push(
        &mut self,
        suite: Scope,
        name: &str,
        status: Status,
        summary: String,
        details: Value,
        table: Option<MdTable>,
    ) {
        self.sections.push(Section {
            name: name.into(),
            suite,
            status,
            summary,
            details,
            table,
        });
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

/// The three nonion rows cited as reference values.
pub fn nonion_spot_rows() -> Result<Vec<(StructureRow, Vec<Target>)>> {
    let j = FieldElem::j;
    let j2 = || FieldElem::j_pow(2);
    let cases = [
        ([1, 2, 3], vec![Target { index: 0, coeff: (j2() - j()) * FieldElem::from_integer(3) }]),
        ([1, 2, 5], vec![Target { index: 1, coeff: (j2() - j()) * FieldElem::from_integer(2) }]),
        ([1, 4, 0], vec![]),
    ];
    cases
        .into_iter()
        .map(|([k, l, m], want)| Ok((bracket_row(BasisKind::Nonion, k, l, m)?, want)))
        .collect()
}

pub fn tu3_spot_rows() -> Result<Vec<(StructureRow, Vec<Target>)>> {
    let s3 = FieldElem::sqrt3;
    let cases = [
        ([0, 7, 8], vec![]),
        ([1, 2, 3], vec![Target { index: 0, coeff: s3() }]),
        ([4, 5, 6], vec![Target { index: 0, coeff: -s3() }]),
        (
            [2, 5, 7],
            vec![
                Target { index: 0, coeff: FieldElem::sqrt2() * FieldElem::ratio(3, 2) },
                Target { index: 7, coeff: FieldElem::from_integer(-1) },
                Target { index: 8, coeff: s3() * FieldElem::ratio(-2, 3) },
            ],
        ),
    ];
    cases
        .into_iter()
        .map(|([k, l, m], want)| Ok((bracket_row(BasisKind::Tu3, k, l, m)?, want)))
        .collect()
}

fn spot_details(kind: BasisKind, rows: &[(StructureRow, Vec<Target>)]) -> (bool, Value) {
    let mut ok = true;
    let details: Vec<Value> = rows
        .iter()
        .map(|(r, want)| {
            let m = r.targets == *want;
            ok &= m;
            json!({
                "triple": r.triple,
                "computed": format_targets(kind, &r.targets),
                "expected": format_targets(kind, want),
                "match": m,
            })
        })
        .collect();
    (ok, Value::Array(details))
}

/// `{q_a, q_b, q₀} = q_a q_b − q_b q_a` for all `1 ≤ a < b ≤ 8`.
pub fn binary_reduction_all() -> Result<usize> {
    let q = nonion_basis().elements();
    let mut count = 0;
    for a in 1..9 {
        for b in (a + 1)..9 {
            binary_reduction_check(&q[a], &q[b], &q[0])?;
            count += 1;
        }
    }
    Ok(count)
}

/// Exhaustive closure and grading over the 81 ordered pairs.
pub fn closure_and_grading() -> bool {
    let basis = nonion_basis();
    let q = basis.elements();
    (0..9).all(|a| {
        (0..9).all(|b| {
            let p = basis.product(a, b);
            q[a].mat_mul(&q[b]) == q[p.target].scale(&FieldElem::j_pow(p.phase as i64))
                && (basis.grade(a) + basis.grade(b)) % 3 == basis.grade(p.target)
        })
    })
}

/// `det(Q̂(x)Q̂(y)) = det(x)·det(y)` on `samples` seeded random rational pairs.
pub fn det_multiplicativity(det: &MPoly, samples: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let mut draw = || -> [FieldElem; 9] {
            std::array::from_fn(|_| FieldElem::from_rational(sample_rational(&mut rng, 9)))
        };
        let x = draw();
        let y = draw();
        let lhs = cubic::qhat_at(&x).mat_mul(&cubic::qhat_at(&y)).det3();
        lhs == det.eval(&x) * det.eval(&y)
    })
}

fn suite_nonion(b: &mut Builder, fx: &FixtureSet) -> Result<()> {
    let s = Scope::NonionTable;
    let spots = nonion_spot_rows()?;
    let (ok, details) = spot_details(BasisKind::Nonion, &spots);
    b.check(s, "nonion-spot-rows", ok, "reference rows {1,2,3}, {1,2,5}, {1,4,0}".into(), details);

    let table = structure_table(BasisKind::Nonion)?;
    let diff = diff_rows(&table, &fx.nonion_table.rows);
    b.info(
        s,
        "nonion-table-diff",
        diff.all_match(),
        format!("{}/{} rows match the printed table", diff.summary.matched, diff.summary.total),
        serde_json::to_value(&diff)?,
        Some(diff_markdown(BasisKind::Nonion, &diff, &table)),
    );

    let pairs = binary_reduction_all();
    b.check(
        s,
        "binary-reduction",
        pairs.as_ref().is_ok_and(|&n| n == 28),
        "{q_a, q_b, q0} equals the commutator for all 28 pairs".into(),
        json!({ "pairs": pairs.as_ref().ok(), "error": pairs.as_ref().err().map(|e| e.to_string()) }),
    );

    let closure = closure_and_grading();
    let phases = pair_phase_matrix(nonion_basis());
    b.check(
        s,
        "nonion-closure",
        closure,
        format!("product closure and grading over 81 pairs {}", yes(closure)),
        json!({ "pair_phase": phases }),
    );

    let basis = nonion_basis();
    let checks: Vec<_> = fx
        .tilde
        .phases
        .iter()
        .map(|e| tilde_check(basis, e.index, e.claimed_exponent))
        .collect();
    let matched = checks.iter().filter(|c| c.matches).count();
    b.info(
        s,
        "tilde-phases",
        matched == checks.len(),
        format!("{matched}/{} printed tilde phases reproduced by twist then relabel", checks.len()),
        serde_json::to_value(&checks)?,
        None,
    );
    Ok(())
}

fn suite_tu3(b: &mut Builder, fx: &FixtureSet) -> Result<()> {
    let s = Scope::Tu3Table;
    let spots = tu3_spot_rows()?;
    let (ok, details) = spot_details(BasisKind::Tu3, &spots);
    b.check(
        s,
        "tu3-spot-rows",
        ok,
        "Cartan triple vanishes; rows {1,2,3}, {4,5,6}, {2,5,7}".into(),
        details,
    );

    let table = structure_table(BasisKind::Tu3)?;
    let diff = diff_rows(&table, &fx.tu3_table.rows);
    b.info(
        s,
        "tu3-table-diff",
        diff.all_match(),
        format!("{}/{} rows match the printed table", diff.summary.matched, diff.summary.total),
        serde_json::to_value(&diff)?,
        Some(diff_markdown(BasisKind::Tu3, &diff, &table)),
    );

    let sizes = fx.tu3_table.group_sizes();
    let want = [("I", 18), ("II", 18), ("III", 27), ("IV", 18), ("V", 2)];
    let cartan_rows: Vec<_> = table
        .iter()
        .filter(|r| r.is_zero() && r.triple.iter().all(|&i| matches!(i, 0 | 7 | 8)))
        .map(|r| r.triple)
        .collect();
    let ok = want.iter().all(|(g, n)| sizes.get(*g) == Some(n)) && cartan_rows == vec![[0, 7, 8]];
    b.check(
        s,
        "tu3-groups",
        ok,
        "83 non-Cartan rows split 18+18+27+18+2; one vanishing diagonal row".into(),
        json!({ "group_sizes": sizes, "cartan_rows": cartan_rows }),
    );
    Ok(())
}

fn suite_roots(b: &mut Builder, fx: &FixtureSet) -> Result<()> {
    let s = Scope::Roots;
    let g = roots::root_geometry()?;
    b.check(
        s,
        "root-geometry",
        g.passes(),
        "α/β norms, antipodes, projected roots, Z3 rotation".into(),
        serde_json::to_value(&g)?,
    );
    b.info(
        s,
        "alpha-orthogonality-all-pairs",
        g.alpha_orthogonal_all_pairs,
        format!(
            "⟨α_i, α_j⟩ = 0 over all distinct i, j in 1..6 {} (α_i = −α_(i+3))",
            yes(g.alpha_orthogonal_all_pairs)
        ),
        Value::Null,
        None,
    );
    let mut cmp = roots::compare_roots(&fx.alpha)?;
    cmp.extend(roots::compare_roots(&fx.beta)?);
    let matched = cmp.iter().filter(|c| c.matches).count();
    let table = MdTable {
        headers: vec!["root".into(), "printed".into(), "computed".into(), "match".into()],
        rows: cmp
            .iter()
            .map(|c| {
                vec![
                    c.name.clone(),
                    c.printed_as.clone(),
                    c.computed
                        .components
                        .iter()
                        .map(exact_and_approx)
                        .collect::<Vec<_>>()
                        .join(", "),
                    c.matches.to_string(),
                ]
            })
            .collect(),
    };
    b.info(
        s,
        "root-fixtures",
        matched == cmp.len(),
        format!("{matched}/{} printed roots reproduced", cmp.len()),
        serde_json::to_value(&cmp)?,
        Some(table),
    );
    Ok(())
}

fn suite_norm(b: &mut Builder, fx: &FixtureSet) -> Result<()> {
    let s = Scope::Norm;
    let det = cubic::det_poly()?;
    let variants: Vec<(u8, bool)> = (1..=4)
        .map(|v| Ok((v, cubic::variant_poly(v)? == det)))
        .collect::<Result<_>>()?;
    let census = term_census(&det);
    let mult = det_multiplicativity(&det, 100, 0x7e57);
    let ok = variants.iter().all(|(_, e)| *e)
        && census.weighted_terms == 81
        && census.distinct_monomials == 21
        && mult;
    b.check(
        s,
        "det-variants",
        ok,
        format!(
            "det = variants 1-4; census {} weighted / {} distinct; multiplicativity on 100 pairs {}",
            census.weighted_terms,
            census.distinct_monomials,
            yes(mult)
        ),
        json!({
            "det": det.to_string(),
            "variants": variants,
            "census": census,
            "multiplicativity": mult,
        }),
    );
    let uniform: Vec<(u8, bool)> = cubic::VARIANTS
        .iter()
        .map(|v| {
            let p = cubic::variant_with_pattern(&v.z, &[cubic::Conjugation::Plus; 3]);
            (v.number, p == det)
        })
        .collect();
    b.push(
        s,
        "variant-conjugation",
        Status::Informational,
        "cross-term conjugation pattern per variant; uniform pattern result shown".into(),
        json!({ "patterns": cubic::VARIANTS, "uniform_pattern_equals_det": uniform }),
        None,
    );
    let surface = fx.surface.poly();
    let same = surface == det && fx.surface.rhs.is_one();
    b.check(
        s,
        "surface-fixture",
        same,
        format!("printed unit surface equals det = 1: {}", yes(same)),
        json!({
            "census": term_census(&surface),
            "transcription_notes": fx.surface.transcription_notes,
        }),
    );
    Ok(())
}

fn suite_triple(b: &mut Builder) -> Result<()> {
    let s = Scope::TripleProduct;
    let a = cubic::analyze_triple_product()?;
    let axes = a.axis_cubes.iter().all(|&x| x);
    b.check(
        s,
        "triple-product-axes",
        axes,
        format!("A0 restricted to each axis is x_a^3: {}", yes(axes)),
        json!({ "axis_cubes": a.axis_cubes, "graded": a.graded }),
    );
    b.check(
        s,
        "triple-product-cycle-invariance",
        a.cycle_invariant(),
        format!(
            "A0 under x0→x7→x8, x1→x2→x3, x4→x5→x6: forward {}, backward {}",
            yes(a.cycle_invariant_forward),
            yes(a.cycle_invariant_backward)
        ),
        json!({ "a0": a.a0.to_string(), "census": a.a0_census }),
    );
    b.info(
        s,
        "triple-product-vanishing",
        a.nonzero_components.is_empty(),
        format!("nonzero components among A1..A8: {:?}", a.nonzero_components),
        json!({ "nonzero_components": a.nonzero_components }),
        None,
    );
    b.info(
        s,
        "triple-product-ratio",
        a.ratio_to_det.is_some(),
        match &a.ratio_to_det {
            Some(r) => format!("A0 = {r} · det"),
            None => "A0 is not a constant multiple of det".into(),
        },
        json!({ "ratio": a.ratio_to_det }),
        None,
    );
    Ok(())
}

fn suite_clifford(b: &mut Builder, fx: &FixtureSet) -> Result<()> {
    let s = Scope::Clifford;
    let dims: Vec<(usize, u64, usize)> = (1..=6)
        .map(|n| Ok((n, clifford::dimension(n)?, clifford::enumerate_monomials(n).len())))
        .collect::<Result<_>>()?;
    let fixture_dims_ok = fx
        .clifford
        .dimensions
        .iter()
        .all(|(n, d)| n.parse().ok().and_then(|n| clifford::dimension(n).ok()) == Some(*d));
    let ok = dims.iter().all(|&(n, d, e)| d == 3u64.pow(n as u32) && e as u64 == d) && fixture_dims_ok;
    b.check(s, "clifford-dimensions", ok, "dim = 3^n by enumeration, n = 1..6".into(), json!(dims));

    let census = clifford::degree_census(4)?;
    let expected = fx.clifford.degree_census.get("4").cloned().unwrap_or_default();
    b.check(
        s,
        "clifford-census",
        census == expected,
        format!("degree census n=4: {census:?}"),
        json!({ "computed": census, "fixture": expected }),
    );

    let suite = clifford::identity_suite(4)?;
    b.check(
        s,
        "clifford-symmetric-sum",
        suite.symmetric_sum_holds,
        "six-term symmetric sum is 6 exactly when k = l = m (n = 4, 64 triples)".into(),
        json!({ "failures": suite.symmetric_sum_failures }),
    );
    let failing: Vec<Value> = suite
        .weighted
        .iter()
        .filter(|w| !w.holds)
        .map(|w| json!({ "kind": w.kind, "k": w.k, "l": w.l, "computed": w.computed.to_string(), "expected": w.expected.to_string() }))
        .collect();
    let descending = clifford::identity_suite_ordered(4, false)?;
    b.check(
        s,
        "clifford-weighted-identities",
        suite.weighted_holds(),
        format!(
            "weighted identities for k < l: {}/{} hold; with k > l: {}/{} hold",
            suite.weighted.len() - failing.len(),
            suite.weighted.len(),
            descending.weighted.iter().filter(|w| w.holds).count(),
            descending.weighted.len()
        ),
        json!({ "failures": failing }),
    );

    let w = pair_phase_matrix(nonion_basis());
    let abstract_phase = clifford::pair_phase(0, 1, 2)?;
    b.check(
        s,
        "clifford-nonion-phase",
        w[1][2] == Some(abstract_phase),
        format!("generator pair phase {abstract_phase} vs nonion ω(1,2) = {:?}", w[1][2]),
        Value::Null,
    );

    let grades: Vec<(usize, [u64; 3])> = (1..=6)
        .map(|n| Ok((n, clifford::grade_dimensions(n)?)))
        .collect::<Result<_>>()?;
    b.push(
        s,
        "clifford-grade-splits",
        Status::Informational,
        "Z3 grade dimensions; the printed finer splits are not reproduced".into(),
        json!({ "computed": grades, "printed": fx.clifford.grade_splits_printed }),
        None,
    );
    Ok(())
}

fn suite_su3(b: &mut Builder, fx: &FixtureSet) -> Result<()> {
    let s = Scope::Su3;
    let f = roots::su3_structure_constants()?;
    let half = FieldElem::ratio(1, 2);
    let r3 = FieldElem::sqrt3() * FieldElem::ratio(1, 2);
    let mut expected = vec![((1, 2, 3), FieldElem::one())];
    for t in [(1, 4, 7), (1, 6, 5), (2, 4, 6), (2, 5, 7), (3, 4, 5), (3, 7, 6)] {
        expected.push((t, half.clone()));
    }
    expected.push(((4, 5, 8), r3.clone()));
    expected.push(((6, 7, 8), r3));
    let ok = expected
        .iter()
        .all(|((a, bb, c), v)| roots::su3_constant(&f, *a, *bb, *c) == *v)
        && roots::su3_commutators_reconstruct(&f);
    let listed: Vec<Value> = f
        .iter()
        .map(|((a, bb, c), v)| json!({ "abc": [a, bb, c], "f": v, "display": exact_and_approx(v) }))
        .collect();
    b.check(s, "su3-constants", ok, "f_abc from Gell-Mann commutators".into(), json!(listed));

    let d = roots::gellmann_decompose(Some(&fx.lambda))?;
    let rt = d.iter().all(|x| x.round_trip);
    b.check(
        s,
        "gellmann-roundtrip",
        rt,
        "all 8 Gell-Mann matrices decompose and reconstruct exactly in the nonion basis".into(),
        Value::Null,
    );
    let matched = d.iter().filter(|x| x.matches()).count();
    let table = MdTable {
        headers: vec!["λ".into(), "printed".into(), "computed".into(), "deviating q".into()],
        rows: d
            .iter()
            .map(|x| {
                vec![
                    format!("λ{}", x.index),
                    x.printed_as.clone().unwrap_or_default(),
                    x.computed
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(a, c)| format!("[{}]·q{a}", exact_and_approx(c)))
                        .collect::<Vec<_>>()
                        .join(" + "),
                    format!("{:?}", x.deviations),
                ]
            })
            .collect(),
    };
    b.info(
        s,
        "lambda-combos",
        matched == d.len(),
        format!("{matched}/{} printed λ combinations reproduced", d.len()),
        serde_json::to_value(&d)?,
        Some(table),
    );
    Ok(())
}

pub fn run_verify(scope: Scope, fixtures: &FixtureSet, strict: bool) -> Result<VerificationReport> {
    let mut b = Builder { strict, sections: Vec::new() };
    let suites: Vec<Scope> = match scope {
        Scope::All => Scope::SUITES.to_vec(),
        one => vec![one],
    };
    for s in suites {
        match s {
            Scope::NonionTable => suite_nonion(&mut b, fixtures)?,
            Scope::Tu3Table => suite_tu3(&mut b, fixtures)?,
            Scope::Roots => suite_roots(&mut b, fixtures)?,
            Scope::Norm => suite_norm(&mut b, fixtures)?,
            Scope::TripleProduct => suite_triple(&mut b)?,
            Scope::Clifford => suite_clifford(&mut b, fixtures)?,
            Scope::Su3 => suite_su3(&mut b, fixtures)?,
            Scope::All => unreachable!(),
        }
    }
    Ok(VerificationReport {
        schema: REPORT_SCHEMA.into(),
        body: ReportBody {
            scope,
            strict,
            sections: b.sections,
            fixtures: FixtureInfo {
                source: fixtures.source.clone(),
                checksums: fixtures.checksums.clone(),
            },
        },
        metadata: Metadata::current(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_names_roundtrip() {
        for s in std::iter::once(Scope::All).chain(Scope::SUITES) {
            assert_eq!(s.name().parse::<Scope>().unwrap(), s);
        }
        assert!("bogus".parse::<Scope>().is_err());
    }

    #[test]
    fn roots_scope_passes() {
        let fx = FixtureSet::embedded().unwrap();
        let r = run_verify(Scope::Roots, &fx, false).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn json_roundtrip_and_determinism() {
        let fx = FixtureSet::embedded().unwrap();
        let r = run_verify(Scope::Su3, &fx, false).unwrap();
        let text = r.to_json().unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let again = run_verify(Scope::Su3, &fx, false).unwrap().to_json().unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn markdown_nonion_table_has_84_rows() {
        let table = structure_table(BasisKind::Nonion).unwrap();
        let md = render_table(&table_markdown(BasisKind::Nonion, &table));
        assert_eq!(md.lines().count(), 84 + 2);
    }

    #[test]
    fn strict_escalates_informational() {
        let fx = FixtureSet::embedded().unwrap();
        let r = run_verify(Scope::Su3, &fx, true).unwrap();
        assert!(r.body.sections.iter().all(|s| s.status != Status::Informational));
    }
}
