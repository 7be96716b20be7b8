use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ternion::bases::{nonion_basis, pair_phase_matrix, tu3_basis};
use ternion::bracket::{bracket_row, diff_rows, structure_table, BasisKind, TableFixture};
use ternion::clifford;
use ternion::cubic::{self, term_census};
use ternion::fixtures::{self, FixtureSet};
use ternion::mat3::Mat3;
use ternion::report::{self, exact_and_approx, format_targets, render_table, table_markdown, Scope};
use ternion::roots::{self, RootVector};
use ternion::scalar::{parse_rational, FieldElem};
use ternion::{Error, Result};

#[derive(Parser)]
#[command(name = "ternion", version, about = "Exact nonion algebra: brackets, cubic norms, roots, ternary Clifford")]
struct Cli {
    /// Read fixtures from this directory instead of the embedded copies.
    #[arg(long, global = true, value_name = "DIR")]
    data: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Nonion,
    Tu3,
}

impl From<Basis> for BasisKind {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Nonion => BasisKind::Nonion,
            Basis::Tu3 => BasisKind::Tu3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyScope {
    All,
    NonionTable,
    Tu3Table,
    Roots,
    Norm,
    TripleProduct,
    Clifford,
    Su3,
}

impl From<VerifyScope> for Scope {
    fn from(s: VerifyScope) -> Self {
        match s {
            VerifyScope::All => Scope::All,
            VerifyScope::NonionTable => Scope::NonionTable,
            VerifyScope::Tu3Table => Scope::Tu3Table,
            VerifyScope::Roots => Scope::Roots,
            VerifyScope::Norm => Scope::Norm,
            VerifyScope::TripleProduct => Scope::TripleProduct,
            VerifyScope::Clifford => Scope::Clifford,
            VerifyScope::Su3 => Scope::Su3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandTarget {
    Det,
    Triple,
    Variant1,
    Variant2,
    Variant3,
    Variant4,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusTarget {
    Det,
    Triple,
    Surface,
}

#[derive(Subcommand)]
enum Command {
    /// Print basis matrices and the pair-phase table.
    Bases {
        #[command(subcommand)]
        action: BasesAction,
    },
    /// Evaluate {q_k, q_l, q_m} and decompose it in the basis.
    Bracket {
        k: usize,
        l: usize,
        m: usize,
        #[arg(long, value_enum, default_value = "nonion")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// All 84 brackets k < l < m.
    Table {
        #[arg(long, value_enum, default_value = "nonion")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Compare the computed table with a reference table. Exit 1 on any mismatch.
    DiffTable {
        #[arg(long, value_enum, default_value = "nonion")]
        basis: Basis,
        /// Reference table; defaults to the bundled one.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// det Q̂ at rational coordinates "p/q,...".
    Norm {
        /// Nine comma-separated rationals x0..x8.
        #[arg(long)]
        coords: String,
    },
    /// Expand a polynomial.
    Expand {
        #[arg(value_enum)]
        what: ExpandTarget,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Distinct and permutation-weighted term counts.
    Census {
        #[arg(value_enum)]
        what: CensusTarget,
    },
    /// α or β roots from structure constants.
    #[command(args_conflicts_with_subcommands = true)]
    Roots {
        #[command(subcommand)]
        action: Option<RootsAction>,
        #[arg(long, conflicts_with = "beta")]
        alpha: bool,
        #[arg(long)]
        beta: bool,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// su(3) structure constants from Gell-Mann matrices.
    Su3 {
        #[command(subcommand)]
        action: Su3Action,
    },
    /// Gell-Mann matrices in the nonion basis vs the printed combinations.
    Lambda {
        #[command(subcommand)]
        action: LambdaAction,
    },
    /// Ternary Clifford algebra on n generators.
    Clifford {
        #[command(subcommand)]
        action: CliffordAction,
    },
    /// Run verification suites. Exit 0 iff no section fails.
    Verify(VerifyArgs),
    /// Fixture maintenance.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum BasesAction {
    Show {
        #[arg(long, value_enum, default_value = "nonion")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum RootsAction {
    /// Apply R^power to a root.
    Rotate {
        /// alpha1..alpha6 or beta1..beta6
        #[arg(long)]
        vector: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
}

#[derive(Subcommand)]
enum Su3Action {
    Check,
}

#[derive(Subcommand)]
enum LambdaAction {
    Diff {
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CliffordAction {
    Dim { n: usize },
    Census { n: usize },
    /// Multiply two words such as "q2 q1".
    Mul {
        a: String,
        b: String,
        #[arg(long)]
        n: usize,
    },
    Identities {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Write the bundled fixtures into a directory.
    Export { dir: PathBuf },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    scope: VerifyScope,
    /// Treat informational sections as pass/fail.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn matrix_md(m: &Mat3) -> String {
    m.entries
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn load(data: Option<&Path>) -> Result<FixtureSet> {
    FixtureSet::load(data)
}

/// `Ok(true)` for success, `Ok(false)` for a mismatch.
fn run(cli: Cli) -> Result<bool> {
    let data = cli.data.as_deref();
    match cli.command {
        Command::Bases { action: BasesAction::Show { basis, format } } => {
            let kind = BasisKind::from(basis);
            let elements = kind.elements();
            let phases = matches!(kind, BasisKind::Nonion).then(|| pair_phase_matrix(nonion_basis()));
            if format == Format::Json {
                print_json(&json!({ "basis": kind, "elements": elements, "pair_phase": phases }))?;
            } else {
                let letter = if kind == BasisKind::Nonion { "q" } else { "Q" };
                for (i, m) in elements.iter().enumerate() {
                    println!("{letter}{i} = {}", matrix_md(m));
                }
                if let Some(w) = phases {
                    println!("\nω(a,b) with q_a q_b = j^ω q_b q_a\n");
                    println!("| a\\b | {} |", (0..9).map(|b| b.to_string()).collect::<Vec<_>>().join(" | "));
                    println!("|{}", "---|".repeat(10));
                    for (a, row) in w.iter().enumerate() {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|x| x.map_or("-".into(), |v| v.to_string()))
                            .collect();
                        println!("| {a} | {} |", cells.join(" | "));
                    }
                }
                if kind == BasisKind::Tu3 {
                    // Touch the shared instance so its invariants are validated.
                    let _ = tu3_basis();
                }
            }
            Ok(true)
        }
        Command::Bracket { k, l, m, basis, format } => {
            let kind = BasisKind::from(basis);
            let row = bracket_row(kind, k, l, m)?;
            if format == Format::Json {
                print_json(&row)?;
            } else {
                println!("{{{k},{l},{m}}} = {}", format_targets(kind, &row.targets));
            }
            Ok(true)
        }
        Command::Table { basis, format } => {
            let kind = BasisKind::from(basis);
            let table = structure_table(kind)?;
            if format == Format::Json {
                print_json(&json!({ "basis": kind, "rows": table }))?;
            } else {
                print!("{}", render_table(&table_markdown(kind, &table)));
            }
            Ok(true)
        }
        Command::DiffTable { basis, fixture, format } => {
            let kind = BasisKind::from(basis);
            let reference = match fixture {
                Some(p) => TableFixture::load(&p)?,
                None => load(data)?.table(kind).clone(),
            };
            if reference.basis != kind {
                return Err(Error::Parse(format!(
                    "fixture is for basis {}, not {kind}",
                    reference.basis
                )));
            }
            let table = structure_table(kind)?;
            let diff = diff_rows(&table, &reference.rows);
            if format == Format::Json {
                print_json(&diff)?;
            } else {
                let s = &diff.summary;
                println!(
                    "{}: {} match, {} mismatch, {} missing, {} extra (of {})",
                    kind, s.matched, s.mismatched, s.missing_in_fixture, s.extra_in_fixture, s.total
                );
                for r in &diff.rows {
                    if let ternion::bracket::RowStatus::Mismatch { expected, computed } = &r.status {
                        println!(
                            "{:?}: fixture {} | computed {}",
                            r.triple,
                            format_targets(kind, expected),
                            format_targets(kind, computed)
                        );
                    }
                }
            }
            Ok(diff.all_match())
        }
        Command::Norm { coords } => {
            let parts: Vec<&str> = coords.split(',').map(str::trim).collect();
            if parts.len() != 9 {
                return Err(Error::Parse(format!("expected 9 coordinates, got {}", parts.len())));
            }
            let mut x: [FieldElem; 9] = std::array::from_fn(|_| FieldElem::zero());
            for (slot, c) in x.iter_mut().zip(parts) {
                *slot = FieldElem::from_rational(parse_rational(c)?);
            }
            let value = cubic::det_poly()?.eval(&x);
            let (re, _) = value.approx_complex();
            print_json(&json!({ "exact": value.to_string(), "coords": value, "approx": re }))?;
            Ok(true)
        }
        Command::Expand { what, format } => {
            let (name, poly) = match what {
                ExpandTarget::Det => ("det".to_string(), cubic::det_poly()?),
                ExpandTarget::Variant1 => ("variant1".into(), cubic::variant_poly(1)?),
                ExpandTarget::Variant2 => ("variant2".into(), cubic::variant_poly(2)?),
                ExpandTarget::Variant3 => ("variant3".into(), cubic::variant_poly(3)?),
                ExpandTarget::Variant4 => ("variant4".into(), cubic::variant_poly(4)?),
                ExpandTarget::Triple => {
                    let comps = cubic::triple_product_components();
                    if format == Format::Json {
                        print_json(&json!({ "components": comps }))?;
                    } else {
                        for (p, c) in comps.iter().enumerate() {
                            println!("A{p} = {c}");
                        }
                    }
                    return Ok(true);
                }
            };
            if format == Format::Json {
                print_json(&json!({ "name": name, "terms": poly }))?;
            } else {
                println!("{name} = {poly}");
            }
            Ok(true)
        }
        Command::Census { what } => {
            let poly = match what {
                CensusTarget::Det => cubic::det_poly()?,
                CensusTarget::Triple => cubic::triple_product_components()[0].clone(),
                CensusTarget::Surface => load(data)?.surface.poly(),
            };
            print_json(&term_census(&poly))?;
            Ok(true)
        }
        Command::Roots { action: Some(RootsAction::Rotate { vector, power }), .. } => {
            let v = named_root(&vector)?;
            let r = roots::z3_rotate(&v, power);
            print_json(&json!({
                "input": vector,
                "power": power,
                "result": r,
                "display": r.components.iter().map(exact_and_approx).collect::<Vec<_>>(),
            }))?;
            Ok(true)
        }
        Command::Roots { action: None, alpha, beta, format } => {
            let fx = load(data)?;
            let fixture = if beta { &fx.beta } else { &fx.alpha };
            let _ = alpha;
            let cmp = roots::compare_roots(fixture)?;
            if format == Format::Json {
                print_json(&cmp)?;
            } else {
                for c in &cmp {
                    let comps: Vec<String> = c.computed.components.iter().map(exact_and_approx).collect();
                    println!("{} = ({}) match: {}", c.name, comps.join(", "), c.matches);
                }
            }
            Ok(cmp.iter().all(|c| c.matches))
        }
        Command::Su3 { action: Su3Action::Check } => {
            let f = roots::su3_structure_constants()?;
            let ok = roots::su3_commutators_reconstruct(&f);
            for ((a, b, c), v) in &f {
                println!("f{a}{b}{c} = {}", exact_and_approx(v));
            }
            println!("commutators reconstruct: {ok}");
            Ok(ok)
        }
        Command::Lambda { action: LambdaAction::Diff { format } } => {
            let fx = load(data)?;
            let d = roots::gellmann_decompose(Some(&fx.lambda))?;
            if format == Format::Json {
                print_json(&d)?;
            } else {
                for x in &d {
                    let terms: Vec<String> = x
                        .computed
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(a, c)| format!("({c})q{a}"))
                        .collect();
                    println!(
                        "λ{} = {} | deviations from printed: {:?}",
                        x.index,
                        terms.join(" + "),
                        x.deviations
                    );
                }
            }
            Ok(d.iter().all(|x| x.matches()))
        }
        Command::Clifford { action } => run_clifford(action),
        Command::Verify(args) => {
            let fx = load(data)?;
            let r = report::run_verify(args.scope.into(), &fx, args.strict)?;
            let fmt = match args.format {
                Format::Json => report::Format::Json,
                Format::Md => report::Format::Markdown,
            };
            match args.out {
                Some(p) => report::emit_report(&r, fmt, &p)?,
                None => print!("{}", report::render(&r, fmt)?),
            }
            Ok(r.passed())
        }
        Command::Fixtures { action: FixturesAction::Export { dir } } => {
            fixtures::export_embedded(&dir)?;
            Ok(true)
        }
    }
}

fn named_root(name: &str) -> Result<RootVector> {
    let parse = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    if let Some(i) = parse("alpha") {
        roots::extract_alpha_root(i)
    } else if let Some(i) = parse("beta") {
        Ok(roots::extract_beta_root(i)?.1)
    } else {
        Err(Error::Parse(format!("unknown root {name:?}; use alpha1..6 or beta1..6")))
    }
}

fn run_clifford(action: CliffordAction) -> Result<bool> {
    match action {
        CliffordAction::Dim { n } => {
            let d = clifford::dimension(n)?;
            let enumerated = (n <= clifford::MAX_ENUMERATED).then(|| clifford::enumerate_monomials(n).len());
            print_json(&json!({ "n": n, "dimension": d, "enumerated": enumerated }))?;
            Ok(enumerated.map_or(true, |e| e as u64 == d))
        }
        CliffordAction::Census { n } => {
            let c = clifford::degree_census(n)?;
            print_json(&json!({ "n": n, "census": c, "grades": clifford::grade_dimensions(n)? }))?;
            Ok(true)
        }
        CliffordAction::Mul { a, b, n } => {
            let x = clifford::parse_word(&a, n)?;
            let y = clifford::parse_word(&b, n)?;
            let p = clifford::elem_mul(&x, &y)?;
            println!("{p}");
            Ok(true)
        }
        CliffordAction::Identities { n } => {
            let s = clifford::identity_suite(n)?;
            println!("symmetric sum = 6·[k=l=m]: {}", s.symmetric_sum_holds);
            for w in &s.weighted {
                println!(
                    "kind {} (k={}, l={}): {} (expected {}) {}",
                    w.kind,
                    w.k + 1,
                    w.l + 1,
                    w.computed,
                    w.expected,
                    if w.holds { "ok" } else { "MISMATCH" }
                );
            }
            Ok(s.symmetric_sum_holds && s.weighted_holds())
        }
    }
}
