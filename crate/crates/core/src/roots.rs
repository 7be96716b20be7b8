//! Cartan triple, α/β roots, the Z₃ rotation, and the su(3) cross-check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bases::{nonion_basis, tu3_basis};
use crate::bracket::s3_bracket;
use crate::error::{Error, Result};
use crate::mat3::Mat3;
use crate::scalar::FieldElem;

fn int(n: i64) -> FieldElem {
    FieldElem::from_integer(n)
}

fn ratio(p: i64, q: i64) -> FieldElem {
    FieldElem::ratio(p, q)
}

/// True when `{Q₀, Q₇, Q₈}` vanishes.
pub fn cartan_check(elements: &[Mat3; 9]) -> bool {
    s3_bracket(&elements[0], &elements[7], &elements[8]).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootVector {
    pub components: [FieldElem; 3],
}

impl RootVector {
    pub fn new(components: [FieldElem; 3]) -> Self {
        RootVector { components }
    }

    pub fn is_real(&self) -> bool {
        self.components.iter().all(FieldElem::is_real)
    }

    pub fn neg(&self) -> Self {
        RootVector::new(std::array::from_fn(|i| -&self.components[i]))
    }

    pub fn add(&self, other: &Self) -> Self {
        RootVector::new(std::array::from_fn(|i| &self.components[i] + &other.components[i]))
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(FieldElem::is_zero)
    }

    /// `(0, v₂, v₃)`.
    pub fn projected(&self) -> Self {
        let [_, b, c] = self.components.clone();
        RootVector::new([FieldElem::zero(), b, c])
    }

    pub fn approx(&self) -> [f64; 3] {
        std::array::from_fn(|i| self.components[i].approx_complex().0)
    }
}

pub fn root_inner(a: &RootVector, b: &RootVector) -> FieldElem {
    a.components
        .iter()
        .zip(&b.components)
        .map(|(x, y)| x * y)
        .sum()
}

fn proportional(m: &Mat3, to: &Mat3, index: usize) -> Result<FieldElem> {
    let s = m.scalar_multiple_of(to).ok_or(Error::NotProportional(index))?;
    if !s.is_real() {
        return Err(Error::Invariant(format!("root component {s} is not real")));
    }
    Ok(s)
}

fn check_step(i: usize) -> Result<()> {
    if (1..=6).contains(&i) {
        Ok(())
    } else {
        Err(Error::Range(format!("step index {i} outside 1..=6")))
    }
}

/// Scalars of `{Q_i,Q₇,Q₈}`, `{Q₀,Q_i,Q₇}`, `{Q₀,Q_i,Q₈}` relative to `Q_i`.
pub fn extract_alpha_root(i: usize) -> Result<RootVector> {
    check_step(i)?;
    let q = tu3_basis().elements();
    let brackets = [
        s3_bracket(&q[i], &q[7], &q[8]),
        s3_bracket(&q[0], &q[i], &q[7]),
        s3_bracket(&q[0], &q[i], &q[8]),
    ];
    let mut out: [FieldElem; 3] = std::array::from_fn(|_| FieldElem::zero());
    for (slot, b) in out.iter_mut().zip(&brackets) {
        *slot = proportional(b, &q[i], i)?;
    }
    Ok(RootVector::new(out))
}

/// Step-operator pairs whose product is again a step operator.
pub const BETA_PAIRS: [(usize, usize); 6] = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)];

/// `(target, β)` from `{Q₀,Q_k,Q_l}`, `{Q₇,Q_k,Q_l}`, `{Q₈,Q_k,Q_l}`, where
/// `Q_target` is the nonzero one of `Q_k Q_l`, `Q_l Q_k`.
pub fn extract_beta_root(pair_index: usize) -> Result<(usize, RootVector)> {
    check_step(pair_index)?;
    let (k, l) = BETA_PAIRS[pair_index - 1];
    let q = tu3_basis().elements();
    let products = [q[k].mat_mul(&q[l]), q[l].mat_mul(&q[k])];
    let target = (1..=6)
        .find(|&t| products.contains(&q[t]))
        .ok_or_else(|| Error::Invariant(format!("Q{k}, Q{l} have no step-operator product")))?;
    let brackets = [
        s3_bracket(&q[0], &q[k], &q[l]),
        s3_bracket(&q[7], &q[k], &q[l]),
        s3_bracket(&q[8], &q[k], &q[l]),
    ];
    let mut out: [FieldElem; 3] = std::array::from_fn(|_| FieldElem::zero());
    for (slot, b) in out.iter_mut().zip(&brackets) {
        *slot = proportional(b, &q[target], target)?;
    }
    Ok((target, RootVector::new(out)))
}

/// `R = [[1,0,0],[0,−1/2,√3/2],[0,−√3/2,−1/2]]`, rotation by 2π/3 about the first axis.
pub fn rotation_matrix() -> Mat3 {
    let half = ratio(1, 2);
    let s = FieldElem::sqrt3() * ratio(1, 2);
    Mat3::new([
        [int(1), int(0), int(0)],
        [int(0), -&half, s.clone()],
        [int(0), -s, -half],
    ])
}

pub fn z3_rotate(v: &RootVector, power: u32) -> RootVector {
    let r = rotation_matrix().pow(power);
    RootVector::new(std::array::from_fn(|row| {
        (0..3).map(|c| &r.entries[row][c] * &v.components[c]).sum()
    }))
}

/// All checks on root geometry, each recorded separately.
#[derive(Clone, Debug, Serialize)]
pub struct RootGeometry {
    pub alpha: Vec<RootVector>,
    pub beta: Vec<(usize, RootVector)>,
    pub cartan_vanishes: bool,
    pub alpha1_value: bool,
    pub alpha_unit_norms: bool,
    pub alpha_orthogonal_within_triples: bool,
    /// The unrestricted claim over all distinct pairs in 1..=6.
    pub alpha_orthogonal_all_pairs: bool,
    pub alpha_antipodal: bool,
    pub beta_norms_three: bool,
    pub beta_pairwise_minus_one: bool,
    pub beta_antipodal: bool,
    pub projected_norms_two_thirds: bool,
    pub projected_pairwise_minus_third: bool,
    pub projected_sum_zero: bool,
    pub norm_ratio_three_halves: bool,
    pub rotation_order_three: bool,
    pub rotation_cycles_alpha: bool,
    pub rotation_cycles_beta: bool,
    pub all_real: bool,
}

impl RootGeometry {
    /// Every check except the unrestricted orthogonality claim.
    pub fn passes(&self) -> bool {
        self.cartan_vanishes
            && self.alpha1_value
            && self.alpha_unit_norms
            && self.alpha_orthogonal_within_triples
            && self.alpha_antipodal
            && self.beta_norms_three
            && self.beta_pairwise_minus_one
            && self.beta_antipodal
            && self.projected_norms_two_thirds
            && self.projected_pairwise_minus_third
            && self.projected_sum_zero
            && self.norm_ratio_three_halves
            && self.rotation_order_three
            && self.rotation_cycles_alpha
            && self.rotation_cycles_beta
            && self.all_real
    }
}

pub fn alpha1_expected() -> RootVector {
    RootVector::new([
        FieldElem::sqrt3() * ratio(1, 3),
        int(0),
        FieldElem::sqrt6() * ratio(-1, 3),
    ])
}

pub fn root_geometry() -> Result<RootGeometry> {
    let alpha = (1..=6).map(extract_alpha_root).collect::<Result<Vec<_>>>()?;
    let beta = (1..=6).map(extract_beta_root).collect::<Result<Vec<_>>>()?;
    let b: Vec<&RootVector> = beta.iter().map(|(_, r)| r).collect();
    let pairs = |n: usize, lo: usize| {
        (lo..lo + n).flat_map(move |i| (lo..lo + n).filter(move |&j| i != j).map(move |j| (i, j)))
    };
    let proj: Vec<RootVector> = alpha[..3].iter().map(RootVector::projected).collect();
    let r = rotation_matrix();
    Ok(RootGeometry {
        cartan_vanishes: cartan_check(tu3_basis().elements()),
        alpha1_value: alpha[0] == alpha1_expected(),
        alpha_unit_norms: alpha.iter().all(|a| root_inner(a, a) == int(1)),
        alpha_orthogonal_within_triples: pairs(3, 0)
            .chain(pairs(3, 3))
            .all(|(i, j)| root_inner(&alpha[i], &alpha[j]).is_zero()),
        alpha_orthogonal_all_pairs: pairs(6, 0).all(|(i, j)| root_inner(&alpha[i], &alpha[j]).is_zero()),
        alpha_antipodal: (0..3).all(|i| alpha[i] == alpha[i + 3].neg()),
        beta_norms_three: b.iter().all(|x| root_inner(x, x) == int(3)),
        beta_pairwise_minus_one: pairs(3, 0).all(|(i, j)| root_inner(b[i], b[j]) == int(-1)),
        beta_antipodal: (0..3).all(|i| *b[i] == b[i + 3].neg()),
        projected_norms_two_thirds: proj.iter().all(|p| root_inner(p, p) == ratio(2, 3)),
        projected_pairwise_minus_third: pairs(3, 0)
            .all(|(i, j)| root_inner(&proj[i], &proj[j]) == ratio(-1, 3)),
        projected_sum_zero: proj[0].add(&proj[1]).add(&proj[2]).is_zero(),
        norm_ratio_three_halves: (0..3).all(|i| {
            root_inner(&alpha[i], &alpha[i])
                .checked_div(&root_inner(&proj[i], &proj[i]))
                .map(|x| x == ratio(3, 2))
                .unwrap_or(false)
        }),
        rotation_order_three: r.pow(3) == Mat3::identity(),
        rotation_cycles_alpha: (0..3).all(|i| z3_rotate(&alpha[i], 1) == alpha[(i + 1) % 3]),
        rotation_cycles_beta: (0..3).all(|i| z3_rotate(b[i], 1) == *b[(i + 1) % 3]),
        all_real: alpha.iter().chain(b.iter().copied()).all(RootVector::is_real),
        alpha,
        beta,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootEntry {
    pub name: String,
    pub index: usize,
    pub components: [FieldElem; 3],
    pub printed_as: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootFixture {
    pub schema: String,
    pub kind: String,
    pub roots: Vec<RootEntry>,
}

pub const ROOTS_SCHEMA: &str = "ternion/roots/v1";

impl RootFixture {
    pub fn parse(text: &str, label: &str) -> Result<Self> {
        let bad = |message: String| Error::FixtureParse {
            path: label.to_string(),
            message,
        };
        let f: RootFixture = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if f.schema != ROOTS_SCHEMA {
            return Err(bad(format!("unexpected schema {:?}", f.schema)));
        }
        if f.kind != "alpha" && f.kind != "beta" {
            return Err(bad(format!("unknown root kind {:?}", f.kind)));
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootComparison {
    pub name: String,
    pub printed_as: String,
    pub computed: RootVector,
    pub expected: RootVector,
    pub matches: bool,
}

/// Computed roots next to each fixture entry.
pub fn compare_roots(fixture: &RootFixture) -> Result<Vec<RootComparison>> {
    fixture
        .roots
        .iter()
        .map(|e| {
            let (computed, target_ok) = if fixture.kind == "alpha" {
                (extract_alpha_root(e.index)?, true)
            } else {
                let (t, r) = extract_beta_root(e.index)?;
                (r, e.target.map_or(true, |x| x == t))
            };
            let expected = RootVector::new(e.components.clone());
            Ok(RootComparison {
                name: e.name.clone(),
                printed_as: e.printed_as.clone(),
                matches: target_ok && computed == expected,
                computed,
                expected,
            })
        })
        .collect()
}

/// The eight Gell-Mann matrices λ₁…λ₈, with `i = (1+2j)/√3`.
pub fn gellmann() -> [Mat3; 8] {
    let i = FieldElem::imaginary_unit();
    let e = |r: usize, c: usize, v: FieldElem| {
        let mut m = Mat3::zero();
        m.entries[r][c] = v;
        m
    };
    let sym = |a: usize, b: usize| e(a, b, int(1)).mat_add(&e(b, a, int(1)));
    let anti = |a: usize, b: usize| e(a, b, -&i).mat_add(&e(b, a, i.clone()));
    let s3 = FieldElem::sqrt3() * ratio(1, 3);
    [
        sym(0, 1),
        anti(0, 1),
        Mat3::diag(int(1), int(-1), int(0)),
        sym(0, 2),
        anti(0, 2),
        sym(1, 2),
        anti(1, 2),
        Mat3::diag(s3.clone(), s3.clone(), s3 * int(-2)),
    ]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaCombo {
    pub name: String,
    pub index: usize,
    pub coefficients: Vec<FieldElem>,
    pub printed_as: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaFixture {
    pub schema: String,
    pub imaginary_unit: String,
    pub combos: Vec<LambdaCombo>,
}

pub const LAMBDA_SCHEMA: &str = "ternion/lambda-combos/v1";

impl LambdaFixture {
    pub fn parse(text: &str, label: &str) -> Result<Self> {
        let bad = |message: String| Error::FixtureParse {
            path: label.to_string(),
            message,
        };
        let f: LambdaFixture = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if f.schema != LAMBDA_SCHEMA {
            return Err(bad(format!("unexpected schema {:?}", f.schema)));
        }
        for c in &f.combos {
            if c.coefficients.len() != 9 || !(1..=8).contains(&c.index) {
                return Err(bad(format!("combo {} is malformed", c.name)));
            }
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaDiff {
    pub index: usize,
    pub computed: Vec<FieldElem>,
    pub round_trip: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_as: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<Vec<FieldElem>>,
    /// Nonion indices whose computed and claimed coefficients differ.
    pub deviations: Vec<usize>,
}

impl LambdaDiff {
    pub fn matches(&self) -> bool {
        self.claimed.is_some() && self.deviations.is_empty()
    }
}

/// Decomposes each λ in the nonion basis and compares against the fixture.
pub fn gellmann_decompose(fixture: Option<&LambdaFixture>) -> Result<Vec<LambdaDiff>> {
    let basis = nonion_basis();
    gellmann()
        .iter()
        .enumerate()
        .map(|(n, lam)| {
            let index = n + 1;
            let coeffs = basis.decompose(lam)?;
            let round_trip = basis.orthogonal().combine(&coeffs) == *lam;
            let combo = fixture.and_then(|f| f.combos.iter().find(|c| c.index == index));
            let deviations = combo
                .map(|c| (0..9).filter(|&a| c.coefficients[a] != coeffs[a]).collect())
                .unwrap_or_default();
            Ok(LambdaDiff {
                index,
                computed: coeffs.to_vec(),
                round_trip,
                printed_as: combo.map(|c| c.printed_as.clone()),
                claimed: combo.map(|c| c.coefficients.clone()),
                deviations,
            })
        })
        .collect()
}

/// `f_abc = tr([λ_a, λ_b] λ_c) / 4i` for `a < b < c` (1-based), nonzero only.
pub fn su3_structure_constants() -> Result<BTreeMap<(usize, usize, usize), FieldElem>> {
    let lam = gellmann();
    let four_i_inv = (FieldElem::imaginary_unit() * int(4)).invert()?;
    let mut out = BTreeMap::new();
    for a in 0..8 {
        for b in (a + 1)..8 {
            let comm = lam[a].mat_mul(&lam[b]).mat_sub(&lam[b].mat_mul(&lam[a]));
            for (c, lc) in lam.iter().enumerate().skip(b + 1) {
                let f = comm.mat_mul(lc).trace() * &four_i_inv;
                if !f.is_real() {
                    return Err(Error::Invariant(format!("f{a}{b}{c} is not real")));
                }
                if !f.is_zero() {
                    out.insert((a + 1, b + 1, c + 1), f);
                }
            }
        }
    }
    Ok(out)
}

/// `f` at any ordering of three 1-based indices, using total antisymmetry.
pub fn su3_constant(
    table: &BTreeMap<(usize, usize, usize), FieldElem>,
    a: usize,
    b: usize,
    c: usize,
) -> FieldElem {
    let mut idx = [a, b, c];
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx[0] == idx[1] || idx[1] == idx[2] {
        return FieldElem::zero();
    }
    table
        .get(&(idx[0], idx[1], idx[2]))
        .map(|f| f * &int(sign))
        .unwrap_or_else(FieldElem::zero)
}

/// Confirms `[g_a, g_b] = i f_abc g_c` with `g = λ/2` for every pair.
pub fn su3_commutators_reconstruct(
    table: &BTreeMap<(usize, usize, usize), FieldElem>,
) -> bool {
    let g: Vec<Mat3> = gellmann().iter().map(|l| l.scale(&ratio(1, 2))).collect();
    let i = FieldElem::imaginary_unit();
    (0..8).all(|a| {
        (0..8).all(|b| {
            let lhs = g[a].mat_mul(&g[b]).mat_sub(&g[b].mat_mul(&g[a]));
            let rhs = (0..8).fold(Mat3::zero(), |acc, c| {
                let f = su3_constant(table, a + 1, b + 1, c + 1);
                if f.is_zero() {
                    acc
                } else {
                    acc.mat_add(&g[c].scale(&(&i * &f)))
                }
            });
            lhs == rhs
        })
    })
}
