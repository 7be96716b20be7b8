//! The cubic norm `det Q̂(x)`, its z-factorizations, and the triple product
//! `Q · Q̃ · Q̃̃` as polynomials in x₀…x₈.

use serde::{Deserialize, Serialize};

use crate::bases::{grade, nonion_basis, PhaseTwist};
use crate::error::{Error, Result};
use crate::mat3::{Mat3, Matrix3};
use crate::mpoly::{exponents_of, MPoly, NVARS};
use crate::scalar::FieldElem;

/// An element `Σ p_a q_a` of the nonion algebra with polynomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonionPoly {
    pub components: [MPoly; 9],
}

impl NonionPoly {
    pub fn zero() -> Self {
        NonionPoly {
            components: std::array::from_fn(|_| MPoly::zero()),
        }
    }

    /// `Σ phase_a · x_a · q_a`.
    pub fn coordinates(phases: &[FieldElem; 9]) -> Self {
        NonionPoly {
            components: std::array::from_fn(|a| MPoly::var(a).scale(&phases[a])),
        }
    }

    /// Product through the nonion multiplication table.
    pub fn mul(&self, other: &Self) -> Self {
        let basis = nonion_basis();
        let mut out = NonionPoly::zero();
        for (a, pa) in self.components.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, pb) in other.components.iter().enumerate() {
                if pb.is_zero() {
                    continue;
                }
                let prod = basis.product(a, b);
                let term = pa.mul(pb).scale(&FieldElem::j_pow(prod.phase as i64));
                out.components[prod.target] = out.components[prod.target].add(&term);
            }
        }
        out
    }

    /// The 3×3 matrix `Σ p_a q_a` with polynomial entries.
    pub fn matrix(&self) -> Matrix3<MPoly> {
        let q = nonion_basis().elements();
        let mut m = Matrix3::<MPoly>::zero();
        for (p, qa) in self.components.iter().zip(q) {
            if p.is_zero() {
                continue;
            }
            m = m.mat_add(&qa.map(|c| MPoly::constant(c.clone())).scale(p));
        }
        m
    }
}

/// Entries of Q̂ as printed: each cell is a sum of `j^k x_v`.
const PRINTED_QHAT: [[[(usize, i64); 3]; 3]; 3] = [
    [
        [(0, 0), (7, 1), (8, 2)],
        [(1, 0), (2, 0), (3, 0)],
        [(4, 0), (5, 1), (6, 2)],
    ],
    [
        [(4, 0), (5, 0), (6, 0)],
        [(0, 0), (7, 2), (8, 1)],
        [(1, 0), (2, 1), (3, 2)],
    ],
    [
        [(1, 0), (2, 2), (3, 1)],
        [(4, 0), (5, 2), (6, 1)],
        [(0, 0), (7, 0), (8, 0)],
    ],
];

pub fn printed_qhat() -> Matrix3<MPoly> {
    Matrix3::from_fn(|r, c| {
        PRINTED_QHAT[r][c]
            .iter()
            .fold(MPoly::zero(), |acc, &(v, k)| {
                acc.add(&MPoly::var(v).scale(&FieldElem::j_pow(k)))
            })
    })
}

#[derive(Clone, Debug)]
pub struct QHat {
    pub poly: NonionPoly,
    pub matrix: Matrix3<MPoly>,
}

/// `Q̂ = Σ x_a q_a`, checked against the printed matrix.
pub fn assemble_qhat() -> Result<QHat> {
    let poly = NonionPoly::coordinates(&std::array::from_fn(|_| FieldElem::one()));
    let matrix = poly.matrix();
    if matrix != printed_qhat() {
        return Err(Error::Invariant("Σ x_a q_a differs from the printed Q̂".into()));
    }
    Ok(QHat { poly, matrix })
}

/// Numeric `Q̂(x)`.
pub fn qhat_at(x: &[FieldElem; 9]) -> Mat3 {
    nonion_basis()
        .orthogonal()
        .combine(x)
}

pub fn det_poly() -> Result<MPoly> {
    let det = assemble_qhat()?.matrix.det3();
    if !det.has_rational_coeffs() {
        return Err(Error::Invariant("det Q̂ has a non-rational coefficient".into()));
    }
    Ok(det)
}

/// How the three z-factors pick their phases in the cross term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjugation {
    Plus,
    Minus,
}

impl Conjugation {
    fn sign(self) -> i64 {
        match self {
            Conjugation::Plus => 1,
            Conjugation::Minus => -1,
        }
    }
}

/// One z-factorization: `z_i = x_{a_i} + x_{b_i} q + x_{c_i} q²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Variant {
    pub number: u8,
    pub z: [[usize; 3]; 3],
    pub pattern: [Conjugation; 3],
}

use Conjugation::{Minus, Plus};

pub const VARIANTS: [Variant; 4] = [
    Variant {
        number: 1,
        z: [[0, 7, 8], [1, 2, 3], [4, 5, 6]],
        pattern: [Plus, Plus, Minus],
    },
    Variant {
        number: 2,
        z: [[0, 1, 4], [7, 2, 6], [8, 5, 3]],
        pattern: [Plus, Plus, Minus],
    },
    Variant {
        number: 3,
        z: [[0, 2, 5], [7, 3, 4], [8, 1, 6]],
        pattern: [Plus, Plus, Plus],
    },
    Variant {
        number: 4,
        z: [[0, 3, 6], [7, 1, 5], [8, 2, 4]],
        pattern: [Plus, Plus, Plus],
    },
];

pub fn variant(number: u8) -> Result<Variant> {
    VARIANTS
        .iter()
        .find(|v| v.number == number)
        .copied()
        .ok_or(Error::UnknownVariant(number))
}

/// `|z|³ = a³ + b³ + c³ − 3abc` for `z = x_a + x_b q + x_c q²`.
pub fn modulus_cubed(z: [usize; 3]) -> MPoly {
    let [a, b, c] = z;
    let mut p = MPoly::zero();
    for v in [a, b, c] {
        p.add_term(exponents_of(&[v, v, v]), &FieldElem::one());
    }
    p.add_term(exponents_of(&[a, b, c]), &FieldElem::from_integer(-3));
    p
}

/// `Σ_k Π_i (a_i + j^{k s_i} b_i + j^{2k s_i} c_i)`.
pub fn cross_term(z: &[[usize; 3]; 3], pattern: &[Conjugation; 3]) -> MPoly {
    let mut sum = MPoly::zero();
    for k in 0..3i64 {
        let mut prod = MPoly::constant(FieldElem::one());
        for (zi, s) in z.iter().zip(pattern) {
            let e = k * s.sign();
            let factor = MPoly::var(zi[0])
                .add(&MPoly::var(zi[1]).scale(&FieldElem::j_pow(e)))
                .add(&MPoly::var(zi[2]).scale(&FieldElem::j_pow(2 * e)));
            prod = prod.mul(&factor);
        }
        sum = sum.add(&prod);
    }
    sum
}

pub fn variant_with_pattern(z: &[[usize; 3]; 3], pattern: &[Conjugation; 3]) -> MPoly {
    let moduli = z
        .iter()
        .fold(MPoly::zero(), |acc, zi| acc.add(&modulus_cubed(*zi)));
    moduli.sub(&cross_term(z, pattern))
}

pub fn variant_poly(number: u8) -> Result<MPoly> {
    let v = variant(number)?;
    Ok(variant_with_pattern(&v.z, &v.pattern))
}

/// `(Q, Q̃, Q̃̃)` built with the standard phase twist.
pub fn twisted_triple() -> [NonionPoly; 3] {
    let twist = PhaseTwist::standard();
    std::array::from_fn(|t| NonionPoly::coordinates(&twist.power(t as u8).phases()))
}

/// Components `A_0 … A_8` of `Q · Q̃ · Q̃̃`.
pub fn triple_product_components() -> [MPoly; 9] {
    let [q, qt, qtt] = twisted_triple();
    q.mul(&qt).mul(&qtt).components
}

/// Weighted size of a polynomial: each monomial counts as the number of
/// orderings of its variables (cube 1, square·linear 3, three distinct 6).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCensus {
    pub distinct_monomials: usize,
    pub weighted_terms: u64,
}

pub fn term_census(p: &MPoly) -> TermCensus {
    let factorial = |n: u64| (1..=n).product::<u64>();
    let weighted_terms = p
        .terms()
        .map(|(e, _)| {
            let deg: u64 = e.iter().map(|&k| k as u64).sum();
            factorial(deg) / e.iter().map(|&k| factorial(k as u64)).product::<u64>()
        })
        .sum();
    TermCensus {
        distinct_monomials: p.len(),
        weighted_terms,
    }
}

/// Index advance `0→7→8→0`, `1→2→3→1`, `4→5→6→4`.
pub const Z3_CYCLE: [usize; NVARS] = [7, 2, 3, 1, 5, 6, 4, 8, 0];

pub fn inverse_cycle() -> [usize; NVARS] {
    let mut inv = [0; NVARS];
    for (i, &t) in Z3_CYCLE.iter().enumerate() {
        inv[t] = i;
    }
    inv
}

/// Observations about `A_0 … A_8` relative to `det Q̂`.
#[derive(Clone, Debug, Serialize)]
pub struct TripleProductAnalysis {
    /// `A_0` restricted to each single variable equals `x_a³`.
    pub axis_cubes: [bool; 9],
    pub cycle_invariant_forward: bool,
    pub cycle_invariant_backward: bool,
    pub graded: bool,
    pub nonzero_components: Vec<usize>,
    /// `s` with `A_0 = s · det Q̂`, when one exists.
    pub ratio_to_det: Option<FieldElem>,
    pub a0_census: TermCensus,
    pub a0: MPoly,
}

impl TripleProductAnalysis {
    pub fn cycle_invariant(&self) -> bool {
        self.cycle_invariant_forward && self.cycle_invariant_backward
    }
}

pub fn analyze_triple_product() -> Result<TripleProductAnalysis> {
    let comps = triple_product_components();
    let a0 = comps[0].clone();
    let det = det_poly()?;
    let axis_cubes = std::array::from_fn(|a| {
        a0.restrict(&[a]) == MPoly::monomial(exponents_of(&[a, a, a]), FieldElem::one())
    });
    let graded = a0.terms().all(|(e, _)| {
        let s: u32 = e
            .iter()
            .enumerate()
            .map(|(i, &k)| k as u32 * grade(i) as u32)
            .sum();
        s % 3 == 0
    });
    Ok(TripleProductAnalysis {
        axis_cubes,
        cycle_invariant_forward: a0.rename(&Z3_CYCLE) == a0,
        cycle_invariant_backward: a0.rename(&inverse_cycle()) == a0,
        graded,
        nonzero_components: (1..9).filter(|&p| !comps[p].is_zero()).collect(),
        ratio_to_det: a0.ratio_to(&det),
        a0_census: term_census(&a0),
        a0,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceTerm {
    pub exponents: [u8; NVARS],
    pub coeff: FieldElem,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceFixture {
    pub schema: String,
    pub rhs: FieldElem,
    pub terms: Vec<SurfaceTerm>,
    pub printed_as: Vec<String>,
    #[serde(default)]
    pub transcription_notes: Vec<String>,
}

pub const SURFACE_SCHEMA: &str = "ternion/surface/v1";

impl SurfaceFixture {
    pub fn parse(text: &str, label: &str) -> Result<Self> {
        let bad = |message: String| Error::FixtureParse {
            path: label.to_string(),
            message,
        };
        let f: SurfaceFixture = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if f.schema != SURFACE_SCHEMA {
            return Err(bad(format!("unexpected schema {:?}", f.schema)));
        }
        Ok(f)
    }

    pub fn poly(&self) -> MPoly {
        let mut p = MPoly::zero();
        for t in &self.terms {
            p.add_term(t.exponents, &t.coeff);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> FieldElem {
        FieldElem::from_integer(n)
    }

    #[test]
    fn qhat_matches_printed() {
        let q = assemble_qhat().unwrap();
        assert_eq!(
            q.matrix.entries[2][2],
            MPoly::var(0).add(&MPoly::var(7)).add(&MPoly::var(8))
        );
        assert_eq!(
            q.matrix.entries[0][1],
            MPoly::var(1).add(&MPoly::var(2)).add(&MPoly::var(3))
        );
        let mut x: [FieldElem; 9] = std::array::from_fn(|_| int(0));
        x[0] = int(1);
        assert_eq!(qhat_at(&x), Mat3::identity());
    }

    #[test]
    fn det_poly_shape() {
        let d = det_poly().unwrap();
        assert_eq!(d.coeff_of(&[0, 0, 0]), int(1));
        assert_eq!(d.coeff_of(&[0, 7, 8]), int(-3));
        assert_eq!(d.coeff_of(&[1, 2, 3]), int(-3));
        assert_eq!(d.coeff_of(&[0, 1, 4]), int(-3));
        for a in 0..9 {
            assert_eq!(d.restrict(&[a]), MPoly::monomial(exponents_of(&[a, a, a]), int(1)));
        }
        assert_eq!(
            term_census(&d),
            TermCensus { distinct_monomials: 21, weighted_terms: 81 }
        );
    }

    #[test]
    fn det_poly_against_numeric_det() {
        let d = det_poly().unwrap();
        let x: [FieldElem; 9] = std::array::from_fn(|i| FieldElem::ratio(i as i64 - 3, 2));
        assert_eq!(d.eval(&x), qhat_at(&x).det3());
    }

    #[test]
    fn variants_equal_det() {
        let d = det_poly().unwrap();
        for v in 1..=4 {
            assert_eq!(variant_poly(v).unwrap(), d, "variant {v}");
        }
        assert!(matches!(variant_poly(5), Err(Error::UnknownVariant(5))));
    }

    #[test]
    fn variant_one_on_cartan_axis() {
        let p = variant_poly(1).unwrap();
        let mut x: [FieldElem; 9] = std::array::from_fn(|_| int(0));
        for i in [0, 7, 8] {
            x[i] = int(1);
        }
        assert!(p.eval(&x).is_zero());
        assert_eq!(p.coeff_of(&[1, 2, 3]), int(-3));
        assert_eq!(variant_poly(2).unwrap().coeff_of(&[0, 1, 4]), int(-3));
    }

    #[test]
    fn uniform_conjugation_fails_for_first_two_variants() {
        let d = det_poly().unwrap();
        for v in &VARIANTS[..2] {
            assert_ne!(variant_with_pattern(&v.z, &[Plus, Plus, Plus]), d);
        }
    }

    #[test]
    fn census_of_cube() {
        let p = MPoly::monomial(exponents_of(&[0, 0, 0]), int(1));
        assert_eq!(term_census(&p), TermCensus { distinct_monomials: 1, weighted_terms: 1 });
    }

    #[test]
    fn triple_product_axes() {
        let a = analyze_triple_product().unwrap();
        assert!(a.axis_cubes.iter().all(|&b| b));
        assert!(a.graded);
        let a1 = MPoly::monomial(exponents_of(&[1, 1, 1]), int(1))
            .add(&MPoly::monomial(exponents_of(&[2, 2, 2]), int(1)))
            .add(&MPoly::monomial(exponents_of(&[3, 3, 3]), int(1)))
            .add(&MPoly::monomial(exponents_of(&[1, 2, 3]), int(-3)));
        assert_eq!(a.a0.restrict(&[1, 2, 3]), a1);
    }

    #[test]
    fn single_variable_triple_product() {
        let comps = triple_product_components();
        for (p, c) in comps.iter().enumerate().skip(1) {
            assert!(c.restrict(&[0]).is_zero(), "A{p}");
        }
    }

    #[test]
    fn cycle_inverse() {
        let inv = inverse_cycle();
        for i in 0..9 {
            assert_eq!(inv[Z3_CYCLE[i]], i);
        }
    }
}
