//! The n-generator ternary Clifford algebra: `q_k³ = 1` and
//! `q_l q_k = j² q_k q_l` for `k < l`.
//!
//! Generators are 0-based here. Word parsing for the CLI is 1-based.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::FieldElem;

pub const MAX_GENERATORS: usize = 12;
pub const MAX_ENUMERATED: usize = 6;

/// `q_0^{e_0} … q_{n-1}^{e_{n-1}}`, each exponent in {0, 1, 2}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffMonomial {
    exponents: Vec<u8>,
}

impl CliffMonomial {
    pub fn unit(n: usize) -> Self {
        CliffMonomial { exponents: vec![0; n] }
    }

    pub fn new(exponents: Vec<u8>) -> Result<Self> {
        if let Some(&e) = exponents.iter().find(|&&e| e > 2) {
            return Err(Error::Range(format!("exponent {e} outside 0..=2")));
        }
        Ok(CliffMonomial { exponents })
    }

    pub fn generator(k: usize, n: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
        let mut e = vec![0; n];
        e[k] = 1;
        Ok(CliffMonomial { exponents: e })
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn grade(&self) -> u8 {
        (self.degree() % 3) as u8
    }
}

impl fmt::Display for CliffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "q{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `a · b = j^phase · result`, phase in {0, 1, 2}.
pub fn normal_order_product(a: &CliffMonomial, b: &CliffMonomial) -> Result<(u8, CliffMonomial)> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch(a.n(), b.n()));
    }
    // Each q_l of b moves left past every q_k of a with k > l, picking up j².
    let mut swaps = 0u32;
    let mut higher = 0u32;
    for l in (0..a.n()).rev() {
        swaps += higher * b.exponents[l] as u32;
        higher += a.exponents[l] as u32;
    }
    let phase = ((2 * swaps) % 3) as u8;
    let exponents = a
        .exponents
        .iter()
        .zip(&b.exponents)
        .map(|(x, y)| (x + y) % 3)
        .collect();
    Ok((phase, CliffMonomial { exponents }))
}

/// Sparse sum of monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffElement {
    n: usize,
    terms: BTreeMap<CliffMonomial, FieldElem>,
}

impl CliffElement {
    pub fn zero(n: usize) -> Self {
        CliffElement { n, terms: BTreeMap::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self::from_monomial(CliffMonomial::unit(n), FieldElem::one())
    }

    pub fn from_monomial(m: CliffMonomial, coeff: FieldElem) -> Self {
        let mut e = Self::zero(m.n());
        e.add_term(m, &coeff);
        e
    }

    pub fn generator(k: usize, n: usize) -> Result<Self> {
        Ok(Self::from_monomial(CliffMonomial::generator(k, n)?, FieldElem::one()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CliffMonomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &CliffMonomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn add_term(&mut self, m: CliffMonomial, coeff: &FieldElem) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LengthMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * s));
        }
        out
    }

    /// True when every monomial shares one grade.
    pub fn homogeneous_grade(&self) -> Option<u8> {
        let mut grades = self.terms.keys().map(CliffMonomial::grade);
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }
}

pub fn elem_mul(a: &CliffElement, b: &CliffElement) -> Result<CliffElement> {
    if a.n != b.n {
        return Err(Error::LengthMismatch(a.n, b.n));
    }
    let mut out = CliffElement::zero(a.n);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let (phase, m) = normal_order_product(ma, mb)?;
            out.add_term(m, &(ca * cb * FieldElem::j_pow(phase as i64)));
        }
    }
    Ok(out)
}

/// Product of generators in the given order.
pub fn word(indices: &[usize], n: usize) -> Result<CliffElement> {
    indices.iter().try_fold(CliffElement::unit(n), |acc, &k| {
        elem_mul(&acc, &CliffElement::generator(k, n)?)
    })
}

impl fmt::Display for CliffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for CliffElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [u8],
            coeff: &'a FieldElem,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term { exponents: m.exponents(), coeff: c })
            .collect();
        terms.serialize(s)
    }
}

/// Parses a word such as `"q2 q1 q1"` or `"q1^2 q3"` with 1-based generators.
/// `"1"` and the empty string are the unit.
pub fn parse_word(text: &str, n: usize) -> Result<CliffElement> {
    let mut indices = Vec::new();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        let body = token
            .strip_prefix('q')
            .ok_or_else(|| Error::Parse(format!("bad generator {token:?}")))?;
        let (idx, pow) = match body.split_once('^') {
            Some((i, p)) => (i, p),
            None => (body, "1"),
        };
        let k: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator {token:?}")))?;
        let p: usize = pow
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, bound: n + 1 });
        }
        indices.extend(std::iter::repeat(k - 1).take(p));
    }
    word(&indices, n)
}

fn check_indices(indices: &[usize], n: usize) -> Result<()> {
    match indices.iter().find(|&&i| i >= n) {
        Some(&i) => Err(Error::IndexOutOfRange { index: i, bound: n }),
        None => Ok(()),
    }
}

/// Sum of `q_a q_b q_c` over the six orderings of `(k, l, m)`.
pub fn s3_symmetric_sum(k: usize, l: usize, m: usize, n: usize) -> Result<CliffElement> {
    check_indices(&[k, l, m], n)?;
    let orders = [[k, l, m], [l, m, k], [m, k, l], [m, l, k], [l, k, m], [k, m, l]];
    orders
        .iter()
        .try_fold(CliffElement::zero(n), |acc, o| acc.add(&word(o, n)?))
}

/// Weights `(w₁, w₂)` of `q_k q_l q_k + w₁ q_k² q_l + w₂ q_l q_k²`.
pub fn identity_weights(kind: u8) -> Result<(FieldElem, FieldElem)> {
    match kind {
        1 => Ok((FieldElem::one(), FieldElem::one())),
        2 => Ok((FieldElem::j_pow(2), FieldElem::j())),
        3 => Ok((FieldElem::j(), FieldElem::j_pow(2))),
        _ => Err(Error::Range(format!("identity kind {kind} outside 1..=3"))),
    }
}

/// The weighted combination for any distinct `k`, `l`.
pub fn weighted_combination(kind: u8, k: usize, l: usize, n: usize) -> Result<CliffElement> {
    check_indices(&[k, l], n)?;
    if k == l {
        return Err(Error::Range("identity needs two distinct generators".into()));
    }
    let (w1, w2) = identity_weights(kind)?;
    word(&[k, l, k], n)?
        .add(&word(&[k, k, l], n)?.scale(&w1))?
        .add(&word(&[l, k, k], n)?.scale(&w2))
}

/// The combination for `k < l`, as the identity is stated.
pub fn weighted_identity_check(kind: u8, k: usize, l: usize, n: usize) -> Result<CliffElement> {
    if k >= l {
        return Err(Error::Range(format!("identity requires k < l, got k={k}, l={l}")));
    }
    weighted_combination(kind, k, l, n)
}

/// The stated value: zero for kinds 1 and 2, `3j · q_k² q_l` for kind 3.
pub fn weighted_identity_expected(kind: u8, k: usize, l: usize, n: usize) -> Result<CliffElement> {
    identity_weights(kind)?;
    if kind == 3 {
        Ok(word(&[k, k, l], n)?.scale(&(FieldElem::j() * FieldElem::from_integer(3))))
    } else {
        Ok(CliffElement::zero(n))
    }
}

pub fn dimension(n: usize) -> Result<u64> {
    if !(1..=MAX_GENERATORS).contains(&n) {
        return Err(Error::Range(format!("generator count {n} outside 1..={MAX_GENERATORS}")));
    }
    Ok(3u64.pow(n as u32))
}

/// All normal-form monomials on `n` generators, in lexicographic order.
pub fn enumerate_monomials(n: usize) -> Vec<CliffMonomial> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut e = vec![0u8; n];
            for slot in e.iter_mut().rev() {
                *slot = (code % 3) as u8;
                code /= 3;
            }
            CliffMonomial { exponents: e }
        })
        .collect()
}

/// Monomial counts per total degree `0..=2n`.
pub fn degree_census(n: usize) -> Result<Vec<u64>> {
    dimension(n)?;
    let mut census = vec![0u64; 2 * n + 1];
    if n <= MAX_ENUMERATED {
        for m in enumerate_monomials(n) {
            census[m.degree()] += 1;
        }
    } else {
        // Coefficients of (1 + t + t²)ⁿ.
        census[0] = 1;
        for step in 0..n {
            let prev = census.clone();
            for d in 1..=2 * (step + 1) {
                census[d] = prev[d] + prev[d - 1] + if d >= 2 { prev[d - 2] } else { 0 };
            }
        }
    }
    Ok(census)
}

/// Monomial counts per Z₃ grade.
pub fn grade_dimensions(n: usize) -> Result<[u64; 3]> {
    let census = degree_census(n)?;
    let mut out = [0u64; 3];
    for (d, c) in census.iter().enumerate() {
        out[d % 3] += c;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightedIdentityOutcome {
    pub kind: u8,
    pub k: usize,
    pub l: usize,
    pub computed: CliffElement,
    pub expected: CliffElement,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitySuite {
    pub n: usize,
    /// `s3_symmetric_sum = 6·[k=l=m]` over every index triple.
    pub symmetric_sum_holds: bool,
    pub symmetric_sum_failures: Vec<[usize; 3]>,
    pub weighted: Vec<WeightedIdentityOutcome>,
}

impl IdentitySuite {
    pub fn weighted_holds(&self) -> bool {
        self.weighted.iter().all(|w| w.holds)
    }
}

fn weighted_outcome(kind: u8, k: usize, l: usize, n: usize) -> Result<WeightedIdentityOutcome> {
    let computed = weighted_combination(kind, k, l, n)?;
    let expected = weighted_identity_expected(kind, k, l, n)?;
    Ok(WeightedIdentityOutcome {
        kind,
        k,
        l,
        holds: computed == expected,
        computed,
        expected,
    })
}

/// Exhaustive identity checks on `n` generators; weighted identities use `k < l`.
pub fn identity_suite(n: usize) -> Result<IdentitySuite> {
    identity_suite_ordered(n, true)
}

/// As [`identity_suite`], with `ascending = false` checking pairs `k > l`.
pub fn identity_suite_ordered(n: usize, ascending: bool) -> Result<IdentitySuite> {
    dimension(n)?;
    let triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|k| (0..n).flat_map(move |l| (0..n).map(move |m| [k, l, m])))
        .collect();
    let failures: Vec<[usize; 3]> = triples
        .par_iter()
        .map(|&[k, l, m]| {
            let sum = s3_symmetric_sum(k, l, m, n)?;
            let expected = if k == l && l == m {
                CliffElement::unit(n).scale(&FieldElem::from_integer(6))
            } else {
                CliffElement::zero(n)
            };
            Ok((sum != expected).then_some([k, l, m]))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut weighted = Vec::new();
    for k in 0..n {
        for l in 0..n {
            if (ascending && k < l) || (!ascending && k > l) {
                for kind in 1..=3 {
                    weighted.push(weighted_outcome(kind, k, l, n)?);
                }
            }
        }
    }
    Ok(IdentitySuite {
        n,
        symmetric_sum_holds: failures.is_empty(),
        symmetric_sum_failures: failures,
        weighted,
    })
}

/// `ω` with `q_a q_b = j^ω q_b q_a` for generators `a`, `b`.
pub fn pair_phase(a: usize, b: usize, n: usize) -> Result<u8> {
    let ga = CliffMonomial::generator(a, n)?;
    let gb = CliffMonomial::generator(b, n)?;
    let (pab, _) = normal_order_product(&ga, &gb)?;
    let (pba, _) = normal_order_product(&gb, &ga)?;
    Ok((pab + 3 - pba) % 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u8]) -> CliffMonomial {
        CliffMonomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn ordering_examples() {
        assert_eq!(normal_order_product(&mono(&[0, 1]), &mono(&[1, 0])).unwrap(), (2, mono(&[1, 1])));
        assert_eq!(normal_order_product(&mono(&[1]), &mono(&[2])).unwrap(), (0, mono(&[0])));
        assert_eq!(normal_order_product(&mono(&[1, 0]), &mono(&[0, 1])).unwrap(), (0, mono(&[1, 1])));
        assert!(matches!(
            normal_order_product(&mono(&[1]), &mono(&[1, 0])),
            Err(Error::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn square_of_sum() {
        let s = CliffElement::generator(0, 2).unwrap().add(&CliffElement::generator(1, 2).unwrap()).unwrap();
        let sq = elem_mul(&s, &s).unwrap();
        let mut expected = CliffElement::zero(2);
        expected.add_term(mono(&[2, 0]), &FieldElem::one());
        expected.add_term(mono(&[0, 2]), &FieldElem::one());
        expected.add_term(mono(&[1, 1]), &(FieldElem::one() + FieldElem::j_pow(2)));
        assert_eq!(sq, expected);
    }

    #[test]
    fn unit_and_zero() {
        let a = parse_word("q2 q1 q1", 3).unwrap();
        assert_eq!(elem_mul(&CliffElement::unit(3), &a).unwrap(), a);
        assert!(elem_mul(&CliffElement::zero(3), &a).unwrap().is_zero());
    }

    #[test]
    fn symmetric_sum_examples() {
        assert_eq!(
            s3_symmetric_sum(0, 0, 0, 1).unwrap(),
            CliffElement::unit(1).scale(&FieldElem::from_integer(6))
        );
        assert!(s3_symmetric_sum(0, 1, 2, 3).unwrap().is_zero());
        assert!(s3_symmetric_sum(0, 0, 1, 2).unwrap().is_zero());
        assert!(s3_symmetric_sum(0, 0, 3, 2).is_err());
    }

    #[test]
    fn weighted_identities_ascending() {
        // With q_l q_k = j² q_k q_l for k < l only the first kind vanishes.
        assert!(weighted_identity_check(1, 0, 1, 2).unwrap().is_zero());
        let x = word(&[0, 0, 1], 2).unwrap();
        assert_eq!(
            weighted_identity_check(2, 0, 1, 2).unwrap(),
            x.scale(&(FieldElem::j_pow(2) * FieldElem::from_integer(3)))
        );
        assert!(weighted_identity_check(3, 0, 1, 2).unwrap().is_zero());
        assert!(weighted_identity_check(1, 1, 0, 2).is_err());
    }

    #[test]
    fn weighted_identities_descending() {
        for kind in 1..=3 {
            let got = weighted_combination(kind, 1, 0, 2).unwrap();
            assert_eq!(got, weighted_identity_expected(kind, 1, 0, 2).unwrap(), "kind {kind}");
        }
    }

    #[test]
    fn dimensions_and_census() {
        assert_eq!(dimension(1).unwrap(), 3);
        assert_eq!(dimension(2).unwrap(), 9);
        assert_eq!(dimension(6).unwrap(), 729);
        assert!(dimension(0).is_err());
        assert!(dimension(13).is_err());
        for n in 1..=6 {
            assert_eq!(enumerate_monomials(n).len() as u64, dimension(n).unwrap());
        }
        assert_eq!(degree_census(4).unwrap(), vec![1, 4, 10, 16, 19, 16, 10, 4, 1]);
        assert_eq!(degree_census(1).unwrap(), vec![1, 1, 1]);
        assert_eq!(degree_census(7).unwrap().iter().sum::<u64>(), 3u64.pow(7));
        assert_eq!(degree_census(7).unwrap()[7], 393);
    }

    #[test]
    fn grades() {
        assert_eq!(mono(&[1, 0]).grade(), 1);
        assert_eq!(mono(&[1, 2]).grade(), 0);
        assert_eq!(mono(&[0, 0]).grade(), 0);
        assert_eq!(grade_dimensions(4).unwrap(), [27, 27, 27]);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(
            parse_word("q2 q1", 2).unwrap(),
            CliffElement::from_monomial(mono(&[1, 1]), FieldElem::j_pow(2))
        );
        assert_eq!(parse_word("q1^3", 1).unwrap(), CliffElement::unit(1));
        assert_eq!(parse_word("", 2).unwrap(), CliffElement::unit(2));
        assert!(parse_word("q3", 2).is_err());
        assert!(parse_word("x1", 2).is_err());
        assert!(parse_word("q0", 2).is_err());
    }

    #[test]
    fn generator_pair_phase() {
        assert_eq!(pair_phase(0, 1, 2).unwrap(), 1);
        assert_eq!(pair_phase(1, 0, 2).unwrap(), 2);
        assert_eq!(pair_phase(0, 0, 2).unwrap(), 0);
    }
}
