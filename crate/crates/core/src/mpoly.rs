//! Sparse polynomials in x₀…x₈ with coefficients in ℚ(j, √2, √3).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::mat3::Ring;
use crate::scalar::{FieldElem, Rational};

pub const NVARS: usize = 9;

pub type Exponents = [u8; NVARS];

/// Map from exponent vector to nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Exponents, FieldElem>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(exponents: Exponents, coeff: FieldElem) -> Self {
        let mut p = MPoly::zero();
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self::monomial(e, FieldElem::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &Exponents) -> FieldElem {
        self.terms.get(exponents).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// Coefficient of the product of the listed variables (repeats allowed).
    pub fn coeff_of(&self, vars: &[usize]) -> FieldElem {
        self.coeff(&exponents_of(vars))
    }

    pub fn add_term(&mut self, exponents: Exponents, coeff: &FieldElem) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert_with(FieldElem::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = std::array::from_fn(|i| ea[i] + eb[i]);
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    /// True when every coefficient lies in ℚ.
    pub fn has_rational_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn eval(&self, point: &[FieldElem; NVARS]) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Keeps only monomials whose variables all lie in `vars`.
    pub fn restrict(&self, vars: &[usize]) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().enumerate().all(|(i, &k)| k == 0 || vars.contains(&i)))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_i ↦ x_{perm[i]}`.
    pub fn rename(&self, perm: &[usize; NVARS]) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut f = [0u8; NVARS];
            for (i, &k) in e.iter().enumerate() {
                f[perm[i]] += k;
            }
            out.add_term(f, c);
        }
        out
    }

    /// Returns `s` with `self = s · other`, if one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<FieldElem> {
        if other.is_zero() {
            return self.is_zero().then(FieldElem::zero);
        }
        let (e, c) = other.terms.iter().next()?;
        let s = self.coeff(e).checked_div(c).ok()?;
        (other.scale(&s) == *self).then_some(s)
    }
}

pub fn exponents_of(vars: &[usize]) -> Exponents {
    let mut e = [0u8; NVARS];
    for &v in vars {
        e[v] += 1;
    }
    e
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::constant(FieldElem::one())
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

fn format_monomial(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest degree first, then by exponent vector descending.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| x as u32).sum();
            let db: u32 = b.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then(b.cmp(a))
        });
        let one = Rational::one();
        let minus_one = -Rational::one();
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let mono = format_monomial(e);
            let rendered = if mono.is_empty() {
                format!("{c}")
            } else {
                match c.as_rational() {
                    Some(r) if *r == one => mono,
                    Some(r) if *r == minus_one => format!("-{mono}"),
                    Some(_) => format!("{c}*{mono}"),
                    None => format!("({c})*{mono}"),
                }
            };
            if n == 0 {
                f.write_str(&rendered)?;
            } else if let Some(rest) = rendered.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {rendered}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponents: Exponents,
    coeff: FieldElem,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(e, c)| TermRepr {
                exponents: *e,
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut p = MPoly::zero();
        for t in terms {
            p.add_term(t.exponents, &t.coeff);
        }
        Ok(p)
    }
}
