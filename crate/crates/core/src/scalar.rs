//! Exact arithmetic in the number field ℚ(j, √2, √3).
//!
//! An element is stored as eight rational coordinates over the fixed basis
//! `[1, j, √2, j√2, √3, j√3, √6, j√6]`, where `j` is a primitive cube root of
//! unity. Products are reduced with `j² = −1 − j`, `√2·√3 = √6`, `(√2)² = 2`,
//! `(√3)² = 3` and `(√6)² = 6`, so two elements are equal exactly when their
//! coordinate arrays are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Human-readable names of the eight coordinates, in storage order.
pub const BASIS_LABELS: [&str; 8] = ["1", "j", "√2", "j√2", "√3", "j√3", "√6", "j√6"];

/// Products inside the real subfield ℚ(√2, √3) with basis `[1, √2, √3, √6]`:
/// `REAL_PRODUCT[a][b] = (target, factor)` means `e_a · e_b = factor · e_target`.
const REAL_PRODUCT: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, 2), (3, 1), (2, 2)],
    [(2, 1), (3, 1), (0, 3), (1, 3)],
    [(3, 1), (2, 2), (1, 3), (0, 6)],
];

type Real = [Rational; 4];

fn real_zero() -> Real {
    [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()]
}

fn real_mul(a: &Real, b: &Real) -> Real {
    let mut out = real_zero();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let (t, f) = REAL_PRODUCT[i][k];
            let p = x * y;
            if f == 1 {
                out[t] += p;
            } else {
                out[t] += p * Rational::from_integer(BigInt::from(f));
            }
        }
    }
    out
}

/// Exact element of ℚ(j, √2, √3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: [Rational; 8],
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut e = Self::zero();
        e.coeffs[0] = r;
        e
    }

    /// `num/den` as a rational element. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `r · e_index` for one of the eight basis elements.
    pub fn basis_scaled(index: usize, r: Rational) -> Self {
        let mut e = Self::zero();
        e.coeffs[index] = r;
        e
    }

    pub fn from_coords(coeffs: [Rational; 8]) -> Self {
        FieldElem { coeffs }
    }

    pub fn coords(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn j() -> Self {
        Self::basis_scaled(1, Rational::one())
    }

    pub fn sqrt2() -> Self {
        Self::basis_scaled(2, Rational::one())
    }

    pub fn sqrt3() -> Self {
        Self::basis_scaled(4, Rational::one())
    }

    pub fn sqrt6() -> Self {
        Self::basis_scaled(6, Rational::one())
    }

    /// `j^k` for any integer `k`.
    pub fn j_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::j(),
            _ => {
                let mut e = Self::from_integer(-1);
                e.coeffs[1] = -Rational::one();
                e
            }
        }
    }

    /// The imaginary unit `i = (1 + 2j)/√3`.
    pub fn imaginary_unit() -> Self {
        let mut e = Self::zero();
        e.coeffs[4] = Rational::new(BigInt::from(1), BigInt::from(3));
        e.coeffs[5] = Rational::new(BigInt::from(2), BigInt::from(3));
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// True when every `j`-coordinate vanishes.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Returns `k` when the element equals `j^k`.
    pub fn as_j_power(&self) -> Option<u8> {
        (0u8..3).find(|&k| *self == Self::j_pow(k as i64))
    }

    fn split(&self) -> (Real, Real) {
        let c = &self.coeffs;
        (
            [c[0].clone(), c[2].clone(), c[4].clone(), c[6].clone()],
            [c[1].clone(), c[3].clone(), c[5].clone(), c[7].clone()],
        )
    }

    fn join(re: Real, im: Real) -> Self {
        let [r0, r1, r2, r3] = re;
        let [i0, i1, i2, i3] = im;
        FieldElem {
            coeffs: [r0, i0, r1, i1, r2, i2, r3, i3],
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    fn neg_ref(&self) -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // (A + jB)(C + jD) = (AC − BD) + j(AD + BC − BD)
        let (a, b) = self.split();
        let (c, d) = other.split();
        let ac = real_mul(&a, &c);
        let bd = real_mul(&b, &d);
        let ad = real_mul(&a, &d);
        let bc = real_mul(&b, &c);
        let re = std::array::from_fn(|i| &ac[i] - &bd[i]);
        let im = std::array::from_fn(|i| &ad[i] + &bc[i] - &bd[i]);
        Self::join(re, im)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * r),
        }
    }

    /// The field automorphism `j ↦ j²`; fixes ℚ(√2, √3).
    pub fn conjugate_j(&self) -> Self {
        // A + jB ↦ A + j²B = (A − B) − jB
        let (a, b) = self.split();
        let re = std::array::from_fn(|i| &a[i] - &b[i]);
        let im = std::array::from_fn(|i| -&b[i]);
        Self::join(re, im)
    }

    /// `√3 ↦ −√3` (hence `√6 ↦ −√6`).
    pub fn conjugate_sqrt3(&self) -> Self {
        let mut e = self.clone();
        for i in 4..8 {
            e.coeffs[i] = -&e.coeffs[i];
        }
        e
    }

    /// `√2 ↦ −√2` (hence `√6 ↦ −√6`).
    pub fn conjugate_sqrt2(&self) -> Self {
        let mut e = self.clone();
        for i in [2, 3, 6, 7] {
            e.coeffs[i] = -&e.coeffs[i];
        }
        e
    }

    /// Multiplicative inverse by successive conjugation down the tower
    /// ℚ(j,√2,√3) ⊃ ℚ(√2,√3) ⊃ ℚ(√2) ⊃ ℚ.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c1 = self.conjugate_j();
        let n1 = self * &c1; // in ℚ(√2, √3)
        let c2 = n1.conjugate_sqrt3();
        let n2 = &n1 * &c2; // in ℚ(√2)
        let c3 = n2.conjugate_sqrt2();
        let n3 = &n2 * &c3; // in ℚ
        let norm = n3
            .as_rational()
            .cloned()
            .ok_or_else(|| Error::Invariant("tower norm is not rational".into()))?;
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let numerator = &(&c1 * &c2) * &c3;
        Ok(numerator.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    /// Numerical embedding with `j = −1/2 + i·√3/2` and positive radicals.
    /// Approximate; meant for display only.
    pub fn approx_complex(&self) -> (f64, f64) {
        let radicals = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
        let (re, im) = self.split();
        let eval = |part: &Real| -> f64 {
            part.iter()
                .zip(radicals)
                .map(|(c, r)| c.to_f64().unwrap_or(f64::NAN) * r)
                .sum()
        };
        let a = eval(&re);
        let b = eval(&im);
        (a - 0.5 * b, b * 3f64.sqrt() / 2.0)
    }

    /// Uniform sample with every coordinate `p/q`, `|p| ≤ bound`, `1 ≤ q ≤ bound`.
    /// Each coordinate is zero with probability `sparsity`.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, bound: i64, sparsity: f64) -> Self {
        FieldElem {
            coeffs: std::array::from_fn(|_| {
                if rng.gen_bool(sparsity) {
                    Rational::zero()
                } else {
                    sample_rational(rng, bound)
                }
            }),
        }
    }

    /// The eight `"p/q"` strings of the JSON encoding.
    pub fn to_strings(&self) -> [String; 8] {
        std::array::from_fn(|i| format_rational(&self.coeffs[i]))
    }

    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != 8 {
            return Err(Error::Parse(format!(
                "field element needs 8 coordinates, got {}",
                parts.len()
            )));
        }
        let mut coeffs: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for (slot, s) in coeffs.iter_mut().zip(parts) {
            *slot = parse_rational(s.as_ref())?;
        }
        Ok(FieldElem { coeffs })
    }
}

pub fn sample_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound.max(1));
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Always `"p/q"`, with `q ≥ 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$inner(rhs)
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$inner(&rhs)
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$inner(rhs)
            }
        }
        impl $trait<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl AddAssign<FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self += &rhs;
    }
}

impl std::iter::Sum for FieldElem {
    fn sum<I: Iterator<Item = FieldElem>>(iter: I) -> Self {
        iter.fold(FieldElem::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.coeffs.iter().zip(BASIS_LABELS) {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let numer = mag.numer();
            let denom = mag.denom();
            if label == "1" {
                write!(f, "{}", numer)?;
            } else if numer.is_one() {
                f.write_str(label)?;
            } else {
                write!(f, "{}{}", numer, label)?;
            }
            if !denom.is_one() {
                write!(f, "/{}", denom)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({})", self)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(8)?;
        for c in &self.coeffs {
            t.serialize_element(&format_rational(c))?;
        }
        t.end()
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct FieldVisitor;

        impl<'de> Visitor<'de> for FieldVisitor {
            type Value = FieldElem;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of 8 rational strings \"p/q\"")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<FieldElem, A::Error> {
                let mut parts = Vec::with_capacity(8);
                while let Some(s) = seq.next_element::<String>()? {
                    parts.push(s);
                }
                FieldElem::from_strings(&parts).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(FieldVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j2() -> FieldElem {
        FieldElem::j_pow(2)
    }

    #[test]
    fn add_examples() {
        assert_eq!(FieldElem::j() + j2(), FieldElem::from_integer(-1));
        assert_eq!(FieldElem::sqrt2() + FieldElem::zero(), FieldElem::sqrt2());
        let a = FieldElem::one() + FieldElem::j();
        let b = FieldElem::one() + j2();
        assert_eq!(a + b, FieldElem::one());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(FieldElem::j() * FieldElem::j(), j2());
        assert_eq!(j2(), FieldElem::from_integer(-1) - FieldElem::j());
        assert_eq!(FieldElem::sqrt2() * FieldElem::sqrt3(), FieldElem::sqrt6());
        let a = FieldElem::one() + FieldElem::j();
        assert_eq!(&a * &a, FieldElem::j());
        assert_eq!(FieldElem::sqrt6() * FieldElem::sqrt6(), FieldElem::from_integer(6));
        assert_eq!(
            FieldElem::sqrt3() * FieldElem::sqrt6(),
            FieldElem::from_integer(3) * FieldElem::sqrt2()
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            FieldElem::sqrt2().invert().unwrap(),
            FieldElem::sqrt2() * FieldElem::ratio(1, 2)
        );
        let a = FieldElem::one() + FieldElem::j();
        assert_eq!(a.invert().unwrap(), -FieldElem::j());
        assert_eq!(FieldElem::j().invert().unwrap(), j2());
        assert!(matches!(FieldElem::zero().invert(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(FieldElem::j().conjugate_j(), j2());
        assert_eq!(FieldElem::sqrt6().conjugate_j(), FieldElem::sqrt6());
        let a = FieldElem::one() + FieldElem::from_integer(2) * FieldElem::j();
        assert_eq!(a.conjugate_j().conjugate_j(), a);
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = FieldElem::imaginary_unit();
        assert_eq!(&i * &i, FieldElem::from_integer(-1));
        let (re, im) = i.approx_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn approx_examples() {
        let (re, im) = FieldElem::j().approx_complex();
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 0.866_025_403_784_438_6).abs() < 1e-12);
        let (re, im) = FieldElem::sqrt2().approx_complex();
        assert!((re - std::f64::consts::SQRT_2).abs() < 1e-12 && im == 0.0);
        assert_eq!(FieldElem::zero().approx_complex(), (0.0, 0.0));
    }

    #[test]
    fn json_encoding() {
        let e = FieldElem::ratio(-3, 4) + FieldElem::sqrt6();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"["-3/4","0/1","0/1","0/1","0/1","0/1","1/1","0/1"]"#);
        let back: FieldElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<FieldElem>(r#"["1/0","0","0","0","0","0","0","0"]"#).is_err());
        assert!(serde_json::from_str::<FieldElem>(r#"["1/2"]"#).is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(j2().to_string(), "-1 - j");
        assert_eq!((FieldElem::sqrt6() * FieldElem::ratio(1, 2)).to_string(), "√6/2");
        assert_eq!(FieldElem::zero().to_string(), "0");
        assert_eq!((FieldElem::from_integer(-2) * FieldElem::j()).to_string(), "-2j");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-7").unwrap(), Rational::from_integer((-7).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn j_power_detection() {
        assert_eq!(FieldElem::one().as_j_power(), Some(0));
        assert_eq!(FieldElem::j().as_j_power(), Some(1));
        assert_eq!(j2().as_j_power(), Some(2));
        assert_eq!(FieldElem::from_integer(-1).as_j_power(), None);
    }
}
