//! Dense 3×3 matrices over an exact ring.
//!
//! [`Matrix3`] is generic so the same cofactor determinant serves both numeric
//! matrices ([`Mat3`], entries in [`FieldElem`]) and symbolic ones whose
//! entries are polynomials in x₀…x₈.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::FieldElem;

/// The operations [`Matrix3`] needs from its entries.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Row-major 3×3 matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix3<T> {
    pub entries: [[T; 3]; 3],
}

pub type Mat3 = Matrix3<FieldElem>;

impl<T: Ring> Matrix3<T> {
    pub fn new(entries: [[T; 3]; 3]) -> Self {
        Matrix3 { entries }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Matrix3 {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn diag(a: T, b: T, c: T) -> Self {
        let mut m = Self::zero();
        m.entries[0][0] = a;
        m.entries[1][1] = b;
        m.entries[2][2] = c;
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r][c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Ring::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|r| (0..3).all(|c| r == c || self.entries[r][c].is_zero()))
    }

    pub fn mat_mul(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| {
            let mut acc = T::zero();
            for k in 0..3 {
                let a = &self.entries[r][k];
                let b = &other.entries[k][c];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(b));
                }
            }
            acc
        })
    }

    pub fn mat_add(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c].add_ref(&other.entries[r][c]))
    }

    pub fn mat_sub(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c].sub_ref(&other.entries[r][c]))
    }

    pub fn mat_neg(&self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c].neg_ref())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(|r, c| s.mul_ref(&self.entries[r][c]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].clone())
    }

    pub fn trace(&self) -> T {
        self.entries[0][0]
            .add_ref(&self.entries[1][1])
            .add_ref(&self.entries[2][2])
    }

    /// Cofactor expansion along the first row.
    pub fn det3(&self) -> T {
        let e = &self.entries;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            e[r1][c1].mul_ref(&e[r2][c2]).sub_ref(&e[r1][c2].mul_ref(&e[r2][c1]))
        };
        let t0 = e[0][0].mul_ref(&minor(1, 2, 1, 2));
        let t1 = e[0][1].mul_ref(&minor(1, 2, 0, 2));
        let t2 = e[0][2].mul_ref(&minor(1, 2, 0, 1));
        t0.sub_ref(&t1).add_ref(&t2)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.mat_mul(self))
    }

    /// Entrywise map into another ring.
    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> Matrix3<U> {
        Matrix3::from_fn(|r, c| f(&self.entries[r][c]))
    }
}

impl Mat3 {
    /// `m†`: transpose composed with `j ↦ j²`. Radicals are real and untouched.
    pub fn conjugate_transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conjugate_j())
    }

    /// Hilbert–Schmidt pairing `tr(a† b)`.
    pub fn hs_inner(&self, other: &Self) -> FieldElem {
        let mut acc = FieldElem::zero();
        for r in 0..3 {
            for c in 0..3 {
                let a = &self.entries[r][c];
                let b = &other.entries[r][c];
                if !a.is_zero() && !b.is_zero() {
                    acc += a.conjugate_j() * b;
                }
            }
        }
        acc
    }

    /// Returns `s` with `self = s · other`, if one exists.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<FieldElem> {
        let (r, c) = (0..9)
            .map(|i| (i / 3, i % 3))
            .find(|&(r, c)| !other.entries[r][c].is_zero())?;
        let s = self.entries[r][c].checked_div(&other.entries[r][c]).ok()?;
        (other.scale(&s) == *self).then_some(s)
    }

    pub fn approx(&self) -> [[(f64, f64); 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c].approx_complex()))
    }
}

impl<T: Ring> Add for &Matrix3<T> {
    type Output = Matrix3<T>;
    fn add(self, rhs: Self) -> Matrix3<T> {
        self.mat_add(rhs)
    }
}

impl<T: Ring> Sub for &Matrix3<T> {
    type Output = Matrix3<T>;
    fn sub(self, rhs: Self) -> Matrix3<T> {
        self.mat_sub(rhs)
    }
}

impl<T: Ring> Mul for &Matrix3<T> {
    type Output = Matrix3<T>;
    fn mul(self, rhs: Self) -> Matrix3<T> {
        self.mat_mul(rhs)
    }
}

impl<T: Ring> Neg for &Matrix3<T> {
    type Output = Matrix3<T>;
    fn neg(self) -> Matrix3<T> {
        self.mat_neg()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}, {}, {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Nine matrices, pairwise Hilbert–Schmidt orthogonal, with cached norms.
#[derive(Clone, Debug)]
pub struct OrthogonalBasis {
    elements: [Mat3; 9],
    gram: [FieldElem; 9],
    gram_inv: [FieldElem; 9],
}

impl OrthogonalBasis {
    /// Validates orthogonality and the claimed Gram diagonal once.
    pub fn new(elements: [Mat3; 9], gram: [FieldElem; 9]) -> Result<Self> {
        for (a, g) in gram.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::SingularGram(a));
            }
            if elements[a].hs_inner(&elements[a]) != *g {
                return Err(Error::Invariant(format!(
                    "basis element {a} has norm {} but gram says {g}",
                    elements[a].hs_inner(&elements[a])
                )));
            }
            for b in (a + 1)..9 {
                if !elements[a].hs_inner(&elements[b]).is_zero() {
                    return Err(Error::NotOrthogonal(a, b));
                }
            }
        }
        let mut gram_inv: [FieldElem; 9] = std::array::from_fn(|_| FieldElem::zero());
        for (slot, g) in gram_inv.iter_mut().zip(&gram) {
            *slot = g.invert()?;
        }
        Ok(OrthogonalBasis {
            elements,
            gram,
            gram_inv,
        })
    }

    pub fn elements(&self) -> &[Mat3; 9] {
        &self.elements
    }

    pub fn gram(&self) -> &[FieldElem; 9] {
        &self.gram
    }

    pub fn combine(&self, coeffs: &[FieldElem; 9]) -> Mat3 {
        let mut m = Mat3::zero();
        for (c, e) in coeffs.iter().zip(&self.elements) {
            if !c.is_zero() {
                m = m.mat_add(&e.scale(c));
            }
        }
        m
    }

    /// Orthogonal projection onto each element, checked by reconstruction.
    pub fn decompose(&self, m: &Mat3) -> Result<[FieldElem; 9]> {
        let coeffs: [FieldElem; 9] =
            std::array::from_fn(|i| self.elements[i].hs_inner(m) * &self.gram_inv[i]);
        if self.combine(&coeffs) != *m {
            return Err(Error::NotInSpan);
        }
        Ok(coeffs)
    }
}

/// Free-function form: validates the basis on every call.
pub fn decompose_in_basis(
    m: &Mat3,
    basis: &[Mat3; 9],
    gram: &[FieldElem; 9],
) -> Result<[FieldElem; 9]> {
    OrthogonalBasis::new(basis.clone(), gram.clone())?.decompose(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(k: i64) -> FieldElem {
        FieldElem::j_pow(k)
    }

    fn int(n: i64) -> FieldElem {
        FieldElem::from_integer(n)
    }

    fn perm(rows: [[i64; 3]; 3]) -> Mat3 {
        Mat3::from_fn(|r, c| int(rows[r][c]))
    }

    #[test]
    fn identity_products() {
        let i = Mat3::identity();
        assert_eq!(&i * &i, i);
        assert_eq!(i.det3(), int(1));
    }

    #[test]
    fn diag_det() {
        assert_eq!(Mat3::diag(j(1), j(2), int(1)).det3(), int(1));
        assert_eq!(Mat3::diag(int(2), int(3), int(5)).det3(), int(30));
    }

    #[test]
    fn det_of_permutation_signs() {
        let swap = perm([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(swap.det3(), int(-1));
        let cycle = perm([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(cycle.det3(), int(1));
    }

    #[test]
    fn hs_inner_uses_conjugation() {
        let a = Mat3::diag(j(1), int(0), int(0));
        assert_eq!(a.hs_inner(&a), int(1));
        let b = Mat3::diag(int(1), int(0), int(0));
        assert_eq!(b.hs_inner(&a), j(1));
        assert_eq!(a.hs_inner(&b), j(2));
        let cycle = perm([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(cycle.hs_inner(&cycle), int(3));
    }

    #[test]
    fn scalar_multiple_detection() {
        let a = perm([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        let b = a.scale(&j(2));
        assert_eq!(b.scalar_multiple_of(&a), Some(j(2)));
        assert_eq!(Mat3::identity().scalar_multiple_of(&a), None);
        assert_eq!(Mat3::zero().scalar_multiple_of(&a), Some(int(0)));
    }

    #[test]
    fn basis_validation_rejects_bad_input() {
        let mut elems: [Mat3; 9] = std::array::from_fn(|_| Mat3::zero());
        elems[0] = Mat3::identity();
        let gram: [FieldElem; 9] = std::array::from_fn(|_| int(3));
        assert!(OrthogonalBasis::new(elems.clone(), gram).is_err());
        let zero_gram: [FieldElem; 9] = std::array::from_fn(|_| int(0));
        assert!(matches!(
            OrthogonalBasis::new(elems, zero_gram),
            Err(Error::SingularGram(0))
        ));
    }

    #[test]
    fn elementary_basis_roundtrip() {
        let elems: [Mat3; 9] = std::array::from_fn(|i| {
            let mut m = Mat3::zero();
            m.entries[i / 3][i % 3] = int(1);
            m
        });
        let gram: [FieldElem; 9] = std::array::from_fn(|_| int(1));
        let m = Mat3::from_fn(|r, c| int((r * 3 + c) as i64) * j(r as i64));
        let coeffs = decompose_in_basis(&m, &elems, &gram).unwrap();
        for (i, c) in coeffs.iter().enumerate() {
            assert_eq!(*c, m.entries[i / 3][i % 3]);
        }
    }
}
