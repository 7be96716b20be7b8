//! The two operator bases: nonions and the TU(3) step/diagonal operators.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::Result;
use crate::mat3::{Mat3, OrthogonalBasis};
use crate::scalar::FieldElem;

/// Grade of each nonion index: 0 for {0,7,8}, 1 for {1,2,3}, 2 for {4,5,6}.
pub const NONION_GRADE: [u8; 9] = [0, 1, 1, 1, 2, 2, 2, 0, 0];

pub fn grade(index: usize) -> u8 {
    NONION_GRADE[index]
}

fn j(k: i64) -> FieldElem {
    FieldElem::j_pow(k)
}

fn int(n: i64) -> FieldElem {
    FieldElem::from_integer(n)
}

/// Matrix with entries `j^k` at the given positions and zeros elsewhere.
fn phase_matrix(cells: [(usize, usize, i64); 3]) -> Mat3 {
    let mut m = Mat3::zero();
    for (r, c, k) in cells {
        m.entries[r][c] = j(k);
    }
    m
}

fn build_nonions() -> [Mat3; 9] {
    [
        Mat3::identity(),
        phase_matrix([(0, 1, 0), (1, 2, 0), (2, 0, 0)]),
        phase_matrix([(0, 1, 0), (1, 2, 1), (2, 0, 2)]),
        phase_matrix([(0, 1, 0), (1, 2, 2), (2, 0, 1)]),
        phase_matrix([(0, 2, 0), (1, 0, 0), (2, 1, 0)]),
        phase_matrix([(0, 2, 1), (1, 0, 0), (2, 1, 2)]),
        phase_matrix([(0, 2, 2), (1, 0, 0), (2, 1, 1)]),
        Mat3::diag(j(1), j(2), int(1)),
        Mat3::diag(j(2), j(1), int(1)),
    ]
}

fn unit(r: usize, c: usize) -> Mat3 {
    let mut m = Mat3::zero();
    m.entries[r][c] = int(1);
    m
}

fn build_tu3() -> [Mat3; 9] {
    let sqrt6_inv = FieldElem::sqrt6() * FieldElem::ratio(1, 6);
    let sqrt2_inv = FieldElem::sqrt2() * FieldElem::ratio(1, 2);
    let sqrt3_inv = FieldElem::sqrt3() * FieldElem::ratio(1, 3);
    // √(2/3) = √6/3
    let sqrt_two_thirds = FieldElem::sqrt6() * FieldElem::ratio(1, 3);
    [
        Mat3::identity().scale(&sqrt3_inv),
        unit(0, 1),
        unit(1, 2),
        unit(2, 0),
        unit(1, 0),
        unit(2, 1),
        unit(0, 2),
        Mat3::diag(sqrt6_inv.clone(), sqrt6_inv, -sqrt_two_thirds),
        Mat3::diag(sqrt2_inv.clone(), -sqrt2_inv, FieldElem::zero()),
    ]
}

/// `q_a · q_b = j^phase · q_target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonionProduct {
    pub phase: u8,
    pub target: usize,
}

/// The nine nonions q₀…q₈ as exact matrices, with their grading.
#[derive(Clone, Debug)]
pub struct NonionBasis {
    basis: OrthogonalBasis,
    products: [[NonionProduct; 9]; 9],
}

impl NonionBasis {
    fn build() -> Result<Self> {
        let elements = build_nonions();
        let basis = OrthogonalBasis::new(elements.clone(), std::array::from_fn(|_| int(3)))?;
        let mut products = [[NonionProduct { phase: 0, target: 0 }; 9]; 9];
        for a in 0..9 {
            if elements[a].pow(3) != Mat3::identity() || elements[a].det3() != int(1) {
                return Err(crate::Error::Invariant(format!("q{a} fails q³ = 1 or det = 1")));
            }
            for b in 0..9 {
                let p = elements[a].mat_mul(&elements[b]);
                products[a][b] = (0..9)
                    .find_map(|c| {
                        let s = p.scalar_multiple_of(&elements[c])?;
                        Some(NonionProduct {
                            phase: s.as_j_power()?,
                            target: c,
                        })
                    })
                    .ok_or_else(|| {
                        crate::Error::Invariant(format!("q{a}·q{b} is not a phased basis element"))
                    })?;
            }
        }
        Ok(NonionBasis { basis, products })
    }

    pub fn elements(&self) -> &[Mat3; 9] {
        self.basis.elements()
    }

    pub fn orthogonal(&self) -> &OrthogonalBasis {
        &self.basis
    }

    pub fn grade(&self, index: usize) -> u8 {
        grade(index)
    }

    pub fn product(&self, a: usize, b: usize) -> NonionProduct {
        self.products[a][b]
    }

    pub fn decompose(&self, m: &Mat3) -> Result<[FieldElem; 9]> {
        self.basis.decompose(m)
    }
}

/// Step operators Q₁…Q₆, diagonal Q₇, Q₈ and Q₀ = I/√3.
#[derive(Clone, Debug)]
pub struct Tu3Basis {
    basis: OrthogonalBasis,
}

impl Tu3Basis {
    pub fn elements(&self) -> &[Mat3; 9] {
        self.basis.elements()
    }

    pub fn orthogonal(&self) -> &OrthogonalBasis {
        &self.basis
    }

    pub fn decompose(&self, m: &Mat3) -> Result<[FieldElem; 9]> {
        self.basis.decompose(m)
    }
}

/// Shared nonion basis; invariants are checked on first use.
pub fn nonion_basis() -> &'static NonionBasis {
    static CELL: OnceLock<NonionBasis> = OnceLock::new();
    CELL.get_or_init(|| NonionBasis::build().expect("nonion basis invariants"))
}

pub fn tu3_basis() -> &'static Tu3Basis {
    static CELL: OnceLock<Tu3Basis> = OnceLock::new();
    CELL.get_or_init(|| {
        let basis = OrthogonalBasis::new(build_tu3(), std::array::from_fn(|_| int(1)))
            .expect("tu3 basis invariants");
        Tu3Basis { basis }
    })
}

/// Index relabelling 1→2→3→1: output `(i, j)` is input `(i−1, j−1)` mod 3.
pub fn cyclic_relabel(m: &Mat3) -> Mat3 {
    Mat3::from_fn(|r, c| m.entries[(r + 2) % 3][(c + 2) % 3].clone())
}

/// Per-index phases used to form Q̃ from Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseTwist {
    exponents: [u8; 9],
}

impl PhaseTwist {
    /// 1 at index 0; j at 7, 1, 2, 3; j² at 8, 4, 5, 6.
    pub fn standard() -> Self {
        PhaseTwist {
            exponents: [0, 1, 1, 1, 2, 2, 2, 1, 2],
        }
    }

    pub fn exponent(&self, index: usize) -> u8 {
        self.exponents[index]
    }

    pub fn phase(&self, index: usize) -> FieldElem {
        j(self.exponents[index] as i64)
    }

    pub fn phases(&self) -> [FieldElem; 9] {
        std::array::from_fn(|i| self.phase(i))
    }

    /// The twist applied `times` times.
    pub fn power(&self, times: u8) -> Self {
        PhaseTwist {
            exponents: self.exponents.map(|e| (e * times) % 3),
        }
    }
}

/// `ω(a, b)` with `q_a q_b = j^ω q_b q_a`.
pub fn pair_phase_matrix(basis: &NonionBasis) -> [[Option<u8>; 9]; 9] {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let ab = basis.product(a, b);
            let ba = basis.product(b, a);
            (ab.target == ba.target).then_some((ab.phase + 3 - ba.phase) % 3)
        })
    })
}

/// Result of applying twist then relabelling to one basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TildeCheck {
    pub index: usize,
    pub claimed_exponent: u8,
    /// `Some(k)` when the composite sends q_index to j^k · q_index.
    pub computed_exponent: Option<u8>,
    pub matches: bool,
}

pub fn tilde_exponent(basis: &NonionBasis, index: usize) -> Option<u8> {
    let q = &basis.elements()[index];
    let twisted = q.scale(&PhaseTwist::standard().phase(index));
    cyclic_relabel(&twisted).scalar_multiple_of(q)?.as_j_power()
}

pub fn tilde_check(basis: &NonionBasis, index: usize, claimed_exponent: u8) -> TildeCheck {
    let computed_exponent = tilde_exponent(basis, index);
    TildeCheck {
        index,
        claimed_exponent,
        computed_exponent,
        matches: computed_exponent == Some(claimed_exponent),
    }
}
