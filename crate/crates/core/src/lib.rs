//! Exact computation in the nonion ("ternary quaternion") algebra.
//!
//! Everything is done in the number field ℚ(j, √2, √3) with arbitrary-precision
//! rationals, so every identity checked here holds exactly or fails exactly.
//!
//! - [`scalar`]: the coefficient field.
//! - [`mat3`]: 3×3 matrices, determinant, Hilbert–Schmidt projection.
//! - [`bases`]: the nonion and TU(3) operator bases and their conjugations.
//! - [`bracket`]: the S₃ triple bracket and its 84-row structure tables.
//! - [`mpoly`], [`cubic`]: the cubic norm as a polynomial in x₀…x₈.
//! - [`roots`]: Cartan triple, α/β roots, Z₃ rotation, Gell-Mann cross-checks.
//! - [`clifford`]: the n-generator ternary Clifford algebra.
//! - [`fixtures`], [`report`]: transcribed reference data and the verifier.

pub mod bases;
pub mod bracket;
pub mod clifford;
pub mod cubic;
pub mod error;
pub mod fixtures;
pub mod mat3;
pub mod mpoly;
pub mod report;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use mat3::{Mat3, Matrix3, OrthogonalBasis, Ring};
pub use scalar::{FieldElem, Rational};
