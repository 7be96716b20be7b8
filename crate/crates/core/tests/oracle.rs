//! Exact results cross-checked against an independent floating-point model.

mod common;

use common::{close, to_c, C};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ternion::bases::{nonion_basis, tu3_basis};
use ternion::bracket::{structure_table, BasisKind};
use ternion::{clifford, cubic, roots, FieldElem};

fn approx_matrix(m: &ternion::Mat3) -> common::M {
    std::array::from_fn(|r| std::array::from_fn(|c| to_c(&m.entries[r][c])))
}

#[test]
fn bases_agree_with_clock_shift_words() {
    for (kind, oracle) in [(BasisKind::Nonion, common::nonions()), (BasisKind::Tu3, common::tu3())] {
        for (a, (exact, float)) in kind.elements().iter().zip(&oracle).enumerate() {
            let d = common::add(&approx_matrix(exact), float, C::new(-1.0, 0.0));
            assert!(common::max_abs(&d) < common::TOL, "{kind} element {a}");
        }
    }
    assert_eq!(nonion_basis().elements().len(), tu3_basis().elements().len());
}

#[test]
fn structure_tables_agree_with_float_brackets() {
    for (kind, oracle) in [(BasisKind::Nonion, common::nonions()), (BasisKind::Tu3, common::tu3())] {
        let table = structure_table(kind).unwrap();
        assert_eq!(table.len(), 84);
        for row in &table {
            let [k, l, m] = row.triple;
            let b = common::bracket(&oracle[k], &oracle[l], &oracle[m]);
            let want = common::decompose(&oracle, &b);
            for (n, w) in want.iter().enumerate() {
                assert!(close(to_c(&row.coeff(n)), *w), "{kind} {:?} coefficient {n}", row.triple);
            }
        }
    }
}

#[test]
fn su3_constants_agree_with_float_commutators() {
    let table = roots::su3_structure_constants().unwrap();
    for a in 1..=8 {
        for b in 1..=8 {
            for c in 1..=8 {
                let exact = roots::su3_constant(&table, a, b, c);
                assert!(close(to_c(&exact), C::new(common::su3_f(a, b, c), 0.0)), "f{a}{b}{c}");
            }
        }
    }
}

#[test]
fn det_poly_agrees_with_float_determinant() {
    let det = cubic::det_poly().unwrap();
    let q = common::nonions();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let ints: [i64; 9] = std::array::from_fn(|_| rng.gen_range(-5..=5));
        let x: [FieldElem; 9] = std::array::from_fn(|a| FieldElem::from_integer(ints[a]));
        let mut m = common::zero();
        for a in 0..9 {
            m = common::add(&m, &q[a], C::new(ints[a] as f64, 0.0));
        }
        let float_det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        let exact = to_c(&det.eval(&x));
        assert!((exact - float_det).norm() < 1e-6 * (1.0 + float_det.norm()), "{ints:?}");
    }
}

#[test]
fn alpha_roots_agree_with_float_brackets() {
    let q = common::tu3();
    for i in 1..=6 {
        let exact = roots::extract_alpha_root(i).unwrap();
        let brackets = [
            common::bracket(&q[i], &q[7], &q[8]),
            common::bracket(&q[0], &q[i], &q[7]),
            common::bracket(&q[0], &q[i], &q[8]),
        ];
        for (c, b) in brackets.iter().enumerate() {
            let coeff = common::decompose(&q, b)[i];
            assert!(close(to_c(&exact.components[c]), coeff), "alpha{i}[{c}]");
        }
    }
}

#[test]
fn clifford_census_matches_trinomial_coefficients() {
    for n in 1..=clifford::MAX_GENERATORS {
        assert_eq!(clifford::degree_census(n).unwrap(), common::trinomial_row(n), "n = {n}");
        assert_eq!(clifford::dimension(n).unwrap(), 3u64.pow(n as u32));
    }
}
