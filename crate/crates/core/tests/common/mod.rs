//! Floating-point reference model built from scratch, used to cross-check the
//! exact library results.
#![allow(dead_code)]

pub use num_complex::Complex64 as C;
use ternion::FieldElem;

pub type M = [[C; 3]; 3];

pub const TOL: f64 = 1e-9;

pub fn zero() -> M {
    [[C::new(0.0, 0.0); 3]; 3]
}

pub fn omega(k: u32) -> C {
    C::from_polar(1.0, 2.0 * std::f64::consts::PI * f64::from(k % 3) / 3.0)
}

pub fn diag(a: C, b: C, c: C) -> M {
    let mut m = zero();
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    m
}

pub fn mul(a: &M, b: &M) -> M {
    let mut m = zero();
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] = (0..3).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    m
}

pub fn add(a: &M, b: &M, s: C) -> M {
    let mut m = *a;
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] += s * b[r][c];
        }
    }
    m
}

pub fn scale(a: &M, s: C) -> M {
    add(&zero(), a, s)
}

pub fn transpose(a: &M) -> M {
    let mut m = zero();
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] = a[c][r];
        }
    }
    m
}

/// tr(A†B)
pub fn hs(a: &M, b: &M) -> C {
    let mut s = C::new(0.0, 0.0);
    for r in 0..3 {
        for c in 0..3 {
            s += a[r][c].conj() * b[r][c];
        }
    }
    s
}

pub fn max_abs(a: &M) -> f64 {
    a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

fn shift() -> M {
    let mut p = zero();
    p[0][1] = C::new(1.0, 0.0);
    p[1][2] = C::new(1.0, 0.0);
    p[2][0] = C::new(1.0, 0.0);
    p
}

fn clock(power: u32) -> M {
    diag(omega(0), omega(power), omega(2 * power))
}

/// Nonions written as clock/shift words: q_k = j^a D^b P^c with
/// D = diag(1, j, j²) and P the cyclic shift.
pub fn nonions() -> [M; 9] {
    let p = shift();
    let pt = transpose(&p);
    let one = diag(omega(0), omega(0), omega(0));
    [
        one,
        p,
        mul(&clock(1), &p),
        mul(&clock(2), &p),
        pt,
        scale(&mul(&clock(2), &pt), omega(1)),
        scale(&mul(&clock(1), &pt), omega(2)),
        scale(&clock(1), omega(1)),
        scale(&clock(2), omega(2)),
    ]
}

pub fn tu3() -> [M; 9] {
    let unit = |r: usize, c: usize| {
        let mut m = zero();
        m[r][c] = C::new(1.0, 0.0);
        m
    };
    let re = |x: f64| C::new(x, 0.0);
    let s3 = 1.0 / 3f64.sqrt();
    let s6 = 1.0 / 6f64.sqrt();
    let s2 = 1.0 / 2f64.sqrt();
    [
        diag(re(s3), re(s3), re(s3)),
        unit(0, 1),
        unit(1, 2),
        unit(2, 0),
        unit(1, 0),
        unit(2, 1),
        unit(0, 2),
        diag(re(s6), re(s6), re(-2.0 * s6)),
        diag(re(s2), re(-s2), re(0.0)),
    ]
}

pub fn bracket(a: &M, b: &M, c: &M) -> M {
    let t = |x: &M, y: &M, z: &M| mul(&mul(x, y), z);
    let mut m = zero();
    for (p, s) in [
        (t(a, b, c), 1.0),
        (t(b, c, a), 1.0),
        (t(c, a, b), 1.0),
        (t(b, a, c), -1.0),
        (t(a, c, b), -1.0),
        (t(c, b, a), -1.0),
    ] {
        m = add(&m, &p, C::new(s, 0.0));
    }
    m
}

pub fn decompose(basis: &[M; 9], m: &M) -> [C; 9] {
    std::array::from_fn(|n| hs(&basis[n], m) / hs(&basis[n], &basis[n]))
}

pub fn gellmann() -> [M; 8] {
    let mut l = [zero(); 8];
    let i = C::new(0.0, 1.0);
    let one = C::new(1.0, 0.0);
    l[0][0][1] = one;
    l[0][1][0] = one;
    l[1][0][1] = -i;
    l[1][1][0] = i;
    l[2][0][0] = one;
    l[2][1][1] = -one;
    l[3][0][2] = one;
    l[3][2][0] = one;
    l[4][0][2] = -i;
    l[4][2][0] = i;
    l[5][1][2] = one;
    l[5][2][1] = one;
    l[6][1][2] = -i;
    l[6][2][1] = i;
    let r = 1.0 / 3f64.sqrt();
    l[7] = diag(C::new(r, 0.0), C::new(r, 0.0), C::new(-2.0 * r, 0.0));
    l
}

/// f_abc from [λ_a, λ_b] = 2i f_abc λ_c, with 1-based indices.
pub fn su3_f(a: usize, b: usize, c: usize) -> f64 {
    let l = gellmann();
    let comm = add(&mul(&l[a - 1], &l[b - 1]), &mul(&l[b - 1], &l[a - 1]), C::new(-1.0, 0.0));
    let v = hs(&l[c - 1], &comm) / C::new(0.0, 4.0);
    assert!(v.im.abs() < TOL);
    v.re
}

pub fn to_c(x: &FieldElem) -> C {
    let (re, im) = x.approx_complex();
    C::new(re, im)
}

pub fn close(a: C, b: C) -> bool {
    (a - b).norm() < TOL
}

/// Coefficients of (1 + t + t²)ⁿ.
pub fn trinomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![0u64; row.len() + 2];
        for (i, c) in row.iter().enumerate() {
            for d in 0..3 {
                next[i + d] += c;
            }
        }
        row = next;
    }
    row
}
