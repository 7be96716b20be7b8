use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ternion_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ternion_last_error()) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { ternion_string_free(p) };
    s
}

fn rational(text: &str) -> *mut TernionField {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ternion_field_from_rational(c.as_ptr(), &mut out) }, TernionStatus::Ok);
    out
}

fn basis(kind: TernionBasis, i: usize) -> *mut TernionMat3 {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ternion_mat3_basis(kind, i, &mut out) }, TernionStatus::Ok);
    out
}

#[test]
fn field_arithmetic_round_trip() {
    let a = rational("3/4");
    let b = rational("-1/2");
    let mut j = ptr::null_mut();
    let name = CString::new("j").unwrap();
    unsafe {
        assert_eq!(ternion_field_constant(name.as_ptr(), &mut j), TernionStatus::Ok);
        let mut p = ptr::null_mut();
        assert_eq!(ternion_field_mul(a, j, &mut p), TernionStatus::Ok);
        let mut q = ptr::null_mut();
        assert_eq!(ternion_field_div(p, j, &mut q), TernionStatus::Ok);
        let mut eq = false;
        assert_eq!(ternion_field_equal(q, a, &mut eq), TernionStatus::Ok);
        assert!(eq);
        let mut sum = ptr::null_mut();
        assert_eq!(ternion_field_add(a, b, &mut sum), TernionStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ternion_field_to_string(sum, &mut s), TernionStatus::Ok);
        assert_eq!(take_string(s), "1/4");
        let mut conj = ptr::null_mut();
        assert_eq!(ternion_field_conjugate_j(j, &mut conj), TernionStatus::Ok);
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(ternion_field_approx(conj, &mut re, &mut im), TernionStatus::Ok);
        assert!((re + 0.5).abs() < 1e-12 && (im + 0.75f64.sqrt()).abs() < 1e-12);
        for h in [a, b, j, p, q, sum, conj] {
            ternion_field_free(h);
        }
    }
}

#[test]
fn coords_constructor_matches_constant() {
    let texts: Vec<CString> = ["0", "0", "1", "0", "0", "0", "0", "0"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = texts.iter().map(|c| c.as_ptr()).collect();
    let name = CString::new("sqrt2").unwrap();
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(ternion_field_from_coords(ptrs.as_ptr(), &mut a), TernionStatus::Ok);
        let mut b = ptr::null_mut();
        assert_eq!(ternion_field_constant(name.as_ptr(), &mut b), TernionStatus::Ok);
        let mut eq = false;
        ternion_field_equal(a, b, &mut eq);
        assert!(eq);
        ternion_field_free(a);
        ternion_field_free(b);
    }
}

#[test]
fn error_codes_and_messages() {
    let zero = rational("0");
    let one = rational("1");
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(ternion_field_div(one, zero, &mut out), TernionStatus::DivisionByZero);
        assert!(out.is_null());
        assert!(last_error().contains("division"));
        let bad = CString::new("1/0").unwrap();
        assert_eq!(ternion_field_from_rational(bad.as_ptr(), &mut out), TernionStatus::Parse);
        assert_eq!(ternion_field_add(ptr::null(), one, &mut out), TernionStatus::NullPointer);
        let mut m = ptr::null_mut();
        assert_eq!(ternion_mat3_basis(TernionBasis::Tu3, 9, &mut m), TernionStatus::OutOfRange);
        let mut dim = 0u64;
        assert_eq!(ternion_clifford_dimension(13, &mut dim), TernionStatus::OutOfRange);
        assert_eq!(ternion_clifford_dimension(3, &mut dim), TernionStatus::Ok);
        assert_eq!(dim, 27);
        assert_eq!(last_error(), "");
        ternion_field_free(zero);
        ternion_field_free(one);
    }
}

#[test]
fn bracket_and_decomposition() {
    let q: Vec<_> = (0..9).map(|i| basis(TernionBasis::Tu3, i)).collect();
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(ternion_mat3_bracket(q[1], q[2], q[3], &mut b), TernionStatus::Ok);
        let mut c = [ptr::null_mut(); 9];
        assert_eq!(ternion_mat3_decompose(TernionBasis::Tu3, b, c.as_mut_ptr()), TernionStatus::Ok);
        let name = CString::new("sqrt3").unwrap();
        let mut s3 = ptr::null_mut();
        ternion_field_constant(name.as_ptr(), &mut s3);
        let mut eq = false;
        ternion_field_equal(c[0], s3, &mut eq);
        assert!(eq, "{{Q1,Q2,Q3}} = √3 Q0");
        let mut det = ptr::null_mut();
        assert_eq!(ternion_mat3_det(q[0], &mut det), TernionStatus::Ok);
        let (mut re, mut im) = (0.0, 0.0);
        ternion_field_approx(det, &mut re, &mut im);
        assert!((re - 3f64.powf(-1.5)).abs() < 1e-12 && im.abs() < 1e-12);
        for h in c {
            ternion_field_free(h);
        }
        ternion_field_free(s3);
        ternion_field_free(det);
        ternion_mat3_free(b);
        for h in q {
            ternion_mat3_free(h);
        }
    }
}

#[test]
fn cubic_norm_of_identity() {
    let texts: Vec<CString> = ["2", "0", "0", "0", "0", "0", "0", "0", "0"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = texts.iter().map(|c| c.as_ptr()).collect();
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(ternion_cubic_norm(ptrs.as_ptr(), &mut out), TernionStatus::Ok);
        let mut s = ptr::null_mut();
        ternion_field_to_string(out, &mut s);
        assert_eq!(take_string(s), "8");
        ternion_field_free(out);
    }
}

#[test]
fn json_entry_points() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(ternion_structure_table_json(TernionBasis::Nonion, &mut s), TernionStatus::Ok);
        let rows: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(rows.as_array().unwrap().len(), 84);

        let scope = CString::new("roots").unwrap();
        let mut passed = false;
        assert_eq!(
            ternion_verify_json(scope.as_ptr(), ptr::null(), false, &mut s, &mut passed),
            TernionStatus::Ok
        );
        assert!(passed);
        let report: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(report["schema"], "ternion/report/v1");

        let missing = CString::new("/nonexistent/fixtures").unwrap();
        assert_eq!(
            ternion_verify_json(scope.as_ptr(), missing.as_ptr(), false, &mut s, &mut passed),
            TernionStatus::Fixture
        );
        let bogus = CString::new("bogus").unwrap();
        assert_eq!(
            ternion_verify_json(bogus.as_ptr(), ptr::null(), false, &mut s, &mut passed),
            TernionStatus::Parse
        );
    }
}

#[test]
fn degree_census_buffer() {
    let mut buf = [0u64; 4];
    let mut len = 0usize;
    unsafe {
        assert_eq!(
            ternion_clifford_degree_census(4, buf.as_mut_ptr(), buf.len(), &mut len),
            TernionStatus::Ok
        );
        assert_eq!(len, 9);
        assert_eq!(buf, [1, 4, 10, 16]);
        assert_eq!(ternion_clifford_degree_census(4, ptr::null_mut(), 0, &mut len), TernionStatus::Ok);
    }
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(ternion_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_compiles_as_c() {
    if !have_cc() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/ternion.h");
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn c_program_links_against_static_library() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libternion_ffi.a");
    if !have_cc() || !lib.exists() {
        eprintln!("skipping: no C compiler or {} not built", lib.display());
        return;
    }
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let tmp = tempdir();
    let bin = tmp.join("smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke program failed to build");
    let out = Command::new(&bin).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout.contains("dim = 729"));
    assert!(stdout.contains("det q1 = 1.0+0.0i"));
}

fn tempdir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
