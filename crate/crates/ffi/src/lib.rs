//! C ABI over `ternion`.
//!
//! Values cross the boundary as opaque heap handles (`TernionField`,
//! `TernionMat3`) that the caller releases with the matching `*_free`.
//! Every fallible call returns a [`TernionStatus`]; on failure the message is
//! available from [`ternion_last_error`] on the same thread. Strings returned
//! through `char **` are owned by the caller and freed with
//! [`ternion_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use ternion::bracket::{s3_bracket, structure_table, BasisKind};
use ternion::fixtures::FixtureSet;
use ternion::report::{run_verify, Scope};
use ternion::scalar::parse_rational;
use ternion::{clifford, cubic, Error, FieldElem, Mat3};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TernionStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    DivisionByZero = 4,
    OutOfRange = 5,
    NotInSpan = 6,
    Fixture = 7,
    Io = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TernionBasis {
    Nonion = 0,
    Tu3 = 1,
}

impl From<TernionBasis> for BasisKind {
    fn from(b: TernionBasis) -> Self {
        match b {
            TernionBasis::Nonion => BasisKind::Nonion,
            TernionBasis::Tu3 => BasisKind::Tu3,
        }
    }
}

/// An element of Q(j, √2, √3).
pub struct TernionField(FieldElem);

/// A 3×3 matrix over the field.
pub struct TernionMat3(Mat3);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TernionStatus {
    match e {
        Error::DivisionByZero => TernionStatus::DivisionByZero,
        Error::NotInSpan => TernionStatus::NotInSpan,
        Error::IndexOutOfRange { .. } | Error::Range(_) | Error::UnknownVariant(_) => {
            TernionStatus::OutOfRange
        }
        Error::ParseRational(_) | Error::Parse(_) | Error::Json(_) => TernionStatus::Parse,
        Error::FixtureParse { .. } | Error::FixtureRowCount { .. } => TernionStatus::Fixture,
        Error::Io(_) => TernionStatus::Io,
        Error::LengthMismatch(..) => TernionStatus::InvalidArgument,
        _ => TernionStatus::Internal,
    }
}

struct Failure(TernionStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(TernionStatus::NullPointer, format!("{what} is null"))
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure(TernionStatus::InvalidArgument, message.into())
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TernionStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TernionStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TernionStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(TernionStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let out = out_ptr(out, "out")?;
    let c = CString::new(s).map_err(|_| invalid("string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_field(out: *mut *mut TernionField, v: FieldElem) -> Result<(), Failure> {
    *out_ptr(out, "out")? = Box::into_raw(Box::new(TernionField(v)));
    Ok(())
}

unsafe fn write_mat(out: *mut *mut TernionMat3, v: Mat3) -> Result<(), Failure> {
    *out_ptr(out, "out")? = Box::into_raw(Box::new(TernionMat3(v)));
    Ok(())
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ternion_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ternion_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn ternion_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A rational field element from `"p/q"` or `"p"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_from_rational(
    text: *const c_char,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| {
        let r = parse_rational(read_str(text, "text")?)?;
        write_field(out, FieldElem::from_rational(r))
    })
}

/// A field element from its eight `"p/q"` coordinates over
/// `1, j, √2, j√2, √3, j√3, √6, j√6`.
///
/// # Safety
/// `coords` must point to 8 NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_from_coords(
    coords: *const *const c_char,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| {
        if coords.is_null() {
            return Err(null("coords"));
        }
        let parts = (0..8)
            .map(|i| read_str(*coords.add(i), "coordinate"))
            .collect::<Result<Vec<_>, _>>()?;
        write_field(out, FieldElem::from_strings(&parts)?)
    })
}

/// The named constants `"j"`, `"i"`, `"sqrt2"`, `"sqrt3"`, `"sqrt6"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_constant(
    name: *const c_char,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| {
        let v = match read_str(name, "name")? {
            "j" => FieldElem::j(),
            "i" => FieldElem::imaginary_unit(),
            "sqrt2" => FieldElem::sqrt2(),
            "sqrt3" => FieldElem::sqrt3(),
            "sqrt6" => FieldElem::sqrt6(),
            other => return Err(invalid(format!("unknown constant {other:?}"))),
        };
        write_field(out, v)
    })
}

/// # Safety
/// `x` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_free(x: *mut TernionField) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

unsafe fn binary(
    a: *const TernionField,
    b: *const TernionField,
    out: *mut *mut TernionField,
    op: impl FnOnce(&FieldElem, &FieldElem) -> ternion::Result<FieldElem>,
) -> TernionStatus {
    guard(|| {
        let v = op(&deref(a, "a")?.0, &deref(b, "b")?.0)?;
        write_field(out, v)
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_add(
    a: *const TernionField,
    b: *const TernionField,
    out: *mut *mut TernionField,
) -> TernionStatus {
    binary(a, b, out, |x, y| Ok(x + y))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_sub(
    a: *const TernionField,
    b: *const TernionField,
    out: *mut *mut TernionField,
) -> TernionStatus {
    binary(a, b, out, |x, y| Ok(x - y))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_mul(
    a: *const TernionField,
    b: *const TernionField,
    out: *mut *mut TernionField,
) -> TernionStatus {
    binary(a, b, out, |x, y| Ok(x * y))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_div(
    a: *const TernionField,
    b: *const TernionField,
    out: *mut *mut TernionField,
) -> TernionStatus {
    binary(a, b, out, |x, y| x.checked_div(y))
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_conjugate_j(
    a: *const TernionField,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| write_field(out, deref(a, "a")?.0.conjugate_j()))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_equal(
    a: *const TernionField,
    b: *const TernionField,
    out: *mut bool,
) -> TernionStatus {
    guard(|| {
        *out_ptr(out, "out")? = deref(a, "a")?.0 == deref(b, "b")?.0;
        Ok(())
    })
}

/// Floating-point approximation `re + i·im`.
///
/// # Safety
/// `a` must be a live handle; `re`, `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_approx(
    a: *const TernionField,
    re: *mut f64,
    im: *mut f64,
) -> TernionStatus {
    guard(|| {
        let (r, i) = deref(a, "a")?.0.approx_complex();
        *out_ptr(re, "re")? = r;
        *out_ptr(im, "im")? = i;
        Ok(())
    })
}

/// Human-readable form such as `"-1 - 2j"`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_field_to_string(
    a: *const TernionField,
    out: *mut *mut c_char,
) -> TernionStatus {
    guard(|| write_string(out, deref(a, "a")?.0.to_string()))
}

/// Basis element `index` (0..=8) of the chosen basis.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_basis(
    basis: TernionBasis,
    index: usize,
    out: *mut *mut TernionMat3,
) -> TernionStatus {
    guard(|| {
        let elements = BasisKind::from(basis).elements();
        let m = elements
            .get(index)
            .ok_or_else(|| Failure(TernionStatus::OutOfRange, format!("index {index} outside 0..=8")))?;
        write_mat(out, m.clone())
    })
}

/// A matrix from 9 row-major entries.
///
/// # Safety
/// `entries` must point to 9 live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_from_entries(
    entries: *const *const TernionField,
    out: *mut *mut TernionMat3,
) -> TernionStatus {
    guard(|| {
        if entries.is_null() {
            return Err(null("entries"));
        }
        let cells = (0..9)
            .map(|i| deref(*entries.add(i), "entry").map(|f| f.0.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        write_mat(out, Mat3::from_fn(|r, c| cells[3 * r + c].clone()))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_get(
    m: *const TernionMat3,
    row: usize,
    col: usize,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| {
        if row > 2 || col > 2 {
            return Err(Failure(TernionStatus::OutOfRange, format!("entry ({row},{col}) outside 3×3")));
        }
        write_field(out, deref(m, "m")?.0.get(row, col).clone())
    })
}

/// # Safety
/// `m` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_free(m: *mut TernionMat3) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_mul(
    a: *const TernionMat3,
    b: *const TernionMat3,
    out: *mut *mut TernionMat3,
) -> TernionStatus {
    guard(|| write_mat(out, deref(a, "a")?.0.mat_mul(&deref(b, "b")?.0)))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_add(
    a: *const TernionMat3,
    b: *const TernionMat3,
    out: *mut *mut TernionMat3,
) -> TernionStatus {
    guard(|| write_mat(out, deref(a, "a")?.0.mat_add(&deref(b, "b")?.0)))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_equal(
    a: *const TernionMat3,
    b: *const TernionMat3,
    out: *mut bool,
) -> TernionStatus {
    guard(|| {
        *out_ptr(out, "out")? = deref(a, "a")?.0 == deref(b, "b")?.0;
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_det(
    m: *const TernionMat3,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| write_field(out, deref(m, "m")?.0.det3()))
}

/// The S3 bracket `{a, b, c}`.
///
/// # Safety
/// `a`, `b`, `c` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_bracket(
    a: *const TernionMat3,
    b: *const TernionMat3,
    c: *const TernionMat3,
    out: *mut *mut TernionMat3,
) -> TernionStatus {
    guard(|| {
        let v = s3_bracket(&deref(a, "a")?.0, &deref(b, "b")?.0, &deref(c, "c")?.0);
        write_mat(out, v)
    })
}

/// Coordinates of `m` in the chosen basis, written as 9 new handles.
///
/// # Safety
/// `m` must be a live handle; `coeffs` must have room for 9 pointers.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_decompose(
    basis: TernionBasis,
    m: *const TernionMat3,
    coeffs: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| {
        if coeffs.is_null() {
            return Err(null("coeffs"));
        }
        let c = BasisKind::from(basis).basis().decompose(&deref(m, "m")?.0)?;
        for (i, v) in c.into_iter().enumerate() {
            *coeffs.add(i) = Box::into_raw(Box::new(TernionField(v)));
        }
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_mat3_to_string(
    m: *const TernionMat3,
    out: *mut *mut c_char,
) -> TernionStatus {
    guard(|| write_string(out, deref(m, "m")?.0.to_string()))
}

/// `det Q̂` at nine rational coordinates `"p/q"`.
///
/// # Safety
/// `coords` must point to 9 NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_cubic_norm(
    coords: *const *const c_char,
    out: *mut *mut TernionField,
) -> TernionStatus {
    guard(|| {
        if coords.is_null() {
            return Err(null("coords"));
        }
        let mut x: [FieldElem; 9] = std::array::from_fn(|_| FieldElem::zero());
        for (i, slot) in x.iter_mut().enumerate() {
            *slot = FieldElem::from_rational(parse_rational(read_str(*coords.add(i), "coordinate")?)?);
        }
        write_field(out, cubic::qhat_at(&x).det3())
    })
}

/// The 84 brackets `k < l < m` as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_structure_table_json(
    basis: TernionBasis,
    out: *mut *mut c_char,
) -> TernionStatus {
    guard(|| {
        let rows = structure_table(basis.into())?;
        write_string(out, serde_json::to_string(&rows).map_err(Error::from)?)
    })
}

/// Runs a verification scope (`"all"`, `"roots"`, ...) and returns the JSON
/// report. `data_dir` may be null to use the bundled fixtures.
///
/// # Safety
/// `scope` must be a NUL-terminated string, `data_dir` one or null; `out` and
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_verify_json(
    scope: *const c_char,
    data_dir: *const c_char,
    strict: bool,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> TernionStatus {
    guard(|| {
        let scope: Scope = read_str(scope, "scope")?.parse()?;
        let dir = if data_dir.is_null() {
            None
        } else {
            Some(Path::new(read_str(data_dir, "data_dir")?))
        };
        let fixtures = FixtureSet::load(dir)?;
        let report = run_verify(scope, &fixtures, strict)?;
        let passed = out_ptr(passed, "passed")?;
        write_string(out, report.to_json()?)?;
        *passed = report.passed();
        Ok(())
    })
}

/// `3ⁿ` for `1 ≤ n ≤ 12`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_clifford_dimension(n: usize, out: *mut u64) -> TernionStatus {
    guard(|| {
        *out_ptr(out, "out")? = clifford::dimension(n)?;
        Ok(())
    })
}

/// Monomial counts per total degree `0..=2n`. Writes up to `capacity` values
/// and the full length to `len`.
///
/// # Safety
/// `buf` must have room for `capacity` values (or be null when `capacity` is
/// 0); `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ternion_clifford_degree_census(
    n: usize,
    buf: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> TernionStatus {
    guard(|| {
        let census = clifford::degree_census(n)?;
        *out_ptr(len, "len")? = census.len();
        if capacity > 0 {
            if buf.is_null() {
                return Err(null("buf"));
            }
            let k = capacity.min(census.len());
            ptr::copy_nonoverlapping(census.as_ptr(), buf, k);
        }
        Ok(())
    })
}
