//! C interface to `extcode`.
//!
//! Objects are opaque handles created by `extcode_*_new`/`from`/`dual`/...
//! functions and released by the matching `*_free`. Fallible functions
//! return an [`ExtcodeStatus`] and write their result through an out
//! pointer; on failure [`extcode_last_error`] describes the problem.
//! Strings returned by the library are released with
//! [`extcode_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use extcode::codefile::CodeFile;
use extcode::covering::{covering_radius_with, CoveringOptions, CoveringReport};
use extcode::{Error, Field, LinearCode, Matrix};

/// Result of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtcodeStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A JSON argument did not parse.
    Parse = 3,
    /// Arguments were rejected (bad field, dimensions, lengths, ...).
    InvalidInput = 4,
    /// The computation needs more work than the budget allows.
    BudgetExceeded = 5,
    /// The operation needs an MDS code.
    NotMds = 6,
    /// An internal error; please report it.
    Internal = 7,
}

/// A finite field `GF(p^m)`.
pub struct ExtcodeField(Field);

/// A linear code.
pub struct ExtcodeCode(LinearCode);

/// Covering radius and deep-hole cosets of a code.
pub struct ExtcodeReport(CoveringReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(ExtcodeStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::Parse(_) => ExtcodeStatus::Parse,
            Error::BudgetExceeded { .. } => ExtcodeStatus::BudgetExceeded,
            Error::NotMds => ExtcodeStatus::NotMds,
            _ => ExtcodeStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(ExtcodeStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ExtcodeStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            ExtcodeStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            ExtcodeStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a>(p: *const u32, len: usize, what: &str) -> Result<&'a [u32], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(ExtcodeStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Failure(ExtcodeStatus::Internal, e.to_string()))
}

/// Message for the last failed call on this thread; empty after a
/// successful call. The pointer stays valid until the next call into the
/// library on this thread.
#[no_mangle]
pub extern "C" fn extcode_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn extcode_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates `GF(p^m)` with the default modulus.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_field_new(
    p: u32,
    m: u32,
    out: *mut *mut ExtcodeField,
) -> ExtcodeStatus {
    guard(|| {
        let field = Field::new(p, m)?;
        put(out, boxed(ExtcodeField(field)))
    })
}

/// # Safety
/// `field` must be null or a live handle from [`extcode_field_new`].
#[no_mangle]
pub unsafe extern "C" fn extcode_field_free(field: *mut ExtcodeField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_field_order(field: *const ExtcodeField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.order())
}

/// Builds a code from a JSON code description. `field` supplies the field
/// when the description has none and may be null.
///
/// # Safety
/// `json` must be a NUL-terminated string; `field` null or a live handle;
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_from_json(
    json: *const c_char,
    field: *const ExtcodeField,
    out: *mut *mut ExtcodeCode,
) -> ExtcodeStatus {
    guard(|| {
        let text = string(json, "json")?;
        let default = field.as_ref().map(|f| &f.0);
        let code = CodeFile::parse(text)?.build(default)?;
        put(out, boxed(ExtcodeCode(code)))
    })
}

/// The code spanned by the rows of a `rows x cols` generator given in
/// row-major order.
///
/// # Safety
/// `entries` must point to `rows * cols` values; `field` must be a live
/// handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_from_generator(
    field: *const ExtcodeField,
    rows: usize,
    cols: usize,
    entries: *const u32,
    out: *mut *mut ExtcodeCode,
) -> ExtcodeStatus {
    guard(|| {
        let f = borrow(field, "field")?;
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| Failure(ExtcodeStatus::InvalidInput, "matrix too large".into()))?;
        let data = slice(entries, len, "entries")?;
        let g = Matrix::new(&f.0, rows, cols, data.to_vec())?;
        let code = LinearCode::from_generator(&g)?;
        put(out, boxed(ExtcodeCode(code)))
    })
}

/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_free(code: *mut ExtcodeCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length `n`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_length(code: *const ExtcodeCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.n())
}

/// Dimension `k`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_dimension(code: *const ExtcodeCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.k())
}

/// Minimum distance, searching at most `budget` steps.
///
/// # Safety
/// `code` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_min_distance(
    code: *const ExtcodeCode,
    budget: u64,
    out: *mut usize,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        put(out, c.0.min_distance_with_budget(budget)?)
    })
}

/// # Safety
/// `code` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_is_mds(
    code: *const ExtcodeCode,
    budget: u64,
    out: *mut bool,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        put(out, c.0.is_mds_with_budget(budget)?)
    })
}

/// # Safety
/// `code` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_dual(
    code: *const ExtcodeCode,
    out: *mut *mut ExtcodeCode,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        put(out, boxed(ExtcodeCode(c.0.dual())))
    })
}

/// The extension of `code` by `u`: each codeword `c` gains the coordinate
/// `<u, c>`.
///
/// # Safety
/// `code` must be a live handle; `u` must point to `len` values; `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_extend(
    code: *const ExtcodeCode,
    u: *const u32,
    len: usize,
    out: *mut *mut ExtcodeCode,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        let u = slice(u, len, "u")?;
        put(out, boxed(ExtcodeCode(c.0.extend_u(u)?)))
    })
}

/// The code as a JSON generator-matrix description. Free the string with
/// [`extcode_string_free`].
///
/// # Safety
/// `code` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_code_to_json(
    code: *const ExtcodeCode,
    out: *mut *mut c_char,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        let text = serde_json::to_string(&CodeFile::from_code(&c.0))
            .map_err(|e| Failure(ExtcodeStatus::Internal, e.to_string()))?;
        put(out, c_string(text)?)
    })
}

/// Covering radius by syndrome enumeration over at most `budget`
/// syndromes. With `representatives`, the report also keeps one vector per
/// deep-hole coset.
///
/// # Safety
/// `code` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_covering_radius(
    code: *const ExtcodeCode,
    budget: u64,
    representatives: bool,
    out: *mut *mut ExtcodeReport,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        let report = covering_radius_with(
            &c.0,
            CoveringOptions {
                budget,
                representatives,
            },
        )?;
        put(out, boxed(ExtcodeReport(report)))
    })
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_report_free(report: *mut ExtcodeReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Covering radius, or 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_report_rho(report: *const ExtcodeReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.rho())
}

/// Number of cosets at distance `rho`, or 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn extcode_report_num_deep_hole_cosets(
    report: *const ExtcodeReport,
) -> usize {
    report.as_ref().map_or(0, |r| r.0.num_deep_hole_cosets())
}

/// Summary as JSON (`rho`, `num_deep_hole_cosets` and, when the report
/// has them and `representatives` is set, the representatives).
///
/// # Safety
/// `report` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_report_to_json(
    report: *const ExtcodeReport,
    representatives: bool,
    out: *mut *mut c_char,
) -> ExtcodeStatus {
    guard(|| {
        let r = borrow(report, "report")?;
        let text = serde_json::to_string(&r.0.summary(representatives))
            .map_err(|e| Failure(ExtcodeStatus::Internal, e.to_string()))?;
        put(out, c_string(text)?)
    })
}

/// Whether `v` lies at distance `rho` from the code of the report.
///
/// # Safety
/// `report` must be a live handle; `v` must point to `len` values; `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_report_is_deep_hole(
    report: *const ExtcodeReport,
    v: *const u32,
    len: usize,
    out: *mut bool,
) -> ExtcodeStatus {
    guard(|| {
        let r = borrow(report, "report")?;
        let v = slice(v, len, "v")?;
        put(out, r.0.is_deep_hole(v)?)
    })
}

/// Whether `v` is a deep hole of `code`, computing the covering radius
/// with the default budget.
///
/// # Safety
/// `code` must be a live handle; `v` must point to `len` values; `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn extcode_is_deep_hole(
    code: *const ExtcodeCode,
    v: *const u32,
    len: usize,
    out: *mut bool,
) -> ExtcodeStatus {
    guard(|| {
        let c = borrow(code, "code")?;
        let v = slice(v, len, "v")?;
        put(out, extcode::covering::is_deep_hole(&c.0, v)?)
    })
}
