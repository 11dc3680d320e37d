//! C ABI over the verification checks.
//!
//! Each `qc_check_*` function runs one check and hands back an opaque
//! [`QcReport`] through an out-pointer. Strings returned by the accessors are
//! owned by the caller and must be released with [`qc_string_free`]; reports
//! with [`qc_report_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qcancel::qmatrix::{Triangular, WordSpec};
use qcancel::theorems::{self, Report};
use qcancel::Error;

/// Result codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidWord = 2,
    InvalidRootOrder = 3,
    InvalidParameter = 4,
    Internal = 5,
}

/// Opaque check report.
pub struct QcReport {
    inner: Report,
}

fn status_of(e: &Error) -> QcStatus {
    match e {
        Error::InvalidWord(_) => QcStatus::InvalidWord,
        Error::InvalidRootOrder { .. } | Error::InvalidOrder => QcStatus::InvalidRootOrder,
        Error::InvalidParameter(_) | Error::InvalidShift(_) | Error::InvalidBinomial { .. } => {
            QcStatus::InvalidParameter
        }
        _ => QcStatus::Internal,
    }
}

/// Runs `f` and stores the report in `out`, mapping errors and panics.
fn deliver(out: *mut *mut QcReport, f: impl FnOnce() -> Result<Report, QcStatus>) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    // SAFETY: `out` is non-null and the caller guarantees it is writable.
    unsafe { *out = ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(report)) => {
            let boxed = Box::new(QcReport { inner: report });
            // SAFETY: as above.
            unsafe { *out = Box::into_raw(boxed) };
            QcStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => QcStatus::Internal,
    }
}

/// # Safety
/// `word` must be null or a valid NUL-terminated string.
unsafe fn parse_word(word: *const c_char) -> Result<WordSpec, QcStatus> {
    if word.is_null() {
        return Err(QcStatus::NullPointer);
    }
    let s = CStr::from_ptr(word).to_str().map_err(|_| QcStatus::InvalidWord)?;
    WordSpec::parse(s).map_err(|e| status_of(&e))
}

fn lift(r: qcancel::Result<Report>) -> Result<Report, QcStatus> {
    r.map_err(|e| status_of(&e))
}

/// `(X+Y)^n - X^n - Y^n` with `YX = qXY`, `q` a root of the `m`-th
/// cyclotomic polynomial.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_check_frobenius(n: u32, m: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || lift(theorems::check_frobenius(n, m)))
}

/// Trace identity at a root of unity for the word `word` over `{U, L}`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_check_main(word: *const c_char, n: u32, m: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || lift(theorems::check_main(&parse_word(word)?, n, m)))
}

/// # Safety
/// `word` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_check_count(word: *const c_char, n: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || lift(theorems::check_count(&parse_word(word)?, n)))
}

/// # Safety
/// `word` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_check_positivity(word: *const c_char, n: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || lift(theorems::check_positivity(&parse_word(word)?, n)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_check_sn_trace(n: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || lift(theorems::check_sn_trace(n)))
}

/// `gen` is the ASCII letter `'U'` or `'L'`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_check_rho_oracle(gen: c_char, n: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || {
        let kind = Triangular::from_char(gen as u8 as char).ok_or(QcStatus::InvalidWord)?;
        lift(theorems::check_rho_oracle(kind, n))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_check_qbinom_vanishing(n: u32, out: *mut *mut QcReport) -> QcStatus {
    deliver(out, || lift(theorems::check_qbinom_vanishing(n)))
}

/// `1` on PASS, `0` on FAIL, `-1` for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn qc_report_passed(report: *const QcReport) -> i32 {
    match report.as_ref() {
        Some(r) => i32::from(r.inner.status.is_pass()),
        None => -1,
    }
}

/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn qc_report_residual_terms(report: *const QcReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.residual_terms)
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// The report as a JSON object. Null for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn qc_report_json(report: *const QcReport) -> *mut c_char {
    report
        .as_ref()
        .and_then(|r| serde_json::to_string(&r.inner).ok())
        .map_or(ptr::null_mut(), to_c)
}

/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn qc_report_lhs(report: *const QcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| to_c(r.inner.lhs.clone()))
}

/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn qc_report_rhs(report: *const QcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| to_c(r.inner.rhs.clone()))
}

/// # Safety
/// `report` must be null or a pointer obtained from a `qc_check_*` call that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn qc_report_free(report: *mut QcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn qc_status_message(status: QcStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        QcStatus::Ok => c"ok",
        QcStatus::NullPointer => c"null pointer argument",
        QcStatus::InvalidWord => c"invalid word: expected a nonempty string over {U, L}",
        QcStatus::InvalidRootOrder => c"invalid root-of-unity order for n",
        QcStatus::InvalidParameter => c"invalid parameter",
        QcStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}
