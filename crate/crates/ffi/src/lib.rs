//! C ABI over `qnewton`.
//!
//! Objects cross the boundary as opaque handles (`QnPoset`, `QnResult`)
//! that the caller frees with the matching `*_free`. Every fallible call
//! returns a `QnStatus`; on failure a message is kept per thread and can
//! be read with `qn_last_error_message`. Strings handed out by the library
//! are NUL-terminated UTF-8 and must be released with `qn_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qnewton::cli::{verify_poset, VerifyOptions};
use qnewton::qehrhart::{compute_qehrhart_with_cap, LatticeLimits};
use qnewton::{newton_polygon, Error, Poset, QEhrhartResult};

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed poset, cycle, label out of range, bad argument.
    InvalidInput = 3,
    /// Extension budget or lattice size guard exceeded.
    LimitExceeded = 4,
    /// Internal arithmetic failure (inexact or zero division).
    Arithmetic = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

/// Which polynomial of a result to export.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QnPolynomial {
    /// `F`, the extension sum of the naturally labeled dual.
    F = 0,
    /// `N = F / phi`.
    N = 1,
    /// `phi = gcd(F, [m]_q!)`.
    Phi = 2,
    /// `D = [m]_q! / phi`.
    D = 3,
    /// The q-Ehrhart polynomial, as `[c_k]*x^k + ...` over `Q(q)`.
    E = 4,
}

/// Opaque poset handle.
pub struct QnPoset(Poset);

/// Opaque handle to a computed q-Ehrhart result.
pub struct QnResult(QEhrhartResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(err: &Error) -> QnStatus {
    match err {
        Error::Budget(_) | Error::Size(_) => QnStatus::LimitExceeded,
        Error::DivisionByZero | Error::ZeroPolynomial | Error::InexactDivision => QnStatus::Arithmetic,
        _ => QnStatus::InvalidInput,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), QnStatus>) -> QnStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QnStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside qnewton");
            QnStatus::Panic
        }
    }
}

fn fail(err: Error) -> QnStatus {
    set_error(err.to_string());
    status_of(&err)
}

fn null(what: &str) -> QnStatus {
    set_error(format!("null pointer: {what}"));
    QnStatus::NullPointer
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, QnStatus> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|e| {
        set_error(format!("{what}: {e}"));
        QnStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), QnStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| {
        set_error("string contains NUL");
        QnStatus::InvalidInput
    })?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn handle<'a, T>(h: *const T, what: &str) -> Result<&'a T, QnStatus> {
    h.as_ref().ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next `qn_*` call on the same thread.
#[no_mangle]
pub extern "C" fn qn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn qn_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"m": 3, "covers": [[1,3],[2,3]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_poset_from_json(json: *const c_char, out: *mut *mut QnPoset) -> QnStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let p = Poset::from_json_str(text).map_err(fail)?;
        *out = Box::into_raw(Box::new(QnPoset(p)));
        Ok(())
    })
}

/// Builds a poset on `1..=m` from `n_pairs` relations `x < y`, passed
/// flattened as `pairs[2i] < pairs[2i+1]`.
///
/// # Safety
/// `pairs` must point to `2 * n_pairs` values (may be null when
/// `n_pairs == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_poset_from_covers(
    m: usize,
    pairs: *const usize,
    n_pairs: usize,
    out: *mut *mut QnPoset,
) -> QnStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if n_pairs == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * n_pairs)
        };
        let rel: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let p = Poset::from_covers(m, &rel).map_err(fail)?;
        *out = Box::into_raw(Box::new(QnPoset(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qn_poset_free(p: *mut QnPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qn_poset_len(p: *const QnPoset) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Canonical JSON (cover relations only).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_poset_to_json(p: *const QnPoset, out: *mut *mut c_char) -> QnStatus {
    guard(|| {
        let p = handle(p, "poset")?;
        let json = serde_json::to_string(&p.0.to_json()).expect("serializable");
        write_string(out, json)
    })
}

/// Computes `F`, `N`, `phi`, `D` and `E`. `max_extensions == 0` selects the
/// default budget.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_compute(p: *const QnPoset, max_extensions: u64, out: *mut *mut QnResult) -> QnStatus {
    guard(|| {
        let p = handle(p, "poset")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let cap = if max_extensions == 0 { qnewton::linext::DEFAULT_MAX_EXTENSIONS } else { max_extensions };
        let r = compute_qehrhart_with_cap(&p.0, cap).map_err(fail)?;
        *out = Box::into_raw(Box::new(QnResult(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qn_result_free(r: *mut QnResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The whole result as JSON (`m`, `F`, `N`, `phi`, `D`, `E_numerator`,
/// `E_denominator`).
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_result_json(r: *const QnResult, out: *mut *mut c_char) -> QnStatus {
    guard(|| {
        let r = handle(r, "result")?;
        write_string(out, serde_json::to_string(&r.0.to_json()).expect("serializable"))
    })
}

/// One polynomial in canonical text form.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_result_polynomial(
    r: *const QnResult,
    which: QnPolynomial,
    out: *mut *mut c_char,
) -> QnStatus {
    guard(|| {
        let r = &handle(r, "result")?.0;
        let text = match which {
            QnPolynomial::F => r.f.to_string(),
            QnPolynomial::N => r.n.to_string(),
            QnPolynomial::Phi => r.phi.to_string(),
            QnPolynomial::D => r.d.to_string(),
            QnPolynomial::E => r.e.to_string(),
        };
        write_string(out, text)
    })
}

/// `deg phi`, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qn_result_phi_degree(r: *const QnResult) -> u32 {
    r.as_ref().map_or(0, |r| r.0.phi_degree())
}

/// Newton polygon of `F` or `N` as TSV (`q<TAB>x` per vertex,
/// counterclockwise from the lexicographic minimum).
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qn_result_newton_tsv(
    r: *const QnResult,
    which: QnPolynomial,
    out: *mut *mut c_char,
) -> QnStatus {
    guard(|| {
        let r = &handle(r, "result")?.0;
        let f = match which {
            QnPolynomial::F => &r.f,
            QnPolynomial::N => &r.n,
            _ => {
                set_error("Newton polygons exist for F and N only");
                return Err(QnStatus::InvalidInput);
            }
        };
        let poly = newton_polygon(f).map_err(fail)?;
        write_string(out, poly.to_tsv())
    })
}

/// Runs the full check suite on one poset. `*passed` is set to 1 when
/// every check holds and 0 on a counterexample; `report` (optional)
/// receives the JSON report. Zero budgets select the defaults.
///
/// # Safety
/// `p` must be a live handle; `passed` must be writable; `report` may be
/// null.
#[no_mangle]
pub unsafe extern "C" fn qn_verify(
    p: *const QnPoset,
    max_extensions: u64,
    max_n: u32,
    passed: *mut i32,
    report: *mut *mut c_char,
) -> QnStatus {
    guard(|| {
        let p = handle(p, "poset")?;
        if passed.is_null() {
            return Err(null("passed"));
        }
        let mut opts = VerifyOptions::default();
        if max_extensions != 0 {
            opts.max_extensions = max_extensions;
        }
        if max_n != 0 {
            opts.limits = LatticeLimits { max_n, ..opts.limits };
        }
        if p.0.len() > opts.limits.max_m {
            return Err(fail(Error::Size(format!(
                "{} elements exceeds the lattice oracle limit {}",
                p.0.len(),
                opts.limits.max_m
            ))));
        }
        let r = verify_poset(0, &p.0, &opts).map_err(fail)?;
        *passed = i32::from(r.pass);
        if !report.is_null() {
            write_string(report, serde_json::to_string(&r).expect("serializable"))?;
        }
        Ok(())
    })
}
