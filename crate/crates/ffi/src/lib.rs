//! C ABI for `qtc`.
//!
//! Polynomials cross the boundary as opaque `QtcPoly` handles. Every function
//! returns a [`QtcStatus`]; on failure a message is kept per thread and can be
//! read with [`qtc_last_error`]. Strings returned by the library are owned by
//! the caller and must be released with [`qtc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qtc::chains::{f_chains, f_stat};
use qtc::closed_forms::{f1, f2, f3_recursive, f3_two_step, ABCParams};
use qtc::io::{parse_json, render_json};
use qtc::tableaux::f_tableaux;
use qtc::tesler::f_tesler;
use qtc::{LaurentPoly, QtcError};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtcStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    NotPolynomial = 3,
    Parse = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Evaluation methods accepted by [`qtc_compute`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtcMethod {
    /// Sum over standard tableaux; input `(a_2, ..., a_n)`, `n <= 8`.
    Tableaux = 0,
    /// Sum over Tesler matrices; input is the full hook vector `(a_1, ..., a_n)`.
    Tesler = 1,
    /// Closed forms and the one-step recursion; one, two or three arguments.
    Recursion = 2,
    /// Two-step recursion; three arguments with `c >= 1`.
    TwoStep = 3,
    /// Sum of symmetric chains; three arguments.
    Chains = 4,
    /// Sum of `q^area t^stat` over subpartitions; three arguments.
    Stat = 5,
}

/// Opaque polynomial handle.
pub struct QtcPoly {
    poly: LaurentPoly,
    /// Terms in display order, cached for indexed access.
    terms: Vec<(i64, i64, CString)>,
}

impl QtcPoly {
    fn new(poly: LaurentPoly) -> Box<Self> {
        let terms = poly
            .terms_display_order()
            .into_iter()
            .map(|(e, c)| (e.q_exp, e.t_exp, CString::new(c.to_string()).expect("digits")))
            .collect();
        Box::new(QtcPoly { poly, terms })
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: QtcStatus, msg: impl Into<String>) -> QtcStatus {
    set_error(msg);
    status
}

fn from_error(e: QtcError) -> QtcStatus {
    let status = match e {
        QtcError::Domain(_) => QtcStatus::Domain,
        QtcError::NotPolynomial(_) => QtcStatus::NotPolynomial,
        QtcError::Parse(_) => QtcStatus::Parse,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> QtcStatus) -> QtcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(QtcStatus::Panic, "internal panic"),
    }
}

unsafe fn slice<'a>(values: *const i64, len: usize) -> Option<&'a [i64]> {
    if len == 0 {
        Some(&[])
    } else if values.is_null() {
        None
    } else {
        // SAFETY: the caller provides `len` readable values.
        Some(unsafe { std::slice::from_raw_parts(values, len) })
    }
}

fn abc(v: &[i64]) -> qtc::Result<ABCParams> {
    match *v {
        [a, b, c] => ABCParams::new(a, b, c),
        _ => Err(QtcError::Domain(format!("expected three arguments, got {}", v.len()))),
    }
}

fn evaluate(method: QtcMethod, v: &[i64]) -> qtc::Result<LaurentPoly> {
    match method {
        QtcMethod::Tableaux => f_tableaux(v),
        QtcMethod::Tesler => f_tesler(v),
        QtcMethod::Recursion => match *v {
            [a] => Ok(f1(a)),
            [a, b] => f2(a, b),
            _ => f3_recursive(abc(v)?),
        },
        QtcMethod::TwoStep => f3_two_step(abc(v)?),
        QtcMethod::Chains => Ok(f_chains(&abc(v)?)),
        QtcMethod::Stat => f_stat(&abc(v)?),
    }
}

/// Computes `F` by `method` from `len` integers at `values` and stores a new
/// handle in `*out`.
///
/// # Safety
/// `values` must point to `len` readable integers (it may be null when `len`
/// is 0) and `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qtc_compute(
    method: QtcMethod,
    values: *const i64,
    len: usize,
    out: *mut *mut QtcPoly,
) -> QtcStatus {
    guard(|| {
        if out.is_null() {
            return fail(QtcStatus::NullPointer, "out is null");
        }
        // SAFETY: forwarded caller guarantee.
        let Some(v) = (unsafe { slice(values, len) }) else {
            return fail(QtcStatus::NullPointer, "values is null");
        };
        match evaluate(method, v) {
            Ok(p) => {
                // SAFETY: checked non-null above.
                unsafe { *out = Box::into_raw(QtcPoly::new(p)) };
                QtcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parses the JSON form `{"params": [...], "terms": [...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_from_json(json: *const c_char, out: *mut *mut QtcPoly) -> QtcStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return fail(QtcStatus::NullPointer, "null argument");
        }
        // SAFETY: caller guarantees a nul-terminated string.
        let Ok(s) = unsafe { CStr::from_ptr(json) }.to_str() else {
            return fail(QtcStatus::Parse, "input is not UTF-8");
        };
        match parse_json(s) {
            Ok((_, p)) => {
                // SAFETY: checked non-null above.
                unsafe { *out = Box::into_raw(QtcPoly::new(p)) };
                QtcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Renders `poly` as JSON with the given `params`. The string in `*out` must
/// be released with [`qtc_string_free`].
///
/// # Safety
/// `poly` must be a live handle, `params` must point to `len` integers (or be
/// null with `len == 0`) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_to_json(
    poly: *const QtcPoly,
    params: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> QtcStatus {
    guard(|| {
        if poly.is_null() || out.is_null() {
            return fail(QtcStatus::NullPointer, "null argument");
        }
        // SAFETY: forwarded caller guarantee.
        let Some(params) = (unsafe { slice(params, len) }) else {
            return fail(QtcStatus::NullPointer, "params is null");
        };
        // SAFETY: caller guarantees a live handle.
        let p = unsafe { &*poly };
        let s = CString::new(render_json(params, &p.poly)).expect("JSON has no nul");
        // SAFETY: checked non-null above.
        unsafe { *out = s.into_raw() };
        QtcStatus::Ok
    })
}

/// Renders `poly` in the plain text form, e.g. `q^2 + q*t + t^2`.
///
/// # Safety
/// `poly` must be a live handle and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_to_string(poly: *const QtcPoly, out: *mut *mut c_char) -> QtcStatus {
    guard(|| {
        if poly.is_null() || out.is_null() {
            return fail(QtcStatus::NullPointer, "null argument");
        }
        // SAFETY: caller guarantees a live handle.
        let p = unsafe { &*poly };
        let s = CString::new(p.poly.to_string()).expect("no nul");
        // SAFETY: checked non-null above.
        unsafe { *out = s.into_raw() };
        QtcStatus::Ok
    })
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_num_terms(poly: *const QtcPoly) -> usize {
    if poly.is_null() {
        return 0;
    }
    // SAFETY: caller guarantees a live handle.
    unsafe { &*poly }.terms.len()
}

/// Term `index` in display order (`q` exponent descending, then `t`
/// ascending). `*coeff` receives a decimal string that stays valid for the
/// lifetime of the handle and must not be freed.
///
/// # Safety
/// `poly` must be a live handle and the output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_term(
    poly: *const QtcPoly,
    index: usize,
    q_exp: *mut i64,
    t_exp: *mut i64,
    coeff: *mut *const c_char,
) -> QtcStatus {
    guard(|| {
        if poly.is_null() || q_exp.is_null() || t_exp.is_null() || coeff.is_null() {
            return fail(QtcStatus::NullPointer, "null argument");
        }
        // SAFETY: caller guarantees a live handle.
        let p = unsafe { &*poly };
        let Some((q, t, c)) = p.terms.get(index) else {
            return fail(QtcStatus::OutOfRange, format!("term {index} of {}", p.terms.len()));
        };
        // SAFETY: output pointers checked non-null above.
        unsafe {
            *q_exp = *q;
            *t_exp = *t;
            *coeff = c.as_ptr();
        }
        QtcStatus::Ok
    })
}

/// Whether two handles hold the same polynomial. Null handles compare unequal.
///
/// # Safety
/// Both pointers must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_equal(a: *const QtcPoly, b: *const QtcPoly) -> bool {
    if a.is_null() || b.is_null() {
        return false;
    }
    // SAFETY: caller guarantees live handles.
    unsafe { (*a).poly == (*b).poly }
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `poly` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtc_poly_free(poly: *mut QtcPoly) {
    if !poly.is_null() {
        // SAFETY: the handle came from Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtc_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qtc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
