use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qtc_ffi::*;

fn compute(method: QtcMethod, v: &[i64]) -> Result<*mut QtcPoly, QtcStatus> {
    let mut out = ptr::null_mut();
    let s = unsafe { qtc_compute(method, v.as_ptr(), v.len(), &mut out) };
    if s == QtcStatus::Ok {
        Ok(out)
    } else {
        Err(s)
    }
}

fn text(p: *const QtcPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qtc_poly_to_string(p, &mut s) }, QtcStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { qtc_string_free(s) };
    out
}

fn last_error() -> String {
    let e = qtc_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_owned()
}

#[test]
fn methods_agree() {
    let reference = compute(QtcMethod::Tableaux, &[1, 1, 2]).unwrap();
    for (m, v) in [
        (QtcMethod::Tesler, vec![0, 1, 1, 2]),
        (QtcMethod::Recursion, vec![1, 1, 2]),
        (QtcMethod::TwoStep, vec![1, 1, 2]),
        (QtcMethod::Chains, vec![1, 1, 2]),
        (QtcMethod::Stat, vec![1, 1, 2]),
    ] {
        let p = compute(m, &v).unwrap();
        assert!(unsafe { qtc_poly_equal(p, reference) }, "{m:?}");
        unsafe { qtc_poly_free(p) };
    }
    unsafe { qtc_poly_free(reference) };
}

#[test]
fn terms_in_display_order() {
    let p = compute(QtcMethod::Tableaux, &[0, 2]).unwrap();
    assert_eq!(text(p), "q^4 + q^3*t + q^2*t + q^2*t^2 - q*t + q*t^2 + q*t^3 + t^4");
    let n = unsafe { qtc_poly_num_terms(p) };
    let mut terms = Vec::new();
    for i in 0..n {
        let (mut q, mut t, mut c) = (0, 0, ptr::null());
        assert_eq!(unsafe { qtc_poly_term(p, i, &mut q, &mut t, &mut c) }, QtcStatus::Ok);
        terms.push((q, t, unsafe { CStr::from_ptr(c) }.to_str().unwrap().to_owned()));
    }
    assert_eq!(terms[0], (4, 0, "1".to_owned()));
    assert_eq!(terms[4], (1, 1, "-1".to_owned()));
    let (mut q, mut t, mut c) = (0, 0, ptr::null());
    assert_eq!(
        unsafe { qtc_poly_term(p, n, &mut q, &mut t, &mut c) },
        QtcStatus::OutOfRange
    );
    unsafe { qtc_poly_free(p) };
}

#[test]
fn json_round_trip() {
    let p = compute(QtcMethod::Tableaux, &[0, 1, 2]).unwrap();
    let params = [0i64, 1, 2];
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { qtc_poly_to_json(p, params.as_ptr(), 3, &mut json) },
        QtcStatus::Ok
    );
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { qtc_poly_from_json(json, &mut back) }, QtcStatus::Ok);
    assert!(unsafe { qtc_poly_equal(p, back) });
    let mut again = ptr::null_mut();
    assert_eq!(
        unsafe { qtc_poly_to_json(back, params.as_ptr(), 3, &mut again) },
        QtcStatus::Ok
    );
    assert_eq!(unsafe { CStr::from_ptr(json) }, unsafe { CStr::from_ptr(again) });
    unsafe {
        qtc_string_free(json);
        qtc_string_free(again);
        qtc_poly_free(p);
        qtc_poly_free(back);
    }
}

#[test]
fn error_codes() {
    assert_eq!(compute(QtcMethod::Chains, &[0, 3, 0]), Err(QtcStatus::Domain));
    assert!(last_error().contains("domain"));
    assert_eq!(compute(QtcMethod::Tesler, &[1, -1]), Err(QtcStatus::Domain));
    assert_eq!(compute(QtcMethod::Tableaux, &[1; 8]), Err(QtcStatus::Domain));
    let s = unsafe { qtc_compute(QtcMethod::Tableaux, ptr::null(), 2, &mut ptr::null_mut()) };
    assert_eq!(s, QtcStatus::NullPointer);
    let s = unsafe { qtc_compute(QtcMethod::Tableaux, [1i64].as_ptr(), 1, ptr::null_mut()) };
    assert_eq!(s, QtcStatus::NullPointer);
    let bad = CString::new("{\"params\":[]}").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qtc_poly_from_json(bad.as_ptr(), &mut out) }, QtcStatus::Parse);
    assert_eq!(unsafe { qtc_poly_num_terms(ptr::null()) }, 0);
    assert!(!unsafe { qtc_poly_equal(ptr::null(), ptr::null()) });
    unsafe {
        qtc_poly_free(ptr::null_mut());
        qtc_string_free(ptr::null_mut());
    }
}

#[test]
fn empty_vector_is_one() {
    let p = compute(QtcMethod::Tableaux, &[]).unwrap();
    assert_eq!(text(p), "1");
    unsafe { qtc_poly_free(p) };
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/qtc.h");
    assert!(header.exists(), "build script writes the header");
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let lib_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = lib_dir.join("libqtc_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built at {}; skipping link", lib.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("qtc_smoke_{}", std::process::id()));
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next(),
        Some("q^4 + q^3*t + q^2*t + q^2*t^2 - q*t + q*t^2 + q*t^3 + t^4")
    );
    assert_eq!(lines.next(), Some("4 0 1"));
    assert!(stdout.contains("1 1 -1\n"));
    assert!(stdout.contains("error: domain error"));
}
