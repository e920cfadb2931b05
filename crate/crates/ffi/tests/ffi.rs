//! Exercises the C entry points from Rust: same ABI, same ownership rules.

use qhstruct_ffi::*;
use serde_json::Value;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

const PAPER: &str = "\
algebra paper_example
vertices 4
arrow a 1 2
arrow b 1 3
arrow c 2 3
arrow d 3 4
relation a*c*d - b*d
";

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of an out-string and frees it through the library.
unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null(), "expected an out-string");
    let owned = CStr::from_ptr(s).to_str().unwrap().to_string();
    qh_string_free(s);
    owned
}

unsafe fn parse_paper() -> *mut QhAlgebra {
    let text = cstr(PAPER);
    let mut err: *mut c_char = ptr::null_mut();
    let alg = qh_algebra_parse(text.as_ptr(), &mut err);
    assert!(err.is_null(), "unexpected parse error: {}", take(err));
    assert!(!alg.is_null());
    alg
}

#[test]
fn parse_and_accessors() {
    unsafe {
        let alg = parse_paper();
        assert_eq!(qh_algebra_vertices(alg), 4);
        assert_eq!(qh_algebra_dimension(alg), 11);
        qh_algebra_free(alg);
    }
}

#[test]
fn parse_failure_reports_line() {
    unsafe {
        let text = cstr("vertices 2\narrow a 1 5\n");
        let mut err: *mut c_char = ptr::null_mut();
        let alg = qh_algebra_parse(text.as_ptr(), &mut err);
        assert!(alg.is_null());
        let msg = take(err);
        assert!(msg.contains("line 2"), "got: {msg}");
        // Null text is rejected, not dereferenced.
        assert!(qh_algebra_parse(ptr::null(), ptr::null_mut()).is_null());
    }
}

#[test]
fn check_round_trips_json() {
    unsafe {
        let alg = parse_paper();
        let mut out: *mut c_char = ptr::null_mut();

        let st = qh_check_json(alg, cstr("1,2,3,4").as_ptr(), &mut out);
        assert_eq!(st, QhStatus::Ok);
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["quasi_hereditary"], true);

        let st = qh_check_json(alg, cstr("1,2,4,3").as_ptr(), &mut out);
        assert_eq!(st, QhStatus::Ok, "a negative verdict is still Ok");
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["quasi_hereditary"], false);

        let st = qh_check_json(alg, cstr("1,2,3").as_ptr(), &mut out);
        assert_eq!(st, QhStatus::InvalidOrder);
        assert!(take(out).contains("4 vertices"));

        assert_eq!(
            qh_check_json(alg, ptr::null(), &mut out),
            QhStatus::NullArgument
        );
        assert!(out.is_null(), "out is cleared on failure");
        assert_eq!(
            qh_check_json(ptr::null(), cstr("1,2,3,4").as_ptr(), &mut out),
            QhStatus::NullArgument
        );
        qh_algebra_free(alg);
    }
}

#[test]
fn enumerate_and_connect() {
    unsafe {
        let alg = parse_paper();
        let mut out: *mut c_char = ptr::null_mut();

        assert_eq!(
            qh_enumerate_json(alg, cstr("brute").as_ptr(), &mut out),
            QhStatus::Ok
        );
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["count"], 16);

        assert_eq!(
            qh_enumerate_json(alg, cstr("greedy").as_ptr(), &mut out),
            QhStatus::InvalidOrder
        );
        qh_string_free(out);

        let st = qh_connect_json(
            alg,
            cstr("1,2,3,4").as_ptr(),
            cstr("3,2,1,4").as_ptr(),
            &mut out,
        );
        assert_eq!(st, QhStatus::Ok);
        let v: Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["word"], serde_json::json!([1, 2, 1]));
        assert_eq!(v["certified"], true);

        // A non-quasi-hereditary endpoint is a refusal, not a crash.
        let st = qh_connect_json(
            alg,
            cstr("1,2,3,4").as_ptr(),
            cstr("1,2,4,3").as_ptr(),
            &mut out,
        );
        assert_eq!(st, QhStatus::Failed);
        assert!(take(out).contains("not quasi-hereditary"));

        qh_algebra_free(alg);
    }
}

#[test]
fn frees_accept_null() {
    unsafe {
        qh_algebra_free(ptr::null_mut());
        qh_string_free(ptr::null_mut());
    }
}
