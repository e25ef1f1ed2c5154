use std::ffi::{c_char, CStr, CString};
use std::ptr;

use serde_json::Value;
use traceform_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { tf_string_free(s) };
    out
}

fn last_error() -> Option<String> {
    let p = tf_last_error_message();
    (!p.is_null()).then(|| take(p))
}

fn group(spec: &str) -> *mut TfGroup {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tf_group_new(spec.as_ptr(), &mut g) }, TfStatus::Ok);
    g
}

fn form(entries: &str) -> *mut TfForm {
    let e = CString::new(entries).unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { tf_form_parse(e.as_ptr(), &mut q) }, TfStatus::Ok);
    q
}

#[test]
fn group_queries() {
    for (spec, order, h2, reduced) in [
        ("catalog:sym:4", 24, 2, true),
        ("catalog:quaternion8", 8, 2, false),
        ("catalog:cyclic:3", 3, 0, true),
    ] {
        let g = group(spec);
        let (mut n, mut d, mut k, mut r) = (0usize, 0usize, 0usize, false);
        unsafe {
            assert_eq!(tf_group_order(g, &mut n), TfStatus::Ok);
            assert_eq!(tf_group_h2_dim(g, &mut d), TfStatus::Ok);
            assert_eq!(tf_group_ker_s_dim(g, &mut k), TfStatus::Ok);
            assert_eq!(tf_group_is_2_reduced(g, &mut r), TfStatus::Ok);
            tf_group_free(g);
        }
        assert_eq!((n, d, r), (order, h2, reduced), "{spec}");
        assert_eq!(k == 0, reduced, "{spec}");
        assert_eq!(last_error(), None);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    let bad = CString::new("catalog:nope").unwrap();
    assert_eq!(unsafe { tf_group_new(bad.as_ptr(), &mut g) }, TfStatus::Parse);
    assert!(g.is_null());
    assert!(last_error().unwrap().contains("nope"));

    assert_eq!(unsafe { tf_group_new(ptr::null(), &mut g) }, TfStatus::NullPointer);
    assert_eq!(unsafe { tf_group_order(ptr::null(), ptr::null_mut()) }, TfStatus::NullPointer);

    let invalid = [0xffu8, 0];
    assert_eq!(unsafe { tf_group_new(invalid.as_ptr().cast(), &mut g) }, TfStatus::InvalidUtf8);

    let mut s = 0;
    assert_eq!(unsafe { tf_pin_square_sign(9, &mut s) }, TfStatus::OutOfRange);
    assert!(last_error().unwrap().contains("odd"));

    // A success clears the previous message.
    assert_eq!(unsafe { tf_pin_square_sign(8, &mut s) }, TfStatus::Ok);
    assert_eq!(last_error(), None);

    let mut q = ptr::null_mut();
    let big = CString::new("1000036000099").unwrap();
    assert_eq!(unsafe { tf_form_parse(big.as_ptr(), &mut q) }, TfStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tf_form_invariants_json(q, &mut out) }, TfStatus::FactorizationLimit);
    unsafe { tf_form_free(q) };

    // Frees accept NULL.
    unsafe {
        tf_group_free(ptr::null_mut());
        tf_form_free(ptr::null_mut());
        tf_string_free(ptr::null_mut());
    }
}

#[test]
fn pin_signs_follow_n_mod_8() {
    for n in (2..=16).step_by(2) {
        let mut s = 0;
        assert_eq!(unsafe { tf_pin_square_sign(n, &mut s) }, TfStatus::Ok);
        assert_eq!(s, if matches!(n % 8, 0 | 2) { 1 } else { -1 }, "n = {n}");
    }
}

#[test]
fn forms_and_trace_forms() {
    let (a, b) = (form("1,-1"), form("2,-2"));
    let mut iso = false;
    assert_eq!(unsafe { tf_form_is_isometric(a, b, &mut iso) }, TfStatus::Ok);
    assert!(iso);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { tf_form_invariants_json(a, &mut json) }, TfStatus::Ok);
    let v: Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["signature"], serde_json::json!([1, 1]));
    unsafe {
        tf_form_free(a);
        tf_form_free(b);
    }

    // x² − 2 has trace form ⟨2, 4⟩ ≅ ⟨2, 1⟩.
    let mut q = ptr::null_mut();
    let c = [1i64, 0, -2];
    assert_eq!(unsafe { tf_trace_form(c.as_ptr(), c.len(), &mut q) }, TfStatus::Ok);
    let mut rank = 0;
    assert_eq!(unsafe { tf_form_rank(q, &mut rank) }, TfStatus::Ok);
    assert_eq!(rank, 2);
    let expected = form("2,1");
    assert_eq!(unsafe { tf_form_is_isometric(q, expected, &mut iso) }, TfStatus::Ok);
    assert!(iso);
    unsafe {
        tf_form_free(q);
        tf_form_free(expected);
    }

    let mut q = ptr::null_mut();
    let square = [1i64, -2, 1];
    assert_eq!(unsafe { tf_trace_form(square.as_ptr(), square.len(), &mut q) }, TfStatus::Math);
    assert!(last_error().unwrap().contains("separable"));
    assert!(q.is_null());
}

#[test]
fn suite_reports_round_trip() {
    let mut out = ptr::null_mut();
    let mut passed = false;
    assert_eq!(unsafe { tf_suite_run(7, 3, &mut out, &mut passed) }, TfStatus::Ok);
    assert!(passed);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["id"], 3);
    assert_eq!(unsafe { tf_suite_run(7, 11, &mut out, ptr::null_mut()) }, TfStatus::OutOfRange);
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(tf_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
