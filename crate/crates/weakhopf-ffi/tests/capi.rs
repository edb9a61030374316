//! Exercise the C ABI the way a foreign caller would: CStrings in, status
//! codes and owned strings out, explicit frees.

use std::ffi::{CStr, CString};
use std::ptr;

use weakhopf_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    whf_string_free(p);
    s
}

#[test]
fn gallery_verify_wreath_lifecycle() {
    unsafe {
        let mut spec: *mut WhfSpec = ptr::null_mut();
        let st = whf_gallery(
            c("blown-up-nothing").as_ptr(),
            c("2").as_ptr(),
            ptr::null(),
            &mut spec,
        );
        assert_eq!(st, WhfStatus::Ok);
        assert!(!spec.is_null());

        let mut report: *mut std::ffi::c_char = ptr::null_mut();
        let st = whf_verify(spec, c("blowup").as_ptr(), &mut report);
        assert_eq!(st, WhfStatus::Ok);
        let report_text = take_string(report);
        assert!(report_text.contains("\"pass\": true"));

        let mut product: *mut WhfSpec = ptr::null_mut();
        let mut wreport: *mut std::ffi::c_char = ptr::null_mut();
        let st = whf_wreath(
            spec,
            c("blowup").as_ptr(),
            false,
            &mut product,
            &mut wreport,
        );
        assert_eq!(st, WhfStatus::Ok);
        let wreport_text = take_string(wreport);
        assert!(wreport_text.contains("retraction_comultiplicative"));

        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(whf_spec_to_json(product, &mut json), WhfStatus::Ok);
        let json_text = take_string(json);
        assert!(json_text.contains("\"product\""));

        // the emitted product re-verifies through the ABI
        let mut reparsed: *mut WhfSpec = ptr::null_mut();
        assert_eq!(
            whf_spec_parse(c(&json_text).as_ptr(), &mut reparsed),
            WhfStatus::Ok
        );
        let mut report2: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(
            whf_verify(reparsed, c("product").as_ptr(), &mut report2),
            WhfStatus::Ok
        );
        whf_string_free(report2);

        whf_spec_free(reparsed);
        whf_spec_free(product);
        whf_spec_free(spec);
    }
}

#[test]
fn axiom_failures_map_to_status_one() {
    unsafe {
        // corrupt a multiplication coefficient in a known-good file
        let mut spec: *mut WhfSpec = ptr::null_mut();
        assert_eq!(
            whf_gallery(
                c("matrix").as_ptr(),
                c("2").as_ptr(),
                c("Q").as_ptr(),
                &mut spec
            ),
            WhfStatus::Ok
        );
        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        whf_spec_to_json(spec, &mut json);
        let text =
            take_string(json).replace("\"basis\"", "\"_ignored\": [[1,2,3,\"1\"]], \"basis\"");
        // a spurious mu entry breaking associativity
        let broken = text.replacen("\"mu\": [", "\"mu\": [\n        [1, 2, 3, \"1\"],", 1);
        let mut bad: *mut WhfSpec = ptr::null_mut();
        assert_eq!(whf_spec_parse(c(&broken).as_ptr(), &mut bad), WhfStatus::Ok);
        let mut report: *mut std::ffi::c_char = ptr::null_mut();
        let st = whf_verify(bad, c("m2").as_ptr(), &mut report);
        assert_eq!(st, WhfStatus::AxiomFailure);
        let report_text = take_string(report);
        assert!(report_text.contains("\"pass\": false"));
        whf_spec_free(bad);
        whf_spec_free(spec);
    }
}

#[test]
fn input_errors_and_messages() {
    unsafe {
        let mut spec: *mut WhfSpec = ptr::null_mut();
        assert_eq!(
            whf_spec_parse(c("{ not json").as_ptr(), &mut spec),
            WhfStatus::InputError
        );
        assert!(spec.is_null());
        let msg = CStr::from_ptr(whf_last_error()).to_str().unwrap();
        assert!(msg.contains("parse error"));

        assert_eq!(
            whf_gallery(c("nonsense").as_ptr(), ptr::null(), ptr::null(), &mut spec),
            WhfStatus::InputError
        );

        assert_eq!(
            whf_spec_parse(ptr::null(), &mut spec),
            WhfStatus::BadPointer
        );

        let version = CStr::from_ptr(whf_version()).to_str().unwrap();
        assert!(!version.is_empty());
    }
}

#[test]
fn generated_header_is_checked_in_and_fresh() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/weakhopf.h"))
        .expect("include/weakhopf.h exists (generated at build time)");
    for symbol in [
        "whf_spec_parse",
        "whf_spec_load",
        "whf_spec_to_json",
        "whf_spec_free",
        "whf_verify",
        "whf_wreath",
        "whf_gallery",
        "whf_string_free",
        "whf_last_error",
        "whf_version",
        "WhfStatus",
        "WhfSpec",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
