//! C ABI over the weakhopf library.
//!
//! Spec files are held behind the opaque handle [`WhfSpec`]; every function
//! returns a [`WhfStatus`] and writes results through out-parameters.
//! Strings returned through out-parameters are heap-allocated, UTF-8,
//! NUL-terminated, and must be released with [`whf_string_free`]. A
//! human-readable message for the most recent failure on the current thread
//! is available from [`whf_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use weakhopf::cli::{self, CliError};
use weakhopf::specfile::SpecFile;

/// Status code of every C-ABI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WhfStatus {
    /// Operation succeeded and every requested check passed.
    Ok = 0,
    /// Checks ran but at least one axiom failed; reports are still written.
    AxiomFailure = 1,
    /// Unusable input: parse error, unknown target, bad parameters.
    InputError = 2,
    /// A required pointer argument was NULL or not valid UTF-8.
    BadPointer = 3,
}

/// Opaque handle to a parsed spec file.
pub struct WhfSpec {
    file: SpecFile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let clean = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn error_status(e: &CliError) -> WhfStatus {
    set_error(e.message());
    match e.code() {
        1 => WhfStatus::AxiomFailure,
        _ => WhfStatus::InputError,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn give_string(out: *mut *mut c_char, s: String) {
    if out.is_null() {
        return;
    }
    let c = CString::new(s.replace('\0', " ")).unwrap_or_default();
    unsafe { *out = c.into_raw() };
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn whf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn whf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must have been produced by a `whf_` function, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn whf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Release a spec handle.
///
/// # Safety
/// `spec` must have been produced by this library, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn whf_spec_free(spec: *mut WhfSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

fn parse_into(text: &str, out: *mut *mut WhfSpec) -> WhfStatus {
    if out.is_null() {
        set_error("output handle pointer is NULL");
        return WhfStatus::BadPointer;
    }
    match SpecFile::parse_str(text) {
        Ok(file) => {
            unsafe { *out = Box::into_raw(Box::new(WhfSpec { file })) };
            WhfStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            unsafe { *out = ptr::null_mut() };
            WhfStatus::InputError
        }
    }
}

/// Parse a spec file from a JSON string into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn whf_spec_parse(json: *const c_char, out: *mut *mut WhfSpec) -> WhfStatus {
    let Some(text) = read_str(json) else {
        set_error("spec text pointer is NULL or not UTF-8");
        return WhfStatus::BadPointer;
    };
    parse_into(text, out)
}

/// Load and parse a spec file from disk.
///
/// # Safety
/// `path` must be a NUL-terminated UTF-8 string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn whf_spec_load(path: *const c_char, out: *mut *mut WhfSpec) -> WhfStatus {
    let Some(path) = read_str(path) else {
        set_error("path pointer is NULL or not UTF-8");
        return WhfStatus::BadPointer;
    };
    match std::fs::read_to_string(Path::new(path)) {
        Ok(text) => parse_into(&text, out),
        Err(e) => {
            set_error(&format!("{path}: {e}"));
            WhfStatus::InputError
        }
    }
}

/// Canonical JSON of a spec handle, written to `out_json`.
///
/// # Safety
/// `spec` must be a live handle; `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn whf_spec_to_json(
    spec: *const WhfSpec,
    out_json: *mut *mut c_char,
) -> WhfStatus {
    let Some(spec) = spec.as_ref() else {
        set_error("spec handle is NULL");
        return WhfStatus::BadPointer;
    };
    give_string(out_json, spec.file.to_json());
    WhfStatus::Ok
}

/// Run the checker stack for a named algebra or law; the JSON report is
/// written to `out_report` in either case.
///
/// # Safety
/// `spec` must be a live handle, `target` a NUL-terminated UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn whf_verify(
    spec: *const WhfSpec,
    target: *const c_char,
    out_report: *mut *mut c_char,
) -> WhfStatus {
    let Some(spec) = spec.as_ref() else {
        set_error("spec handle is NULL");
        return WhfStatus::BadPointer;
    };
    let Some(target) = read_str(target) else {
        set_error("target pointer is NULL or not UTF-8");
        return WhfStatus::BadPointer;
    };
    match cli::verify_target(&spec.file, target) {
        Ok(rep) => {
            give_string(out_report, rep.to_json());
            if rep.all_pass() {
                WhfStatus::Ok
            } else {
                set_error("axiom failures present; see report");
                WhfStatus::AxiomFailure
            }
        }
        Err(e) => error_status(&e),
    }
}

/// Build the wreath product of a named law. On success `out_product` holds
/// a new spec handle containing the product algebra and `out_report` the
/// combined verification/consistency report.
///
/// # Safety
/// `spec` must be a live handle, `law` a NUL-terminated UTF-8 string, and
/// `out_product` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn whf_wreath(
    spec: *const WhfSpec,
    law: *const c_char,
    with_antipode: bool,
    out_product: *mut *mut WhfSpec,
    out_report: *mut *mut c_char,
) -> WhfStatus {
    let Some(spec) = spec.as_ref() else {
        set_error("spec handle is NULL");
        return WhfStatus::BadPointer;
    };
    let Some(law) = read_str(law) else {
        set_error("law pointer is NULL or not UTF-8");
        return WhfStatus::BadPointer;
    };
    if out_product.is_null() {
        set_error("output handle pointer is NULL");
        return WhfStatus::BadPointer;
    }
    match cli::wreath_output(&spec.file, law, with_antipode) {
        Ok((rep, _basis, product)) => {
            give_string(out_report, rep.to_json());
            let ok = rep.all_pass();
            *out_product = Box::into_raw(Box::new(WhfSpec { file: product }));
            if ok {
                WhfStatus::Ok
            } else {
                set_error("axiom failures present; see report");
                WhfStatus::AxiomFailure
            }
        }
        Err(e) => {
            *out_product = ptr::null_mut();
            error_status(&e)
        }
    }
}

/// Construct a named gallery example. `params` is a space-separated
/// parameter list (may be empty or NULL), `field` one of `Q`, `F<p>`,
/// `Phi<N>`, `QExt:c0,c1,...` (NULL means `Q`).
///
/// # Safety
/// `name` must be a NUL-terminated UTF-8 string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn whf_gallery(
    name: *const c_char,
    params: *const c_char,
    field: *const c_char,
    out: *mut *mut WhfSpec,
) -> WhfStatus {
    let Some(name) = read_str(name) else {
        set_error("gallery name pointer is NULL or not UTF-8");
        return WhfStatus::BadPointer;
    };
    if out.is_null() {
        set_error("output handle pointer is NULL");
        return WhfStatus::BadPointer;
    }
    let params: Vec<String> = match params.is_null() {
        true => vec![],
        false => match read_str(params) {
            Some(p) => p.split_whitespace().map(String::from).collect(),
            None => {
                set_error("params pointer is not UTF-8");
                return WhfStatus::BadPointer;
            }
        },
    };
    let field_spec = if field.is_null() {
        "Q"
    } else {
        match read_str(field) {
            Some(f) => f,
            None => {
                set_error("field pointer is not UTF-8");
                return WhfStatus::BadPointer;
            }
        }
    };
    let field = match cli::parse_field_spec(field_spec) {
        Ok(f) => f,
        Err(e) => return error_status(&e),
    };
    match cli::gallery_spec(name, &params, &field) {
        Ok(file) => {
            *out = Box::into_raw(Box::new(WhfSpec { file }));
            WhfStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            error_status(&e)
        }
    }
}
