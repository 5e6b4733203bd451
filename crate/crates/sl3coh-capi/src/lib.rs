//! C ABI for the exact SL₃ flag-variety cohomology engine.
//!
//! All functions are panic-safe: panics are caught at the boundary and
//! reported as [`Sl3cohStatus::InternalError`].  Strings returned through
//! `char **` out-parameters are heap-allocated and must be released with
//! [`sl3coh_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sl3coh::cohomology::{Bundle, CharEngine};
use sl3coh::figure::render_figure;
use sl3coh::identities::{verify, verify_all};
use sl3coh::supportvar::support_variety;
use sl3coh::weights::Weight;
use sl3coh::Int;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Sl3cohStatus {
    /// The call succeeded.
    Ok = 0,
    /// A verification sweep ran to completion and found counterexamples.
    VerificationFailed = 1,
    /// An argument was rejected (bad prime, weight, degree, id, or pointer).
    InvalidArgument = 2,
    /// An internal invariant failed; the library state is still usable.
    InternalError = 3,
}

/// Opaque handle owning one memoized engine for a fixed prime.
pub struct Sl3cohEngine {
    chars: CharEngine,
}

fn write_string(out: *mut *mut c_char, text: String) -> Sl3cohStatus {
    let Ok(cstring) = CString::new(text) else {
        return Sl3cohStatus::InternalError;
    };
    unsafe { *out = cstring.into_raw() };
    Sl3cohStatus::Ok
}

fn guarded(out: *mut *mut c_char, body: impl FnOnce() -> Sl3cohStatus) -> Sl3cohStatus {
    if out.is_null() {
        return Sl3cohStatus::InvalidArgument;
    }
    unsafe { *out = ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => Sl3cohStatus::InternalError,
    }
}

/// Creates an engine for the prime `p` and stores it in `*out_engine`.
///
/// # Safety
/// `out_engine` must be a valid pointer.  On success the caller owns the
/// handle and must release it with [`sl3coh_engine_free`].
#[no_mangle]
pub unsafe extern "C" fn sl3coh_engine_new(
    p: i64,
    out_engine: *mut *mut Sl3cohEngine,
) -> Sl3cohStatus {
    if out_engine.is_null() {
        return Sl3cohStatus::InvalidArgument;
    }
    unsafe { *out_engine = ptr::null_mut() };
    match catch_unwind(|| CharEngine::new(p)) {
        Ok(Ok(chars)) => {
            let handle = Box::new(Sl3cohEngine { chars });
            unsafe { *out_engine = Box::into_raw(handle) };
            Sl3cohStatus::Ok
        }
        Ok(Err(_)) => Sl3cohStatus::InvalidArgument,
        Err(_) => Sl3cohStatus::InternalError,
    }
}

/// Releases an engine created by [`sl3coh_engine_new`].  `engine` may be null.
///
/// # Safety
/// `engine` must be a pointer previously returned by [`sl3coh_engine_new`]
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn sl3coh_engine_free(engine: *mut Sl3cohEngine) {
    if !engine.is_null() {
        drop(unsafe { Box::from_raw(engine) });
    }
}

/// Computes the cohomology table of the weight `(r, s)` twisted by `bundle`
/// (0 = plain, 1 = α, 2 = β) and stores it as JSON in `*out_json`.
///
/// # Safety
/// `engine` must be a live handle from [`sl3coh_engine_new`]; `out_json`
/// must be a valid pointer.  The returned string must be released with
/// [`sl3coh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl3coh_table_json(
    engine: *const Sl3cohEngine,
    r: i64,
    s: i64,
    bundle: i32,
    out_json: *mut *mut c_char,
) -> Sl3cohStatus {
    guarded(out_json, || {
        let Some(handle) = (unsafe { engine.as_ref() }) else {
            return Sl3cohStatus::InvalidArgument;
        };
        let bundle = match bundle {
            0 => Bundle::Plain,
            1 => Bundle::Alpha,
            2 => Bundle::Beta,
            _ => return Sl3cohStatus::InvalidArgument,
        };
        let weight = Weight::new(r as Int, s as Int);
        let table = handle.chars.table(weight, bundle);
        let value = serde_json::json!({
            "p": handle.chars.p(),
            "weight": weight,
            "bundle": bundle,
            "dimensions": table.dims(),
            "nonzero_degrees": table.nonzero_degrees(),
            "h": table.h,
        });
        write_string(out_json, value.to_string())
    })
}

/// Classifies the support variety of `H^i(r, s)` and stores the report as
/// JSON in `*out_json`.  A zero module reports `{"zero": true, ...}`.
///
/// # Safety
/// `engine` must be a live handle from [`sl3coh_engine_new`]; `out_json`
/// must be a valid pointer.  The returned string must be released with
/// [`sl3coh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl3coh_support_json(
    engine: *const Sl3cohEngine,
    r: i64,
    s: i64,
    degree: u32,
    out_json: *mut *mut c_char,
) -> Sl3cohStatus {
    guarded(out_json, || {
        let Some(handle) = (unsafe { engine.as_ref() }) else {
            return Sl3cohStatus::InvalidArgument;
        };
        let weight = Weight::new(r as Int, s as Int);
        match support_variety(&handle.chars, weight, degree as usize) {
            Ok(Some(report)) => {
                let text = serde_json::to_string(&report).expect("report serializes");
                write_string(out_json, text)
            }
            Ok(None) => {
                let value = serde_json::json!({
                    "p": handle.chars.p(),
                    "weight": weight,
                    "i": degree,
                    "zero": true,
                });
                write_string(out_json, value.to_string())
            }
            Err(_) => Sl3cohStatus::InvalidArgument,
        }
    })
}

/// Runs the verification law `prop` (or `"all"`) at the prime `p` over the
/// sweep box `|r|,|s| <= box_bound` (negative means the law's default) and
/// stores the report array as JSON in `*out_json`.
///
/// Returns [`Sl3cohStatus::VerificationFailed`] when every sweep ran but at
/// least one law reported counterexamples; the JSON is still written.
///
/// # Safety
/// `prop` must be a valid NUL-terminated string; `out_json` must be a valid
/// pointer.  The returned string must be released with
/// [`sl3coh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl3coh_verify_json(
    prop: *const c_char,
    p: i64,
    box_bound: i64,
    out_json: *mut *mut c_char,
) -> Sl3cohStatus {
    guarded(out_json, || {
        if prop.is_null() {
            return Sl3cohStatus::InvalidArgument;
        }
        let Ok(prop) = (unsafe { CStr::from_ptr(prop) }).to_str() else {
            return Sl3cohStatus::InvalidArgument;
        };
        let bound = if box_bound < 0 { None } else { Some(box_bound as Int) };
        let reports = if prop == "all" {
            verify_all(p, bound)
        } else {
            verify(prop, p, bound).map(|r| vec![r])
        };
        match reports {
            Ok(reports) => {
                let passed = reports.iter().all(|r| r.passed);
                let text = serde_json::to_string(&reports).expect("reports serialize");
                let status = write_string(out_json, text);
                if status == Sl3cohStatus::Ok && !passed {
                    Sl3cohStatus::VerificationFailed
                } else {
                    status
                }
            }
            Err(_) => Sl3cohStatus::InvalidArgument,
        }
    })
}

/// Renders the weight-lattice figure for the prime `p` as SVG and stores it
/// in `*out_svg`.  A negative `box_bound` selects the default; `degree`
/// picks the annotated cohomology degree.
///
/// # Safety
/// `out_svg` must be a valid pointer.  The returned string must be released
/// with [`sl3coh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl3coh_figure_svg(
    p: i64,
    box_bound: i64,
    degree: u32,
    out_svg: *mut *mut c_char,
) -> Sl3cohStatus {
    guarded(out_svg, || {
        let bound = if box_bound < 0 { None } else { Some(box_bound as Int) };
        match render_figure(p, bound, degree as usize) {
            Ok(svg) => write_string(out_svg, svg),
            Err(_) => Sl3cohStatus::InvalidArgument,
        }
    })
}

/// Releases a string returned by any of the `*_json` / `*_svg` functions.
/// `text` may be null.
///
/// # Safety
/// `text` must be a pointer previously returned by this library that has
/// not already been freed.
#[no_mangle]
pub unsafe extern "C" fn sl3coh_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
        unsafe { sl3coh_string_free(ptr) };
        text
    }

    #[test]
    fn engine_lifecycle_and_table() {
        let mut engine = ptr::null_mut();
        assert_eq!(unsafe { sl3coh_engine_new(5, &mut engine) }, Sl3cohStatus::Ok);
        let mut out = ptr::null_mut();
        let status = unsafe { sl3coh_table_json(engine, 5, -10, 0, &mut out) };
        assert_eq!(status, Sl3cohStatus::Ok);
        let text = take_string(out);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["dimensions"][1], 1);
        assert_eq!(value["dimensions"][2], 82);
        unsafe { sl3coh_engine_free(engine) };
    }

    #[test]
    fn rejects_bad_arguments() {
        let mut engine = ptr::null_mut();
        assert_eq!(unsafe { sl3coh_engine_new(4, &mut engine) }, Sl3cohStatus::InvalidArgument);
        assert!(engine.is_null());
        assert_eq!(unsafe { sl3coh_engine_new(5, &mut engine) }, Sl3cohStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { sl3coh_table_json(engine, 0, 0, 9, &mut out) },
            Sl3cohStatus::InvalidArgument
        );
        assert_eq!(
            unsafe { sl3coh_table_json(ptr::null(), 0, 0, 0, &mut out) },
            Sl3cohStatus::InvalidArgument
        );
        assert_eq!(
            unsafe { sl3coh_support_json(engine, 0, 0, 7, &mut out) },
            Sl3cohStatus::InvalidArgument
        );
        unsafe { sl3coh_engine_free(engine) };
        unsafe { sl3coh_engine_free(ptr::null_mut()) };
        unsafe { sl3coh_string_free(ptr::null_mut()) };
    }

    #[test]
    fn support_classes() {
        let mut engine = ptr::null_mut();
        assert_eq!(unsafe { sl3coh_engine_new(5, &mut engine) }, Sl3cohStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { sl3coh_support_json(engine, 5, -10, 1, &mut out) }, Sl3cohStatus::Ok);
        assert!(take_string(out).contains("NilpotentCone"));
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { sl3coh_support_json(engine, -1, 0, 1, &mut out) }, Sl3cohStatus::Ok);
        assert!(take_string(out).contains("\"zero\":true"));
        unsafe { sl3coh_engine_free(engine) };
    }

    #[test]
    fn verify_statuses() {
        let prop = CString::new("5.3").unwrap();
        let mut out = ptr::null_mut();
        let status = unsafe { sl3coh_verify_json(prop.as_ptr(), 5, 4, &mut out) };
        assert_eq!(status, Sl3cohStatus::Ok);
        let text = take_string(out);
        assert!(text.contains("\"passed\":true"));

        let unknown = CString::new("9.99").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { sl3coh_verify_json(unknown.as_ptr(), 5, 4, &mut out) },
            Sl3cohStatus::InvalidArgument
        );
        assert_eq!(
            unsafe { sl3coh_verify_json(ptr::null(), 5, 4, &mut out) },
            Sl3cohStatus::InvalidArgument
        );
    }

    #[test]
    fn figure_svg() {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { sl3coh_figure_svg(5, -1, 1, &mut out) }, Sl3cohStatus::Ok);
        let svg = take_string(out);
        assert!(svg.contains("data-weight=\"15,-20\""));
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { sl3coh_figure_svg(6, -1, 1, &mut out) },
            Sl3cohStatus::InvalidArgument
        );
    }
}
