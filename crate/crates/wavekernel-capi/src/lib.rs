//! C ABI over the verification library.
//!
//! Every entry point is panic-safe and returns a `WkStatus`; reports
//! travel as opaque handles. Strings handed to the caller are
//! NUL-terminated UTF-8 allocated by this library and must be released
//! with `wk_string_free`; handles with `wk_report_free`. The config
//! JSON accepted by `wk_run` uses the same schema as the command-line
//! config file.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use wavekernel::report::{ReportDocument, TOOL_VERSION};
use wavekernel::suites::{self, SuiteConfig};

/// Status codes returned by the fallible entry points.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ConfigError = 3,
    UnknownCheck = 4,
    Internal = 5,
}

/// An assembled verification report behind an opaque handle.
pub struct WkReport {
    inner: ReportDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error text contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn export_string(text: String, out: *mut *mut c_char) -> WkStatus {
    match CString::new(text) {
        Ok(c) => {
            // SAFETY: callers validate `out` before reaching this point.
            unsafe { *out = c.into_raw() };
            WkStatus::Ok
        }
        Err(_) => {
            set_last_error("output contained a NUL byte".to_owned());
            WkStatus::Internal
        }
    }
}

/// Version of the underlying verification library, as a static string.
/// The pointer is owned by the library and must not be freed.
#[no_mangle]
pub extern "C" fn wk_version() -> *const c_char {
    static VERSION: OnceLock<CString> = OnceLock::new();
    VERSION
        .get_or_init(|| CString::new(TOOL_VERSION).expect("version string has no NUL"))
        .as_ptr()
}

/// Message describing the most recent failure on this thread, or null
/// when the last call succeeded. The pointer stays valid until the next
/// library call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn wk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |text| text.as_ptr())
    })
}

/// Runs the configured check suites and stores a report handle in
/// `out_report`. A null or blank `config_json` runs every suite with
/// the built-in fixtures. On any non-`Ok` status the handle is null and
/// `wk_last_error_message` carries the detail.
///
/// # Safety
/// `config_json`, when non-null, must point to a NUL-terminated string
/// that stays valid for the duration of the call. `out_report` must be
/// a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wk_run(
    config_json: *const c_char,
    out_report: *mut *mut WkReport,
) -> WkStatus {
    if out_report.is_null() {
        return WkStatus::NullArgument;
    }
    *out_report = ptr::null_mut();
    let config = if config_json.is_null() {
        SuiteConfig::default()
    } else {
        let Ok(text) = CStr::from_ptr(config_json).to_str() else {
            set_last_error("config is not valid UTF-8".to_owned());
            return WkStatus::InvalidUtf8;
        };
        if text.trim().is_empty() {
            SuiteConfig::default()
        } else {
            match serde_json::from_str(text) {
                Ok(config) => config,
                Err(e) => {
                    set_last_error(format!("cannot parse config: {e}"));
                    return WkStatus::ConfigError;
                }
            }
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        let plan = suites::resolve(&config)?;
        Ok(suites::run(&plan))
    }));
    match outcome {
        Ok(Ok(report)) => {
            clear_last_error();
            *out_report = Box::into_raw(Box::new(WkReport { inner: report }));
            WkStatus::Ok
        }
        Ok(Err(e)) => {
            let e: suites::ConfigError = e;
            set_last_error(e.to_string());
            WkStatus::ConfigError
        }
        Err(_) => {
            set_last_error("internal panic".to_owned());
            WkStatus::Internal
        }
    }
}

/// Number of checks in the report; 0 for a null handle.
///
/// # Safety
/// `report`, when non-null, must be a live handle from `wk_run`.
#[no_mangle]
pub unsafe extern "C" fn wk_report_total(report: *const WkReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).inner.summary.total
}

/// Number of failed checks; 0 for a null handle.
///
/// # Safety
/// `report`, when non-null, must be a live handle from `wk_run`.
#[no_mangle]
pub unsafe extern "C" fn wk_report_failed(report: *const WkReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).inner.summary.failed
}

/// True when every check in the report passed; false for a null handle.
///
/// # Safety
/// `report`, when non-null, must be a live handle from `wk_run`.
#[no_mangle]
pub unsafe extern "C" fn wk_report_all_passed(report: *const WkReport) -> bool {
    if report.is_null() {
        return false;
    }
    (*report).inner.all_passed()
}

/// Serializes the report as deterministic pretty-printed JSON into
/// `out_json`. Free the string with `wk_string_free`.
///
/// # Safety
/// `report` must be a live handle from `wk_run`; `out_json` must be a
/// valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wk_report_to_json(
    report: *const WkReport,
    out_json: *mut *mut c_char,
) -> WkStatus {
    if report.is_null() || out_json.is_null() {
        return WkStatus::NullArgument;
    }
    *out_json = ptr::null_mut();
    export_string((*report).inner.to_json(), out_json)
}

/// Renders the report as plain text into `out_text`. A non-negative
/// `decimal_digits` annotates rational witness values with decimal
/// approximations to that many digits; a negative value omits the
/// annotations. Free the string with `wk_string_free`.
///
/// # Safety
/// `report` must be a live handle from `wk_run`; `out_text` must be a
/// valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wk_report_render_text(
    report: *const WkReport,
    decimal_digits: i32,
    out_text: *mut *mut c_char,
) -> WkStatus {
    if report.is_null() || out_text.is_null() {
        return WkStatus::NullArgument;
    }
    *out_text = ptr::null_mut();
    let digits = usize::try_from(decimal_digits).ok();
    export_string((*report).inner.render_text(digits), out_text)
}

/// Looks up a check id and stores a one-line description
/// `suite/check_id: summary` into `out_text`. Free the string with
/// `wk_string_free`.
///
/// # Safety
/// `check_id` must point to a NUL-terminated string valid for the
/// duration of the call; `out_text` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wk_describe_check(
    check_id: *const c_char,
    out_text: *mut *mut c_char,
) -> WkStatus {
    if check_id.is_null() || out_text.is_null() {
        return WkStatus::NullArgument;
    }
    *out_text = ptr::null_mut();
    let Ok(id) = CStr::from_ptr(check_id).to_str() else {
        set_last_error("check id is not valid UTF-8".to_owned());
        return WkStatus::InvalidUtf8;
    };
    match suites::describe_check(id) {
        Some((suite, id, summary)) => export_string(format!("{suite}/{id}: {summary}"), out_text),
        None => {
            set_last_error(format!("unknown check id `{id}`"));
            WkStatus::UnknownCheck
        }
    }
}

/// Releases a report handle. Null is ignored.
///
/// # Safety
/// `report` must be a handle from `wk_run` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wk_report_free(report: *mut WkReport) {
    if report.is_null() {
        return;
    }
    // SAFETY: caller guarantees the handle came from wk_run.
    drop(Box::from_raw(report));
}

/// Releases a string produced by this library. Null is ignored.
///
/// # Safety
/// `s` must be a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wk_string_free(s: *mut c_char) {
    if s.is_null() {
        return;
    }
    // SAFETY: caller guarantees the string came from this library.
    drop(CString::from_raw(s));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(config: Option<&str>) -> (WkStatus, *mut WkReport) {
        let holder = config.map(|c| CString::new(c).unwrap());
        let ptr_in = holder.as_ref().map_or(ptr::null(), |c| c.as_ptr());
        let mut report = ptr::null_mut();
        let status = unsafe { wk_run(ptr_in, &mut report) };
        (status, report)
    }

    fn take_string(raw: *mut c_char) -> String {
        assert!(!raw.is_null());
        let text = unsafe { CStr::from_ptr(raw) }.to_str().unwrap().to_owned();
        unsafe { wk_string_free(raw) };
        text
    }

    #[test]
    fn default_run_passes_and_round_trips_json() {
        let (status, report) = run_with(None);
        assert_eq!(status, WkStatus::Ok);
        unsafe {
            assert!(wk_report_all_passed(report));
            assert!(wk_report_total(report) > 0);
            assert_eq!(wk_report_failed(report), 0);
            let mut json = ptr::null_mut();
            assert_eq!(wk_report_to_json(report, &mut json), WkStatus::Ok);
            let json = take_string(json);
            let direct = suites::run(&suites::resolve(&SuiteConfig::default()).unwrap());
            assert_eq!(json, direct.to_json());
            wk_report_free(report);
        }
    }

    #[test]
    fn config_selects_suites_and_errors_surface() {
        let (status, report) =
            run_with(Some(r#"{"suites": ["helicity"], "helicity_candidates": ["-1/2", "-1"]}"#));
        assert_eq!(status, WkStatus::Ok);
        unsafe {
            assert!(wk_report_all_passed(report));
            let mut text = ptr::null_mut();
            assert_eq!(wk_report_render_text(report, -1, &mut text), WkStatus::Ok);
            let text = take_string(text);
            assert!(text.contains("helicity/"));
            assert!(!text.contains("structure/"));
            wk_report_free(report);
        }

        let (status, report) = run_with(Some(r#"{"suites": ["bogus"]}"#));
        assert_eq!(status, WkStatus::ConfigError);
        assert!(report.is_null());
        let message = unsafe { CStr::from_ptr(wk_last_error_message()) };
        assert!(message.to_str().unwrap().contains("bogus"));

        let (status, _) = run_with(Some("not json"));
        assert_eq!(status, WkStatus::ConfigError);
    }

    #[test]
    fn describe_and_null_paths() {
        unsafe {
            let id = CString::new("proca.transversality").unwrap();
            let mut text = ptr::null_mut();
            assert_eq!(wk_describe_check(id.as_ptr(), &mut text), WkStatus::Ok);
            assert!(take_string(text).starts_with("systems/proca.transversality:"));

            let bogus = CString::new("bogus.id").unwrap();
            let mut text = ptr::null_mut();
            assert_eq!(
                wk_describe_check(bogus.as_ptr(), &mut text),
                WkStatus::UnknownCheck
            );
            assert!(text.is_null());

            assert_eq!(wk_run(ptr::null(), ptr::null_mut()), WkStatus::NullArgument);
            assert_eq!(wk_report_total(ptr::null()), 0);
            assert!(!wk_report_all_passed(ptr::null()));
            wk_report_free(ptr::null_mut());
            wk_string_free(ptr::null_mut());
            assert!(!wk_version().is_null());
        }
    }

    #[test]
    fn invalid_utf8_config_is_rejected() {
        let bytes: &[u8] = b"\xff\xfe\0";
        let raw = CStr::from_bytes_with_nul(bytes).unwrap();
        let mut report = ptr::null_mut();
        let status = unsafe { wk_run(raw.as_ptr(), &mut report) };
        assert_eq!(status, WkStatus::InvalidUtf8);
        assert!(report.is_null());
    }
}
