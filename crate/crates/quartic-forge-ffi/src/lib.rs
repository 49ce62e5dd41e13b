//! C ABI over the certification pipeline.
//!
//! All functions are panic-safe: a caught panic is reported as an internal
//! error. Strings returned through out-parameters are owned by the caller
//! and must be released with `qf_string_free`; report handles are released
//! with `qf_report_free`. `qf_last_error` exposes the most recent failure
//! message for the calling thread.

use quartic_forge::forms::{branch_sextic, cubic_basis, OrbitB};
use quartic_forge::pipeline::{
    replay_certificate, report_json, run_pipeline, CertificateReport, PipelineConfig,
    VERDICT_CERTIFIED,
};
use quartic_forge::poly::UniPoly;
use quartic_forge::Error;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of a call across the C boundary.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QfStatus {
    /// The call succeeded; for `qf_certify` the verdict is END_Z_CERTIFIED.
    Ok = 0,
    /// The pipeline ran but at least one hypothesis was not certified.
    NotCertified = 1,
    /// The input was rejected (parse error, wrong degree, inseparable,
    /// reducible, bad UTF-8 or bad JSON).
    InputError = 2,
    /// An internal invariant, validation, or replay check failed.
    InternalError = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
}

/// Opaque certification report handle.
pub struct QfReport {
    report: CertificateReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let sanitized: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).ok();
    });
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn status_for(e: &Error) -> QfStatus {
    match e {
        Error::Parse(_)
        | Error::Input(_)
        | Error::NotMonic
        | Error::Inseparable
        | Error::Reducible(_)
        | Error::Io(_)
        | Error::Json(_) => QfStatus::InputError,
        _ => QfStatus::InternalError,
    }
}

fn fail(e: &Error) -> QfStatus {
    set_last_error(&e.to_string());
    status_for(e)
}

/// Runs `body` with panics converted to `InternalError`.
fn guarded(body: impl FnOnce() -> QfStatus) -> QfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic");
            QfStatus::InternalError
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string or null.
unsafe fn required_str<'a>(text: *const c_char) -> Result<&'a str, QfStatus> {
    if text.is_null() {
        set_last_error("null pointer argument");
        return Err(QfStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_last_error("argument is not valid UTF-8");
        QfStatus::InputError
    })
}

fn export_string(text: String, out: *mut *mut c_char) -> QfStatus {
    let sanitized: String = text.chars().filter(|&c| c != '\0').collect();
    match CString::new(sanitized) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            QfStatus::Ok
        }
        Err(_) => {
            set_last_error("string contains interior NUL");
            QfStatus::InternalError
        }
    }
}

/// Certifies `poly` (degree 7, written in one variable, e.g. "t^7 - t - 1")
/// and stores a report handle in `out_report` on any completed run.
///
/// Returns `Ok` when the verdict is END_Z_CERTIFIED, `NotCertified` when the
/// pipeline completed with a failed stage (a report is still produced), and
/// an error status with no report otherwise. Pass 0 for `prime_bound`,
/// `five_part_budget`, or `seed` to use the defaults.
///
/// # Safety
/// `poly` must be a valid NUL-terminated string; `out_report` must be a
/// valid pointer. The returned handle must be released with
/// `qf_report_free`.
#[no_mangle]
pub unsafe extern "C" fn qf_certify(
    poly: *const c_char,
    prime_bound: u64,
    five_part_budget: u64,
    seed: u64,
    out_report: *mut *mut QfReport,
) -> QfStatus {
    guarded(|| {
        if out_report.is_null() {
            set_last_error("null pointer argument");
            return QfStatus::NullArgument;
        }
        *out_report = ptr::null_mut();
        let poly = match required_str(poly) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let mut config = PipelineConfig::default();
        if prime_bound > 0 {
            config.prime_bound = prime_bound;
        }
        if five_part_budget > 0 {
            config.five_part_budget = five_part_budget as usize;
        }
        config.seed = seed;
        let f = match UniPoly::parse(poly) {
            Ok(f) => f,
            Err(e) => return fail(&e),
        };
        let report = match run_pipeline(&f, &config) {
            Ok(report) => report,
            Err(e) => return fail(&e),
        };
        let certified = report.verdict == VERDICT_CERTIFIED;
        *out_report = Box::into_raw(Box::new(QfReport { report }));
        clear_last_error();
        if certified {
            QfStatus::Ok
        } else {
            QfStatus::NotCertified
        }
    })
}

/// Renders a report as JSON into `out_json`.
///
/// # Safety
/// `report` must be a live handle from `qf_certify`; `out_json` must be a
/// valid pointer. The string is released with `qf_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qf_report_json(
    report: *const QfReport,
    out_json: *mut *mut c_char,
) -> QfStatus {
    guarded(|| {
        if report.is_null() || out_json.is_null() {
            set_last_error("null pointer argument");
            return QfStatus::NullArgument;
        }
        export_string(report_json(&(*report).report), out_json)
    })
}

/// Copies the report's final verdict ("END_Z_CERTIFIED" or
/// "HYPOTHESES_NOT_CERTIFIED") into `out_verdict`.
///
/// # Safety
/// `report` must be a live handle from `qf_certify`; `out_verdict` must be
/// a valid pointer. The string is released with `qf_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qf_report_verdict(
    report: *const QfReport,
    out_verdict: *mut *mut c_char,
) -> QfStatus {
    guarded(|| {
        if report.is_null() || out_verdict.is_null() {
            set_last_error("null pointer argument");
            return QfStatus::NullArgument;
        }
        export_string((*report).report.verdict.clone(), out_verdict)
    })
}

/// Re-verifies a JSON report produced by `qf_report_json` (or the CLI)
/// without re-running the prime scan. Returns `Ok` when every recorded
/// witness checks out; on failure `qf_last_error` names the stage.
///
/// # Safety
/// `report_json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn qf_replay_json(report_json: *const c_char) -> QfStatus {
    guarded(|| {
        let text = match required_str(report_json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let report: CertificateReport = match serde_json::from_str(text) {
            Ok(report) => report,
            Err(e) => return fail(&Error::Json(e)),
        };
        match replay_certificate(&report, None) {
            Ok(()) => {
                clear_last_error();
                QfStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Computes the cubic basis u, v, w and the branch sextic of `poly` and
/// stores them as a JSON object of display strings.
///
/// # Safety
/// `poly` must be a valid NUL-terminated string; `out_json` must be a valid
/// pointer. The string is released with `qf_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qf_forms_json(
    poly: *const c_char,
    out_json: *mut *mut c_char,
) -> QfStatus {
    guarded(|| {
        if out_json.is_null() {
            set_last_error("null pointer argument");
            return QfStatus::NullArgument;
        }
        let poly = match required_str(poly) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let built = (|| -> quartic_forge::Result<String> {
            let f = UniPoly::parse(poly)?;
            let orbit = OrbitB::new(&f)?;
            let basis = cubic_basis(&orbit)?;
            let sextic = branch_sextic(&basis)?;
            let body = serde_json::json!({
                "u": basis.u.to_string(),
                "v": basis.v.to_string(),
                "w": basis.w.to_string(),
                "branch_sextic": sextic.to_string(),
            });
            Ok(serde_json::to_string_pretty(&body)?)
        })();
        match built {
            Ok(text) => {
                clear_last_error();
                export_string(text, out_json)
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a report handle. Null is a no-op.
///
/// # Safety
/// `report` must be null or a handle from `qf_certify` that has not been
/// freed already.
#[no_mangle]
pub unsafe extern "C" fn qf_report_free(report: *mut QfReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string produced by this library. Null is a no-op.
///
/// # Safety
/// `text` must be null or a string returned through one of the out-string
/// parameters, not freed already.
#[no_mangle]
pub unsafe extern "C" fn qf_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Returns the calling thread's most recent error message, or null when the
/// last call succeeded. The pointer is valid until the next call into this
/// library from the same thread; do not free it.
#[no_mangle]
pub extern "C" fn qf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |message| message.as_ptr())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cstring(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    unsafe fn take_string(ptr: *mut c_char) -> String {
        let text = CStr::from_ptr(ptr).to_str().unwrap().to_string();
        qf_string_free(ptr);
        text
    }

    #[test]
    fn certify_report_replay_round_trip() {
        unsafe {
            let poly = cstring("t^7 - t - 1");
            let mut report: *mut QfReport = ptr::null_mut();
            let status = qf_certify(poly.as_ptr(), 0, 0, 0, &mut report);
            assert_eq!(status, QfStatus::Ok);
            assert!(!report.is_null());

            let mut verdict: *mut c_char = ptr::null_mut();
            assert_eq!(qf_report_verdict(report, &mut verdict), QfStatus::Ok);
            assert_eq!(take_string(verdict), "END_Z_CERTIFIED");

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(qf_report_json(report, &mut json), QfStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"schema_version\": 1"));

            let c_text = cstring(&text);
            assert_eq!(qf_replay_json(c_text.as_ptr()), QfStatus::Ok);

            // A corrupted verdict must fail replay with a named stage.
            let tampered = text.replace(
                "\"verdict\": \"END_Z_CERTIFIED\"",
                "\"verdict\": \"HYPOTHESES_NOT_CERTIFIED\"",
            );
            assert_ne!(tampered, text);
            let c_tampered = cstring(&tampered);
            assert_eq!(qf_replay_json(c_tampered.as_ptr()), QfStatus::InternalError);
            let message = CStr::from_ptr(qf_last_error()).to_str().unwrap();
            assert!(message.contains("verdict_consistency"), "{message}");

            qf_report_free(report);
        }
    }

    #[test]
    fn not_certified_still_yields_a_report() {
        unsafe {
            let poly = cstring("t^7 - 2");
            let mut report: *mut QfReport = ptr::null_mut();
            let status = qf_certify(poly.as_ptr(), 500, 25, 0, &mut report);
            assert_eq!(status, QfStatus::NotCertified);
            assert!(!report.is_null());
            let mut verdict: *mut c_char = ptr::null_mut();
            assert_eq!(qf_report_verdict(report, &mut verdict), QfStatus::Ok);
            assert_eq!(take_string(verdict), "HYPOTHESES_NOT_CERTIFIED");
            qf_report_free(report);
        }
    }

    #[test]
    fn input_errors_are_classified() {
        unsafe {
            let mut report: *mut QfReport = ptr::null_mut();

            let reducible = cstring("t^7 + t");
            let status = qf_certify(reducible.as_ptr(), 0, 0, 0, &mut report);
            assert_eq!(status, QfStatus::InputError);
            assert!(report.is_null());
            let message = CStr::from_ptr(qf_last_error()).to_str().unwrap();
            assert!(message.contains("REDUCIBLE"));

            let garbage = cstring("not a polynomial @@");
            assert_eq!(
                qf_certify(garbage.as_ptr(), 0, 0, 0, &mut report),
                QfStatus::InputError
            );

            assert_eq!(
                qf_certify(ptr::null(), 0, 0, 0, &mut report),
                QfStatus::NullArgument
            );
            let poly = cstring("t^7 - t - 1");
            assert_eq!(
                qf_certify(poly.as_ptr(), 0, 0, 0, ptr::null_mut()),
                QfStatus::NullArgument
            );
        }
    }

    #[test]
    fn forms_json_matches_the_library() {
        unsafe {
            let poly = cstring("t^7 - t - 1");
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(qf_forms_json(poly.as_ptr(), &mut json), QfStatus::Ok);
            let parsed: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(parsed["v"], "x^2*y - y*z^2 - z^3");
            assert_eq!(parsed["w"], "x^3 - x*z^2 - y^2*z");
            assert_eq!(parsed["u"], "x*z^2 - y^3");
        }
    }

    #[test]
    fn last_error_is_null_after_success() {
        unsafe {
            let poly = cstring("t^7 + t");
            let mut report: *mut QfReport = ptr::null_mut();
            qf_certify(poly.as_ptr(), 0, 0, 0, &mut report);
            assert!(!qf_last_error().is_null());

            let good = cstring("t^7 - t - 1");
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(qf_forms_json(good.as_ptr(), &mut json), QfStatus::Ok);
            qf_string_free(json);
            assert!(qf_last_error().is_null());
        }
    }
}
