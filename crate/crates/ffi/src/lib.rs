//! C ABI over the toolkit: opaque handles for functions and certificates,
//! status codes, and UTF-8 text in and out.
//!
//! Ownership rules: every `*_parse`/`*_solve` that succeeds hands the caller
//! a handle to release with the matching `*_free`; every returned string is
//! released with [`oneq_string_free`]. Handles are never mutated after
//! creation, so they may be shared across threads. The per-thread message
//! from [`oneq_last_error_message`] describes the most recent failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use oneq_core::boolfn::PartialBooleanFunction;
use oneq_core::classify;
use oneq_core::error::Error;
use oneq_core::feasibility::{
    build_constraints, solve_feasibility, verify_certificate, FeasibilityOutcome,
    WeightCertificate,
};
use oneq_core::rational::format_frac;
use oneq_core::simulator::simulate_with_certificate;
use oneq_core::witness::{build_gram_witness, evaluate_g};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OneqStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DimensionMismatch = 4,
    InvalidArgument = 5,
    /// The function admits no exact one-query algorithm; not an error, but
    /// no certificate handle is produced.
    NotOneQuery = 6,
    InternalError = 7,
}

/// Opaque handle to a parsed partial Boolean function.
pub struct OneqFunction(PartialBooleanFunction);

/// Opaque handle to a weight certificate.
pub struct OneqCertificate(WeightCertificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(e: &Error) -> OneqStatus {
    match e {
        Error::Parse { .. } | Error::EmptyDomain => OneqStatus::ParseError,
        Error::DimensionMismatch { .. } => OneqStatus::DimensionMismatch,
        Error::InvalidCertificate(_)
        | Error::InvalidParameter(_)
        | Error::BudgetExceeded { .. }
        | Error::OrthogonalityViolation { .. } => OneqStatus::InvalidArgument,
        Error::NonProjector(_) | Error::Internal(_) | Error::Io(_) => OneqStatus::InternalError,
    }
}

fn fail(e: &Error) -> OneqStatus {
    set_error(e.to_string());
    status_of(e)
}

/// # Safety
/// `p` must be null or a NUL-terminated string valid for the duration of the
/// call.
unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, OneqStatus> {
    if p.is_null() {
        set_error("null string argument".into());
        return Err(OneqStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into());
        OneqStatus::InvalidUtf8
    })
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the most recent failure on this thread, or null. The
/// caller frees it with [`oneq_string_free`].
#[no_mangle]
pub extern "C" fn oneq_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |msg| string_out(msg.to_string_lossy().into_owned()))
    })
}

/// Frees a string returned by this library. Null is accepted.
///
/// # Safety
/// `s` must have been returned by a function of this library and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn oneq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a function file (UTF-8 text) into a handle stored in `*out`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to write a handle into.
#[no_mangle]
pub unsafe extern "C" fn oneq_function_parse(
    text: *const c_char,
    out: *mut *mut OneqFunction,
) -> OneqStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return OneqStatus::NullArgument;
    }
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match PartialBooleanFunction::parse(text) {
        Ok(f) => {
            *out = Box::into_raw(Box::new(OneqFunction(f)));
            OneqStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a function handle. Null is accepted.
///
/// # Safety
/// `f` must have come from [`oneq_function_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn oneq_function_free(f: *mut OneqFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oneq_function_arity(f: *const OneqFunction) -> usize {
    f.as_ref().map_or(0, |f| f.0.n())
}

/// Number of domain points, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oneq_function_domain_size(f: *const OneqFunction) -> usize {
    f.as_ref().map_or(0, |f| f.0.len())
}

/// Serializes a function back to the file format. The caller frees the
/// string.
///
/// # Safety
/// `f` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn oneq_function_to_text(f: *const OneqFunction) -> *mut c_char {
    f.as_ref()
        .map_or(ptr::null_mut(), |f| string_out(f.0.serialize()))
}

/// Decides one-query computability, writing the verdict into `*one_query`.
///
/// # Safety
/// `f` must be a live handle; `one_query` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn oneq_check(f: *const OneqFunction, one_query: *mut bool) -> OneqStatus {
    let (Some(f), false) = (f.as_ref(), one_query.is_null()) else {
        set_error("null argument".into());
        return OneqStatus::NullArgument;
    };
    match classify::is_one_query(&f.0) {
        Ok(c) => {
            *one_query = c.decision == classify::Decision::OneQuery;
            OneqStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Solves for a weight certificate. On success stores a certificate handle
/// in `*out`; returns `NotOneQuery` (with the contradiction trace as the
/// last error message) when the function is not one-query.
///
/// # Safety
/// `f` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn oneq_solve_certificate(
    f: *const OneqFunction,
    out: *mut *mut OneqCertificate,
) -> OneqStatus {
    let (Some(f), false) = (f.as_ref(), out.is_null()) else {
        set_error("null argument".into());
        return OneqStatus::NullArgument;
    };
    match solve_feasibility(&build_constraints(&f.0)) {
        FeasibilityOutcome::Feasible(certificate) => {
            *out = Box::into_raw(Box::new(OneqCertificate(certificate)));
            OneqStatus::Ok
        }
        FeasibilityOutcome::Infeasible(trace) => {
            set_error(trace.to_string());
            OneqStatus::NotOneQuery
        }
    }
}

/// Parses a certificate file into a handle stored in `*out`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid for a
/// write.
#[no_mangle]
pub unsafe extern "C" fn oneq_certificate_parse(
    text: *const c_char,
    out: *mut *mut OneqCertificate,
) -> OneqStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return OneqStatus::NullArgument;
    }
    let text = match text_arg(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match WeightCertificate::parse(text) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(OneqCertificate(c)));
            OneqStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a certificate handle. Null is accepted.
///
/// # Safety
/// `c` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn oneq_certificate_free(c: *mut OneqCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of variables covered by the certificate (`n`), or 0 for null.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oneq_certificate_arity(c: *const OneqCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.0.n())
}

/// Serializes a certificate to the certificate file format. The caller
/// frees the string.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn oneq_certificate_to_text(c: *const OneqCertificate) -> *mut c_char {
    c.as_ref()
        .map_or(ptr::null_mut(), |c| string_out(c.0.serialize()))
}

/// Verifies a certificate against a function, writing the verdict into
/// `*ok`.
///
/// # Safety
/// `f` and `c` must be live handles; `ok` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn oneq_verify_certificate(
    f: *const OneqFunction,
    c: *const OneqCertificate,
    ok: *mut bool,
) -> OneqStatus {
    let (Some(f), Some(c), false) = (f.as_ref(), c.as_ref(), ok.is_null()) else {
        set_error("null argument".into());
        return OneqStatus::NullArgument;
    };
    match verify_certificate(&f.0, &c.0) {
        Ok(v) => {
            *ok = v;
            OneqStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Evaluates `g(x) = <x_D|P|x_D>` exactly for the bit string `bits`
/// (for example "0110") and stores the rational as text `p/q` in `*value`.
/// The caller frees the string.
///
/// # Safety
/// `f` and `c` must be live handles; `bits` a valid NUL-terminated string;
/// `value` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn oneq_evaluate_g(
    f: *const OneqFunction,
    c: *const OneqCertificate,
    bits: *const c_char,
    value: *mut *mut c_char,
) -> OneqStatus {
    let (Some(f), Some(c), false) = (f.as_ref(), c.as_ref(), value.is_null()) else {
        set_error("null argument".into());
        return OneqStatus::NullArgument;
    };
    let bits = match text_arg(bits) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let x = match bits.parse::<oneq_core::boolfn::BitString>() {
        Ok(x) => x,
        Err(e) => return fail(&e),
    };
    if x.n() != f.0.n() || f.0.n() != c.0.n() {
        return fail(&Error::DimensionMismatch {
            expected: f.0.n(),
            got: if x.n() != f.0.n() { x.n() } else { c.0.n() },
        });
    }
    match build_gram_witness(&f.0, &c.0) {
        Ok(w) => {
            *value = string_out(format_frac(&evaluate_g(&w, &x)));
            OneqStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Runs the one-query algorithm over the whole domain, writing the largest
/// deviation from `f` into `*max_deviation` and whether every input stayed
/// within `tolerance` into `*all_pass`.
///
/// # Safety
/// `f` and `c` must be live handles; `max_deviation` and `all_pass` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn oneq_simulate(
    f: *const OneqFunction,
    c: *const OneqCertificate,
    tolerance: f64,
    max_deviation: *mut f64,
    all_pass: *mut bool,
) -> OneqStatus {
    let (Some(f), Some(c)) = (f.as_ref(), c.as_ref()) else {
        set_error("null argument".into());
        return OneqStatus::NullArgument;
    };
    if max_deviation.is_null() || all_pass.is_null() {
        set_error("null output pointer".into());
        return OneqStatus::NullArgument;
    }
    if f.0.n() != c.0.n() {
        return fail(&Error::DimensionMismatch {
            expected: f.0.n(),
            got: c.0.n(),
        });
    }
    match simulate_with_certificate(&f.0, &c.0, tolerance) {
        Ok(report) => {
            *max_deviation = report.max_deviation;
            *all_pass = report.all_pass();
            OneqStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Smallest multilinear degree agreeing with the function on its domain,
/// written into `*degree`.
///
/// # Safety
/// `f` must be a live handle; `degree` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn oneq_min_degree(
    f: *const OneqFunction,
    degree: *mut usize,
) -> OneqStatus {
    let (Some(f), false) = (f.as_ref(), degree.is_null()) else {
        set_error("null argument".into());
        return OneqStatus::NullArgument;
    };
    match classify::min_degree(&f.0, f.0.n()) {
        Ok(classify::DegreeBound::Exact(d)) => {
            *degree = d;
            OneqStatus::Ok
        }
        Ok(classify::DegreeBound::ExceedsCap(_)) => {
            set_error("degree search failed at the full cap".into());
            OneqStatus::InternalError
        }
        Err(e) => fail(&e),
    }
}
