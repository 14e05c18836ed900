//! C ABI over `farey-contact`.
//!
//! Every function returns an [`FcStatus`]. Results come back through out
//! parameters. Strings returned to the caller are owned by the caller and
//! released with [`fc_string_free`]; traces and verdicts are opaque handles
//! released with [`fc_trace_free`] and [`fc_verdict_free`]. After a non-zero
//! status, [`fc_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use farey_contact::bypass::{bypass_attach, AttachmentSide};
use farey_contact::curves::{apply, intersection, invert, CurveClass, MappingClass};
use farey_contact::slices::Verdict;
use farey_contact::slopes::{farey_path, Slope};
use farey_contact::trace::{Ledger, ProofTrace};
use farey_contact::verdict::{classify_surgery, mountain_range, walkthrough, Coefficient, LegendrianFigureEight};
use farey_contact::Error;

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed slope, curve, matrix or coefficient.
    Parse = 3,
    /// Valid input outside an operation's domain.
    Domain = 4,
    Overflow = 5,
    Json = 6,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 7,
    Panic = 8,
}

/// A proof trace.
pub struct FcTrace(ProofTrace);

/// A verdict together with the trace that justifies it.
pub struct FcVerdict {
    verdict: Verdict,
    trace: ProofTrace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> FcStatus {
    match e {
        Error::MalformedSlope(_)
        | Error::ZeroSlope
        | Error::MalformedCurve(_)
        | Error::ZeroCurve
        | Error::NotPrimitive(..)
        | Error::MalformedMatrix(_)
        | Error::MalformedStack(_)
        | Error::Usage(_) => FcStatus::Parse,
        Error::Overflow => FcStatus::Overflow,
        Error::Json(_) => FcStatus::Json,
        _ => FcStatus::Domain,
    }
}

enum Fail {
    Status(FcStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Fail {
        Fail::Lib(Error::Json(e))
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FcStatus::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            FcStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(FcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(FcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Status(FcStatus::Domain, "interior NUL".into()))?;
    put(out, c.into_raw(), "out")
}

/// Message for the last failed call on this thread, or null. Borrowed; valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// New dividing slope after a bypass along `ruling` (front if `front`).
///
/// # Safety
/// `dividing` and `ruling` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_bypass_attach(
    dividing: *const c_char,
    ruling: *const c_char,
    front: bool,
    out: *mut *mut c_char,
) -> FcStatus {
    guard(|| {
        let s: Slope = text(dividing, "dividing")?.parse()?;
        let r: Slope = text(ruling, "ruling")?.parse()?;
        let side = if front { AttachmentSide::Front } else { AttachmentSide::Back };
        put_string(out, bypass_attach(s, r, side)?.to_string())
    })
}

/// Shortest Farey path, written as `"a -> b -> c"`.
///
/// # Safety
/// `from` and `to` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_farey_path(from: *const c_char, to: *const c_char, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        let a: Slope = text(from, "from")?.parse()?;
        let b: Slope = text(to, "to")?.parse()?;
        put_string(out, farey_path(a, b)?.to_string())
    })
}

/// Geometric intersection number of the classes `(a1,b1)` and `(a2,b2)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_intersection(a1: i64, b1: i64, a2: i64, b2: i64, out: *mut u64) -> FcStatus {
    guard(|| {
        let n = intersection(CurveClass::new(a1, b1)?, CurveClass::new(a2, b2)?);
        put(out, n, "out")
    })
}

/// Image of the class `(a,b)` under the figure-eight monodromy, or its inverse.
///
/// # Safety
/// `out_a` and `out_b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_apply_monodromy(a: i64, b: i64, inverse: bool, out_a: *mut i64, out_b: *mut i64) -> FcStatus {
    guard(|| {
        let m = if inverse { invert(&MappingClass::PHI)? } else { MappingClass::PHI };
        let c = apply(&m, CurveClass::new(a, b)?)?;
        put(out_a, c.top(), "out_a")?;
        put(out_b, c.bottom(), "out_b")
    })
}

/// Rotation numbers realised at `tb`, ascending. Writes the count to
/// `out_len`; returns `BufferTooSmall` if it exceeds `capacity`.
///
/// # Safety
/// `out` must have room for `capacity` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_mountain_range(tb: i64, out: *mut i64, capacity: usize, out_len: *mut usize) -> FcStatus {
    guard(|| {
        let range: Vec<i64> = mountain_range(tb)?.into_iter().collect();
        put(out_len, range.len(), "out_len")?;
        if range.len() > capacity {
            return Err(Fail::Status(FcStatus::BufferTooSmall, format!("need {} slots", range.len())));
        }
        if out.is_null() && !range.is_empty() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(range.as_ptr(), out, range.len());
        Ok(())
    })
}

/// Replays the whole argument.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_walkthrough(out: *mut *mut FcTrace) -> FcStatus {
    guard(|| put(out, Box::into_raw(Box::new(FcTrace(walkthrough()))), "out"))
}

/// Parses a trace from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_trace_from_json(json: *const c_char, out: *mut *mut FcTrace) -> FcStatus {
    guard(|| {
        let t = ProofTrace::from_json(text(json, "json")?)?;
        put(out, Box::into_raw(Box::new(FcTrace(t))), "out")
    })
}

/// JSON form of a trace.
///
/// # Safety
/// `trace` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_trace_to_json(trace: *const FcTrace, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        let t = trace.as_ref().ok_or_else(|| null("trace"))?;
        put_string(out, t.0.to_json()?)
    })
}

/// Re-executes every step against the standard ledger.
///
/// # Safety
/// `trace` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_trace_reverify(trace: *const FcTrace, out: *mut *mut FcTrace) -> FcStatus {
    guard(|| {
        let t = trace.as_ref().ok_or_else(|| null("trace"))?;
        put(out, Box::into_raw(Box::new(FcTrace(t.0.reverify(&Ledger::standard())))), "out")
    })
}

/// Number of steps and of failed steps.
///
/// # Safety
/// `trace` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_trace_counts(trace: *const FcTrace, steps: *mut usize, failed: *mut usize) -> FcStatus {
    guard(|| {
        let t = trace.as_ref().ok_or_else(|| null("trace"))?;
        put(steps, t.0.steps().len(), "steps")?;
        put(failed, t.0.failed().count(), "failed")
    })
}

/// Whether no step failed. A null handle is not sound.
///
/// # Safety
/// `trace` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_trace_is_sound(trace: *const FcTrace) -> bool {
    trace.as_ref().is_some_and(|t| t.0.is_sound())
}

/// # Safety
/// `trace` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fc_trace_free(trace: *mut FcTrace) {
    if !trace.is_null() {
        drop(Box::from_raw(trace));
    }
}

/// Positive contact surgery with coefficient `coefficient` (e.g. `"3/2"`) on
/// the figure-eight knot with invariants `(tb, rot)`.
///
/// # Safety
/// `coefficient` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_classify_surgery(
    tb: i64,
    rot: i64,
    coefficient: *const c_char,
    out: *mut *mut FcVerdict,
) -> FcStatus {
    guard(|| {
        let knot = LegendrianFigureEight::new(tb, rot)?;
        let r: Coefficient = text(coefficient, "coefficient")?.parse()?;
        let (verdict, trace) = classify_surgery(knot, r)?;
        put(out, Box::into_raw(Box::new(FcVerdict { verdict, trace })), "out")
    })
}

/// # Safety
/// `verdict` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_is_overtwisted(verdict: *const FcVerdict) -> bool {
    verdict.as_ref().is_some_and(|v| v.verdict.is_overtwisted())
}

/// Human-readable reason for the verdict.
///
/// # Safety
/// `verdict` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_reason(verdict: *const FcVerdict, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| null("verdict"))?;
        put_string(out, v.verdict.reason.clone())
    })
}

/// A copy of the trace behind the verdict, as a separate handle.
///
/// # Safety
/// `verdict` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_trace(verdict: *const FcVerdict, out: *mut *mut FcTrace) -> FcStatus {
    guard(|| {
        let v = verdict.as_ref().ok_or_else(|| null("verdict"))?;
        put(out, Box::into_raw(Box::new(FcTrace(v.trace.clone()))), "out")
    })
}

/// # Safety
/// `verdict` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_free(verdict: *mut FcVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}
