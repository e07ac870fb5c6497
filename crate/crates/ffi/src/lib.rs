//! C ABI over `relcat`.
//!
//! Every function returns a [`RelcatStatus`]. On anything other than
//! `RELCAT_STATUS_OK` a message is available from [`relcat_last_error`] on the
//! same thread. Strings are copied into caller buffers; when a buffer is too
//! small the call fails with `RELCAT_STATUS_BUFFER_TOO_SMALL` and `needed`
//! holds the required size including the terminating NUL.

use std::cell::RefCell;
use std::ffi::CStr;
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::{c_char, size_t};
use relcat::lawlang::{catalog_entry, check_law_with, CheckOptions, LawError, Strategy};
use relcat::model::Model;
use relcat::golden::paper_example;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelcatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidModel = 3,
    InvalidTerm = 4,
    UnknownLaw = 5,
    CapExceeded = 6,
    CheckFailed = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Opaque model handle.
pub struct RelcatModel {
    inner: Model,
}

/// Outcome counts of one law check.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RelcatCheckSummary {
    pub assignments: u64,
    pub satisfying: u64,
    pub violations: u64,
    /// Non-zero when no assignment satisfied the assumptions.
    pub vacuous: u8,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn fail(status: RelcatStatus, msg: impl Into<String>) -> RelcatStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> RelcatStatus) -> RelcatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(RelcatStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, RelcatStatus> {
    if p.is_null() {
        return Err(fail(RelcatStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| fail(RelcatStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write_str(s: &str, buf: *mut c_char, cap: size_t, needed: *mut size_t) -> RelcatStatus {
    let n = s.len() + 1;
    if !needed.is_null() {
        *needed = n;
    }
    if buf.is_null() || cap < n {
        return fail(RelcatStatus::BufferTooSmall, format!("buffer of {cap} bytes, need {n}"));
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    RelcatStatus::Ok
}

fn law_status(e: &LawError) -> RelcatStatus {
    match e {
        LawError::ExhaustionCapExceeded { .. } => RelcatStatus::CapExceeded,
        _ => RelcatStatus::CheckFailed,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn relcat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Copies the last error message of this thread into `buf`.
///
/// # Safety
/// `buf` must be valid for `cap` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn relcat_last_error(buf: *mut c_char, cap: size_t, needed: *mut size_t) -> RelcatStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    write_str(&msg, buf, cap, needed)
}

/// Parses a model from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn relcat_model_from_json(json: *const c_char, out: *mut *mut RelcatModel) -> RelcatStatus {
    guard(|| {
        if out.is_null() {
            return fail(RelcatStatus::NullPointer, "null output handle");
        }
        *out = std::ptr::null_mut();
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Model::from_json(text) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(RelcatModel { inner: m }));
                RelcatStatus::Ok
            }
            Err(e) => fail(RelcatStatus::InvalidModel, e.to_string()),
        }
    })
}

/// The embedded three-element chain model.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn relcat_model_embedded(out: *mut *mut RelcatModel) -> RelcatStatus {
    guard(|| {
        if out.is_null() {
            return fail(RelcatStatus::NullPointer, "null output handle");
        }
        *out = Box::into_raw(Box::new(RelcatModel { inner: Model::paper() }));
        RelcatStatus::Ok
    })
}

/// Releases a model. Null is ignored.
///
/// # Safety
/// `model` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn relcat_model_free(model: *mut RelcatModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Evaluates `term` and writes the matrix in inline form, e.g. `(0 1) (1 0)`.
///
/// # Safety
/// `model` must be a live handle, `term` NUL-terminated, `buf` valid for
/// `cap` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn relcat_eval(
    model: *const RelcatModel,
    term: *const c_char,
    buf: *mut c_char,
    cap: size_t,
    needed: *mut size_t,
) -> RelcatStatus {
    guard(|| {
        let Some(m) = model.as_ref() else {
            return fail(RelcatStatus::NullPointer, "null model");
        };
        let term = match read_str(term) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match m.inner.eval(term) {
            Ok(r) => write_str(&r.inline(), buf, cap, needed),
            Err(e) => fail(RelcatStatus::InvalidTerm, e.to_string()),
        }
    })
}

/// Checks a catalog law exhaustively, or by random sampling when `samples`
/// is non-zero.
///
/// # Safety
/// `model` must be a live handle, `law_id` NUL-terminated and `summary` valid.
#[no_mangle]
pub unsafe extern "C" fn relcat_check_law(
    model: *const RelcatModel,
    law_id: *const c_char,
    samples: u64,
    seed: u64,
    summary: *mut RelcatCheckSummary,
) -> RelcatStatus {
    guard(|| {
        let Some(m) = model.as_ref() else {
            return fail(RelcatStatus::NullPointer, "null model");
        };
        if summary.is_null() {
            return fail(RelcatStatus::NullPointer, "null summary");
        }
        let id = match read_str(law_id) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let Some(entry) = catalog_entry(id) else {
            return fail(RelcatStatus::UnknownLaw, format!("unknown law `{id}`"));
        };
        let strategy = if samples == 0 { Strategy::Exhaustive } else { Strategy::Random { samples, seed } };
        match check_law_with(&entry.law(), &m.inner, &CheckOptions::new(strategy)) {
            Ok(r) => {
                *summary = RelcatCheckSummary {
                    assignments: r.assignments,
                    satisfying: r.satisfying,
                    violations: r.violations_total,
                    vacuous: r.vacuous as u8,
                };
                RelcatStatus::Ok
            }
            Err(e) => fail(law_status(&e), e.to_string()),
        }
    })
}

/// Evaluates the six counterexample matrices; `all_match` is set to 1 when
/// every one equals its known value.
///
/// # Safety
/// `model` must be a live handle and `all_match` valid.
#[no_mangle]
pub unsafe extern "C" fn relcat_golden_example(model: *const RelcatModel, all_match: *mut u8) -> RelcatStatus {
    guard(|| {
        let Some(m) = model.as_ref() else {
            return fail(RelcatStatus::NullPointer, "null model");
        };
        if all_match.is_null() {
            return fail(RelcatStatus::NullPointer, "null output");
        }
        match paper_example(&m.inner) {
            Ok(r) => {
                *all_match = r.all_match as u8;
                RelcatStatus::Ok
            }
            Err(e) => fail(RelcatStatus::InvalidTerm, e.to_string()),
        }
    })
}
