//! C ABI for the frobreg engine.
//!
//! Rings are opaque handles created by `frobreg_ring_new` and released with
//! `frobreg_ring_free`. Every fallible call returns a [`FrobregStatus`]; the
//! message for the most recent failure on the calling thread is available
//! from `frobreg_last_error`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use frobreg::charp::{tor_length, QuotientRing};
use frobreg::cli::{parse_taskfile, run_task, Format, RunOptions};
use frobreg::groebner::Ideal;
use frobreg::invariants::{ehk_sequence, kunz_test};
use frobreg::{Error, ErrorKind};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobregStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InputError = 3,
    Timeout = 4,
    MathError = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque handle to a graded quotient ring `F_p[vars]/(relations)`.
pub struct FrobregRing {
    ring: QuotientRing,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: FrobregStatus, msg: impl Into<String>) -> FrobregStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> FrobregStatus {
    let status = match e.kind() {
        ErrorKind::Input => FrobregStatus::InputError,
        ErrorKind::Timeout => FrobregStatus::Timeout,
        ErrorKind::Math => FrobregStatus::MathError,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> FrobregStatus) -> FrobregStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(FrobregStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const libc::c_char) -> Result<&'a str, FrobregStatus> {
    if s.is_null() {
        return Err(fail(FrobregStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(FrobregStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn ideal_of(ring: &QuotientRing, gens: Option<&str>) -> Result<Ideal, Error> {
    match gens {
        None => ring.maximal_ideal(),
        Some(text) => {
            let s = ring.poly_ring();
            let gens = split_list(text).into_iter().map(|g| s.parse(g)).collect::<Result<Vec<_>, _>>()?;
            Ideal::new(s, gens)
        }
    }
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn frobreg_last_error() -> *const libc::c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Creates `F_p[vars]/(relations)`. `vars` is whitespace separated;
/// `relations` is comma separated and may be NULL.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobreg_ring_new(
    p: u64,
    vars: *const libc::c_char,
    relations: *const libc::c_char,
    out: *mut *mut FrobregRing,
) -> FrobregStatus {
    guard(|| {
        if out.is_null() {
            return fail(FrobregStatus::NullPointer, "null output pointer");
        }
        let vars = match read_str(vars) {
            Ok(v) => v,
            Err(s) => return s,
        };
        let rels = if relations.is_null() {
            ""
        } else {
            match read_str(relations) {
                Ok(r) => r,
                Err(s) => return s,
            }
        };
        let names: Vec<&str> = vars.split_whitespace().collect();
        match QuotientRing::parse(p, &names, &split_list(rels)) {
            Ok(ring) => {
                *out = Box::into_raw(Box::new(FrobregRing { ring }));
                FrobregStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `ring` must come from `frobreg_ring_new` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn frobreg_ring_free(ring: *mut FrobregRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Krull dimension of the ring.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobreg_ring_dim(ring: *const FrobregRing, out: *mut usize) -> FrobregStatus {
    if ring.is_null() || out.is_null() {
        return fail(FrobregStatus::NullPointer, "null argument");
    }
    *out = (*ring).ring.dim();
    FrobregStatus::Ok
}

/// Kunz's exact regularity test.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobreg_kunz_test(ring: *const FrobregRing, out: *mut bool) -> FrobregStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            return fail(FrobregStatus::NullPointer, "null argument");
        }
        match kunz_test(&(*ring).ring) {
            Ok(k) => {
                *out = k.regular;
                FrobregStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Writes `ℓ(R/I^[p^n])` for `n = 1..=n_max` into `out[0..n_max]`. A NULL
/// `ideal` means the maximal ideal; otherwise generators are comma separated.
///
/// # Safety
/// `ring` must be a live handle and `out` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn frobreg_ehk_sequence(
    ring: *const FrobregRing,
    ideal: *const libc::c_char,
    n_max: u32,
    out: *mut u64,
    capacity: usize,
) -> FrobregStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            return fail(FrobregStatus::NullPointer, "null argument");
        }
        if capacity < n_max as usize {
            return fail(FrobregStatus::BufferTooSmall, format!("need room for {n_max} values"));
        }
        let gens = if ideal.is_null() {
            None
        } else {
            match read_str(ideal) {
                Ok(s) => Some(s),
                Err(s) => return s,
            }
        };
        let ring = &(*ring).ring;
        let seq = ideal_of(ring, gens).and_then(|i| ehk_sequence(ring, &i, n_max));
        match seq {
            Ok(s) => {
                ptr::copy_nonoverlapping(s.values.as_ptr(), out, s.values.len());
                FrobregStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// `ℓ(Tor_i(R/I, F^n R))`. A NULL `ideal` means the maximal ideal.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobreg_tor_length(
    ring: *const FrobregRing,
    ideal: *const libc::c_char,
    i: usize,
    n: u32,
    out: *mut u64,
) -> FrobregStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            return fail(FrobregStatus::NullPointer, "null argument");
        }
        let gens = if ideal.is_null() {
            None
        } else {
            match read_str(ideal) {
                Ok(s) => Some(s),
                Err(s) => return s,
            }
        };
        let ring = &(*ring).ring;
        match ideal_of(ring, gens).and_then(|id| tor_length(ring, &id, i, n)) {
            Ok(v) => {
                *out = v;
                FrobregStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs a task file and returns the JSON result document through `out_json`.
/// Free the string with `frobreg_string_free`.
///
/// # Safety
/// `text` must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn frobreg_run_taskfile(text: *const libc::c_char, out_json: *mut *mut libc::c_char) -> FrobregStatus {
    guard(|| {
        if out_json.is_null() {
            return fail(FrobregStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let doc = parse_taskfile(text).and_then(|spec| run_task(&spec, &RunOptions::default()));
        match doc {
            Ok(d) => {
                let json = CString::new(d.emit(Format::Json)).expect("JSON has no NUL bytes");
                *out_json = json.into_raw();
                FrobregStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `s` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn frobreg_string_free(s: *mut libc::c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
