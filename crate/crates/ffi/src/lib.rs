//! C ABI over `traceform`.
//!
//! Every fallible call returns a [`TfStatus`]. On anything but
//! `TF_STATUS_OK` the calling thread's last error holds a message, readable
//! through [`tf_last_error_message`]. Handles are opaque and owned by the
//! caller until passed to the matching `*_free`. Strings returned through
//! out-pointers are owned by the caller and released with [`tf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use traceform::catalog::parse_group_spec;
use traceform::cohomology::{ker_s, H2};
use traceform::group::Group;
use traceform::pin::involution_square_sign;
use traceform::poly::MonicPoly;
use traceform::qform::QForm;
use traceform::suite::{run_criterion, run_suite, SuiteConfig, CRITERIA};
use traceform::trace::EtaleAlg;
use traceform::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OutOfRange = 4,
    CapExceeded = 5,
    FactorizationLimit = 6,
    Math = 7,
    Panic = 8,
}

/// A finite group given by its multiplication table.
pub struct TfGroup(Group);

/// A diagonal quadratic form over Q.
pub struct TfForm(QForm);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> TfStatus {
    match err {
        Error::Parse(_) | Error::UnknownGroup(_) | Error::InvalidPerm(_) | Error::InvalidTable(_) => TfStatus::Parse,
        Error::OutOfRange(_) | Error::OddDegree(_) => TfStatus::OutOfRange,
        Error::CapExceeded { .. } => TfStatus::CapExceeded,
        Error::FactorizationLimit(_) => TfStatus::FactorizationLimit,
        _ => TfStatus::Math,
    }
}

/// Runs `f` behind the boundary: clears the last error, converts core
/// errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (TfStatus, String)>) -> TfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            TfStatus::Panic
        }
    }
}

fn core<T>(r: traceform::Result<T>) -> Result<T, (TfStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (TfStatus, String) {
    (TfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TfStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (TfStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (TfStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (TfStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_box<T>(out: *mut *mut T, value: T) -> Result<(), (TfStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (TfStatus, String)> {
    let c = CString::new(s).map_err(|e| (TfStatus::Math, e.to_string()))?;
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(c.into_raw());
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the calling thread's last error message, or NULL if the last
/// call succeeded. Free with [`tf_string_free`].
#[no_mangle]
pub extern "C" fn tf_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map_or(ptr::null_mut(), CString::into_raw))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a group from a spec such as `catalog:sym:4` or
/// `perms:(0 1 2 3),(0 2)`.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_group_new(spec: *const c_char, out: *mut *mut TfGroup) -> TfStatus {
    guard(|| {
        let spec = read_str(spec, "spec")?;
        let g = core(parse_group_spec(spec))?;
        write_box(out, TfGroup(g))
    })
}

/// # Safety
/// `g` must be NULL or a handle from [`tf_group_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_group_free(g: *mut TfGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_group_order(g: *const TfGroup, out: *mut usize) -> TfStatus {
    guard(|| write(out, handle(g, "group")?.0.order(), "out"))
}

/// Dimension of H²(G, F2).
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_group_h2_dim(g: *const TfGroup, out: *mut usize) -> TfStatus {
    guard(|| {
        let d = core(H2::compute(&handle(g, "group")?.0))?.dim();
        write(out, d, "out")
    })
}

/// Dimension of the kernel of the s-map.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_group_ker_s_dim(g: *const TfGroup, out: *mut usize) -> TfStatus {
    guard(|| {
        let k = core(ker_s(&handle(g, "group")?.0))?;
        write(out, k.dim, "out")
    })
}

/// Whether the group is 2-reduced.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_group_is_2_reduced(g: *const TfGroup, out: *mut bool) -> TfStatus {
    guard(|| {
        let k = core(ker_s(&handle(g, "group")?.0))?;
        write(out, k.dim == 0, "out")
    })
}

/// Sign of the square of a lifted fixed-point-free involution in Pin(n),
/// for even `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_pin_square_sign(n: usize, out: *mut i32) -> TfStatus {
    guard(|| write(out, core(involution_square_sign(n))?, "out"))
}

/// Parses a diagonal form such as `1,-2,3/5`.
///
/// # Safety
/// `entries` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_form_parse(entries: *const c_char, out: *mut *mut TfForm) -> TfStatus {
    guard(|| {
        let q = core(QForm::parse(read_str(entries, "entries")?))?;
        write_box(out, TfForm(q))
    })
}

/// Trace form of the étale algebra Q[x]/(f) for a separable monic `f`,
/// coefficients from the leading one down.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_trace_form(coeffs: *const i64, len: usize, out: *mut *mut TfForm) -> TfStatus {
    guard(|| {
        if coeffs.is_null() {
            return Err(null("coeffs"));
        }
        let c = std::slice::from_raw_parts(coeffs, len);
        let f = core(MonicPoly::from_i64(c))?;
        let q = core(EtaleAlg::field(f).and_then(|a| a.trace_form()))?;
        write_box(out, TfForm(q))
    })
}

/// # Safety
/// `q` must be NULL or a form handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_form_free(q: *mut TfForm) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// # Safety
/// `q` must be a live form handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_form_rank(q: *const TfForm, out: *mut usize) -> TfStatus {
    guard(|| write(out, handle(q, "form")?.0.rank(), "out"))
}

/// Rank, signature, w1 and the places of w2 as a JSON object.
///
/// # Safety
/// `q` must be a live form handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_form_invariants_json(q: *const TfForm, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let q = &handle(q, "form")?.0;
        let inv = core(q.invariants())?;
        let v = serde_json::json!({
            "entries": q.to_strings(),
            "rank": inv.rank,
            "signature": inv.signature,
            "w1": inv.w1,
            "w2_places": inv.w2,
        });
        write_string(out, v.to_string())
    })
}

/// # Safety
/// `a` and `b` must be live form handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tf_form_is_isometric(a: *const TfForm, b: *const TfForm, out: *mut bool) -> TfStatus {
    guard(|| {
        let iso = core(handle(a, "a")?.0.is_isometric(&handle(b, "b")?.0))?;
        write(out, iso, "out")
    })
}

/// Runs the acceptance suite, or a single criterion when `criterion` is in
/// 1..=10 (0 runs all), and writes the JSON report to `out`. `passed` is
/// optional.
///
/// # Safety
/// `out` must be writable; `passed` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tf_suite_run(seed: u64, criterion: u8, out: *mut *mut c_char, passed: *mut bool) -> TfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let cfg = SuiteConfig { seed, timed: false };
        let (json, ok) = if criterion == 0 {
            let r = run_suite(&cfg);
            (serde_json::to_string(&r), r.all_passed())
        } else if CRITERIA.iter().any(|(id, _)| *id == criterion) {
            let r = run_criterion(criterion, &cfg);
            (serde_json::to_string(&r), r.passed)
        } else {
            return Err((TfStatus::OutOfRange, format!("no criterion {criterion}")));
        };
        write_string(out, json.map_err(|e| (TfStatus::Math, e.to_string()))?)?;
        if !passed.is_null() {
            passed.write(ok);
        }
        Ok(())
    })
}
