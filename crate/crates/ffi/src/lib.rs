//! C ABI over `hm-core`.
//!
//! Every fallible function returns an [`HmStatus`]. On failure a message is
//! kept per thread and can be fetched with [`hm_last_error`]. Strings handed
//! out by this library must be released with [`hm_string_free`], handles
//! with their matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hm_core::algebra::{BigInt, BigRational};
use hm_core::cfrac::PeriodicHFraction;
use hm_core::hfrac::{default_max_steps, hankel_values, hfraction_of_quadratic};
use hm_core::qseries::{metallic_series, shifted_metallic_model};
use hm_core::verify::{conjecture_scan, hankel_sequence, modp_analysis, run_suite, HankelSource, Suite};
use hm_core::{json, Error};
use num_traits::ToPrimitive;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPrime = 3,
    InsufficientPrecision = 4,
    NoCycle = 5,
    Arithmetic = 6,
    /// A value does not fit the caller's integer type.
    Overflow = 7,
    /// The caller's buffer is too small; the required length was written.
    BufferTooSmall = 8,
    Internal = 9,
}

/// Source of Hankel determinants for [`hm_hankel_json`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HmHankelSource {
    Formula = 0,
    BruteForce = 1,
    Both = 2,
}

impl From<HmHankelSource> for HankelSource {
    fn from(s: HmHankelSource) -> Self {
        match s {
            HmHankelSource::Formula => HankelSource::Formula,
            HmHankelSource::BruteForce => HankelSource::BruteForce,
            HmHankelSource::Both => HankelSource::Both,
        }
    }
}

/// Opaque H-fraction of a shifted q-metallic number.
pub struct HmHFraction {
    n: usize,
    ell: usize,
    fraction: PeriodicHFraction<BigRational>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> HmStatus {
    match e {
        Error::InvalidArgument(_) | Error::InvalidModel(_) => HmStatus::InvalidArgument,
        Error::NotPrime(_) => HmStatus::NotPrime,
        Error::Precision { .. } | Error::InsufficientTerms { .. } => HmStatus::InsufficientPrecision,
        Error::NoCycle(_) => HmStatus::NoCycle,
        Error::DivisionByZero
        | Error::InexactDivision { .. }
        | Error::NonUnit
        | Error::IllPosedFraction { .. }
        | Error::MalformedQuotient { .. } => HmStatus::Arithmetic,
    }
}

struct Failure(HmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HmStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error: panic in hm-core");
            HmStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HmStatus::NullPointer, format!("{what} is null"))
}

fn need_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure(HmStatus::InvalidArgument, "n must be >= 1".into()));
    }
    Ok(())
}

fn steps_or_default(n: usize, max_steps: usize) -> usize {
    if max_steps == 0 {
        default_max_steps(n)
    } else {
        max_steps
    }
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(HmStatus::Internal, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_i64s(values: &[BigInt], out: *mut i64, len: usize, written: *mut usize) -> Result<(), Failure> {
    if written.is_null() {
        return Err(null("written"));
    }
    *written = values.len();
    if len < values.len() {
        return Err(Failure(HmStatus::BufferTooSmall, format!("buffer holds {len} values, {} needed", values.len())));
    }
    if values.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(null("out"));
    }
    let dst = std::slice::from_raw_parts_mut(out, values.len());
    for (j, (d, v)) in dst.iter_mut().zip(values).enumerate() {
        *d = v
            .to_i64()
            .ok_or_else(|| Failure(HmStatus::Overflow, format!("value at index {j} does not fit in int64: {v}")))?;
    }
    Ok(())
}

/// Library version as a static NUL-terminated string. Do not free.
#[no_mangle]
pub extern "C" fn hm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Taylor coefficients of the n-th q-metallic number, `prec` of them, into
/// `out`. `*written` receives the number of coefficients even on
/// `BufferTooSmall`.
///
/// # Safety
/// `out` must point to `len` writable values; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_series(n: usize, prec: usize, out: *mut i64, len: usize, written: *mut usize) -> HmStatus {
    guard(|| {
        need_n(n)?;
        let s = metallic_series(n, prec)?;
        put_i64s(s.coeffs(), out, len, written)
    })
}

/// Runs Algorithm Q on the `ell`-th shift of the n-th q-metallic number.
/// `max_steps = 0` selects the default step cap.
///
/// # Safety
/// `out` must be a valid pointer; the handle written there must be freed
/// with [`hm_hfraction_free`].
#[no_mangle]
pub unsafe extern "C" fn hm_hfraction_new(n: usize, ell: usize, max_steps: usize, out: *mut *mut HmHFraction) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        need_n(n)?;
        let model = shifted_metallic_model(n, ell)?.to_rational();
        let fraction = hfraction_of_quadratic(&model, steps_or_default(n, max_steps))?.found()?;
        *out = Box::into_raw(Box::new(HmHFraction { n, ell, fraction }));
        Ok(())
    })
}

/// Releases a handle from [`hm_hfraction_new`]. NULL is ignored.
///
/// # Safety
/// `h` must come from [`hm_hfraction_new`] and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hm_hfraction_free(h: *mut HmHFraction) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Index of the first periodic term, written to `offset`, and the cycle
/// length, written to `period` (0 for a finite fraction).
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_hfraction_shape(h: *const HmHFraction, offset: *mut usize, period: *mut usize) -> HmStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        if offset.is_null() || period.is_null() {
            return Err(null("output"));
        }
        *offset = h.fraction.offset();
        *period = h.fraction.period();
        Ok(())
    })
}

/// The fraction as a JSON object `{n, ell, hfraction}`.
///
/// # Safety
/// `h` and `out` must be valid; free the string with [`hm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hm_hfraction_json(h: *const HmHFraction, out: *mut *mut c_char) -> HmStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        let v = serde_json::json!({ "n": h.n, "ell": h.ell, "hfraction": json::hfraction(&h.fraction) });
        put_string(out, v.to_string())
    })
}

/// Hankel determinants Δ_0 .. Δ_{horizon-1} read off the fraction.
///
/// # Safety
/// `out` must point to `len` writable values; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_hfraction_hankel(
    h: *const HmHFraction,
    horizon: usize,
    out: *mut i64,
    len: usize,
    written: *mut usize,
) -> HmStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("handle"))?;
        let values = hankel_values(&h.fraction, horizon)?;
        let ints = values
            .iter()
            .map(|v| {
                v.is_integer()
                    .then(|| v.to_integer())
                    .ok_or_else(|| Failure(HmStatus::Arithmetic, format!("non-integer determinant {v}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        put_i64s(&ints, out, len, written)
    })
}

/// Hankel report as JSON, same layout as `hm hankel --format json`.
///
/// # Safety
/// `out` must be valid; free the string with [`hm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hm_hankel_json(
    n: usize,
    ell: usize,
    horizon: usize,
    source: HmHankelSource,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        need_n(n)?;
        let r = hankel_sequence(n, ell, horizon, source.into())?;
        put_string(out, json::hankel_report(&r).to_string())
    })
}

/// Periodicity report modulo the prime `p` as JSON. `max_steps = 0`
/// selects the default step cap.
///
/// # Safety
/// `out` must be valid; free the string with [`hm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hm_modp_json(n: usize, ell: usize, p: u64, max_steps: usize, out: *mut *mut c_char) -> HmStatus {
    guard(|| {
        need_n(n)?;
        let r = modp_analysis(n, ell, p, steps_or_default(n, max_steps))?;
        put_string(out, json::modp_report(&r).to_string())
    })
}

/// Exploratory scan of the `ell`-th shift (`ell >= n + 2`) as JSON.
///
/// # Safety
/// `out` must be valid; free the string with [`hm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hm_scan_json(n: usize, ell: usize, horizon: usize, out: *mut *mut c_char) -> HmStatus {
    guard(|| {
        need_n(n)?;
        let r = conjecture_scan(n, ell, horizon)?;
        put_string(out, json::conjecture_report(&r).to_string())
    })
}

/// Runs the named verification suite for `n_min ..= n_max` with both
/// Hankel sources and writes the report as JSON. `*passed` receives 1 when
/// every check passed, else 0.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `passed` and `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn hm_verify_json(
    suite: *const c_char,
    n_min: usize,
    n_max: usize,
    passed: *mut i32,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        if suite.is_null() {
            return Err(null("suite"));
        }
        if passed.is_null() {
            return Err(null("passed"));
        }
        let name = CStr::from_ptr(suite)
            .to_str()
            .map_err(|_| Failure(HmStatus::InvalidArgument, "suite name is not UTF-8".into()))?;
        let suite: Suite = name.parse()?;
        if n_min == 0 || n_min > n_max {
            return Err(Failure(HmStatus::InvalidArgument, "need 1 <= n_min <= n_max".into()));
        }
        let ns: Vec<usize> = (n_min..=n_max).collect();
        let checks = run_suite(suite, &ns, HankelSource::Both)?;
        *passed = i32::from(checks.iter().all(|c| c.pass));
        put_string(out, json::verify_report(suite.name(), &ns, &checks).to_string())
    })
}
