//! C interface to `weylchar`.
//!
//! Every call returns a [`WcStatus`]. Strings handed out through `out`
//! pointers are owned by the caller and released with [`wc_string_free`].
//! After a non-OK status, [`wc_last_error`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_rational::BigRational;
use serde_json::json;
use weylchar::charlib::CharacterCache;
use weylchar::csop::{b_coeffs, epsilon};
use weylchar::repth::{tensor_decompose_with, weyl_dim, TensorOptions, DEFAULT_BUDGET};
use weylchar::{Algebra, Error, Weight};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcStatus {
    Ok = 0,
    /// The request is well formed but has no answer (e.g. non-dominant weight).
    Domain = 1,
    /// Malformed input: unknown algebra, wrong number of labels, bad number.
    Usage = 2,
    /// A tensor product exceeded the handle's weight budget.
    Budget = 3,
    /// A required pointer was null.
    Null = 4,
    /// Internal panic; the handle should not be reused.
    Panic = 5,
}

/// An algebra together with its character cache. Safe to share between
/// threads.
pub struct WcAlgebra {
    cache: CharacterCache,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(WcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } => WcStatus::Budget,
            Error::UnknownType(_) | Error::RankOutOfRange { .. } | Error::Syntax { .. } | Error::RankMismatch { .. } => {
                WcStatus::Usage
            }
            _ => WcStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(WcStatus::Null, format!("{what} is null"))
}

fn guard<F>(f: F) -> WcStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            WcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            WcStatus::Panic
        }
    }
}

unsafe fn handle<'a>(alg: *const WcAlgebra) -> Result<&'a WcAlgebra, Failure> {
    alg.as_ref().ok_or_else(|| null("algebra handle"))
}

unsafe fn weight(h: &WcAlgebra, labels: *const i64, len: usize) -> Result<Weight, Failure> {
    if labels.is_null() && len > 0 {
        return Err(null("labels"));
    }
    let labels = if len == 0 { &[][..] } else { std::slice::from_raw_parts(labels, len) };
    let w = Weight::new(labels.to_vec());
    h.cache.algebra().check_rank(&w)?;
    Ok(w)
}

unsafe fn text_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(WcStatus::Usage, format!("{what} is not UTF-8")))
}

unsafe fn emit(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(WcStatus::Domain, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(null("out"))
    } else {
        Ok(())
    }
}

/// Builds an algebra from a type string such as `"E8"` or `"A2"`.
/// A `budget` of 0 selects the default weight budget.
///
/// # Safety
/// `type_spec` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn wc_algebra_new(type_spec: *const c_char, budget: u64, out: *mut *mut WcAlgebra) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let spec = text_arg(type_spec, "type_spec")?;
        let alg = Algebra::from_type(spec)?;
        let budget = if budget == 0 { DEFAULT_BUDGET } else { budget };
        let h = WcAlgebra {
            cache: CharacterCache::with_options(alg, TensorOptions { budget }),
        };
        *out = Box::into_raw(Box::new(h));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from [`wc_algebra_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wc_algebra_free(alg: *mut WcAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Rank of the algebra, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wc_algebra_rank(alg: *const WcAlgebra) -> usize {
    alg.as_ref().map_or(0, |h| h.cache.algebra().rank())
}

/// Dimension of the irreducible representation, as a decimal string.
///
/// # Safety
/// `labels` must point to `len` values; `alg` must be live.
#[no_mangle]
pub unsafe extern "C" fn wc_weyl_dim(
    alg: *const WcAlgebra,
    labels: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(alg)?;
        let w = weight(h, labels, len)?;
        emit(out, weyl_dim(h.cache.algebra(), &w)?.to_string())
    })
}

/// Clebsch-Gordan series of `left ⊗ right` as JSON.
///
/// # Safety
/// `left` and `right` must each point to `len` values; `alg` must be live.
#[no_mangle]
pub unsafe extern "C" fn wc_tensor_json(
    alg: *const WcAlgebra,
    left: *const i64,
    right: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(alg)?;
        let (l, r) = (weight(h, left, len)?, weight(h, right, len)?);
        let a = h.cache.algebra();
        let d = tensor_decompose_with(a, &l, &r, h.cache.options())?;
        emit(out, d.to_json(a).to_string())
    })
}

/// Character as a polynomial in the fundamental characters, in the text
/// form `-1 + z1*z2`.
///
/// # Safety
/// `labels` must point to `len` values; `alg` must be live.
#[no_mangle]
pub unsafe extern "C" fn wc_character(
    alg: *const WcAlgebra,
    labels: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(alg)?;
        let w = weight(h, labels, len)?;
        emit(out, h.cache.character_poly(&w)?.to_string())
    })
}

/// Same as [`wc_character`] but as JSON `{"terms": [...], "text": ...}`.
///
/// # Safety
/// See [`wc_character`].
#[no_mangle]
pub unsafe extern "C" fn wc_character_json(
    alg: *const WcAlgebra,
    labels: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(alg)?;
        let w = weight(h, labels, len)?;
        let p = h.cache.character_poly(&w)?;
        emit(out, json!({ "terms": p.to_json(), "text": p.to_string() }).to_string())
    })
}

/// Excitation energy `ε_m(κ)` as an exact rational string. `kappa` is a
/// rational such as `"1"` or `"3/2"`.
///
/// # Safety
/// `labels` must point to `len` values, `kappa` must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn wc_epsilon(
    alg: *const WcAlgebra,
    labels: *const i64,
    len: usize,
    kappa: *const c_char,
    out: *mut *mut c_char,
) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(alg)?;
        let w = weight(h, labels, len)?;
        let k = text_arg(kappa, "kappa")?;
        let k: BigRational = k.trim().parse().map_err(|_| Failure(WcStatus::Usage, format!("bad coupling `{k}`")))?;
        emit(out, epsilon(h.cache.algebra(), &w, &k)?.to_string())
    })
}

/// First-order coefficients `b_j` as a JSON array of decimal strings.
///
/// # Safety
/// `alg` must be live.
#[no_mangle]
pub unsafe extern "C" fn wc_b_coeffs_json(alg: *const WcAlgebra, out: *mut *mut c_char) -> WcStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(alg)?;
        let b: Vec<String> = b_coeffs(h.cache.algebra())?.iter().map(|x| x.to_string()).collect();
        emit(out, json!(b).to_string())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn wc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
