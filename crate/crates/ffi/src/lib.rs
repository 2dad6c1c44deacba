//! C ABI over `hzbounds`.
//!
//! Every fallible call returns an [`HzStatus`] and writes its result through
//! an out pointer. On failure, [`hz_last_error`] describes what went wrong on
//! the calling thread. Strings handed out by this library must be released
//! with [`hz_string_free`]; handles with their matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hzbounds::capacity::{hz_bounds_for, unitary_capacity, CapacityBounds, HzOptions};
use hzbounds::graphs::{cayley_diameter, BruhatGraph, QuantumBruhatGraph, WeightedCayleyGraph, DEFAULT_CAYLEY_CAP};
use hzbounds::rational::{parse_rational_list, to_wire};
use hzbounds::weyl::DEFAULT_GROUP_CAP;
use hzbounds::{Error, Family, RationalVector, RootSystem, WeightLambda, WeylGroup};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidType = 3,
    DimensionMismatch = 4,
    NotDominant = 5,
    Parse = 6,
    TooLarge = 7,
    CheckFailed = 8,
    Unsupported = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzGraphKind {
    Bruhat = 0,
    Quantum = 1,
}

/// Opaque root system handle.
pub struct HzRootSystem {
    rs: Arc<RootSystem>,
}

/// Opaque result of a capacity computation.
pub struct HzBounds {
    inner: CapacityBounds,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HzStatus {
    match e {
        Error::InvalidType { .. } => HzStatus::InvalidType,
        Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => HzStatus::DimensionMismatch,
        Error::NotDominant { .. } | Error::Unsorted { .. } | Error::NotPositiveCoweight { .. } => {
            HzStatus::NotDominant
        }
        Error::Parse(_) | Error::UnknownFormat(_) => HzStatus::Parse,
        Error::GroupTooLarge { .. } | Error::CayleyTooLarge { .. } => HzStatus::TooLarge,
        Error::DecompositionCheck { .. } | Error::TheoremViolation(_) | Error::Inconsistent(_) => {
            HzStatus::CheckFailed
        }
        Error::Unsupported(_) => HzStatus::Unsupported,
    }
}

struct Fail(HzStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HzStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("panic inside hzbounds".into());
            HzStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(HzStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HzStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn cap_or_default(cap: u64) -> u128 {
    if cap == 0 {
        DEFAULT_GROUP_CAP
    } else {
        cap as u128
    }
}

/// Message for the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the root system of `family` ("A".."G") and `rank`.
///
/// # Safety
/// `family` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_root_system_new(
    family: *const c_char,
    rank: usize,
    out: *mut *mut HzRootSystem,
) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let family: Family = read_str(family, "family")?.parse()?;
        let rs = RootSystem::build(family, rank)?;
        *out = Box::into_raw(Box::new(HzRootSystem { rs: Arc::new(rs) }));
        Ok(())
    })
}

/// # Safety
/// `rs` must be null or a handle from [`hz_root_system_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_root_system_free(rs: *mut HzRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank, ambient dimension and number of roots.
///
/// # Safety
/// `rs` must be a live handle; each out pointer may be null.
#[no_mangle]
pub unsafe extern "C" fn hz_root_system_info(
    rs: *const HzRootSystem,
    rank: *mut usize,
    ambient_dim: *mut usize,
    num_roots: *mut usize,
) -> HzStatus {
    guard(|| {
        let rs = &rs.as_ref().ok_or_else(|| null("rs"))?.rs;
        if let Some(r) = rank.as_mut() {
            *r = rs.rank();
        }
        if let Some(d) = ambient_dim.as_mut() {
            *d = rs.ambient_dim();
        }
        if let Some(n) = num_roots.as_mut() {
            *n = rs.num_roots();
        }
        Ok(())
    })
}

/// Lower and upper capacity bounds for `lambda`, a comma separated list of
/// rationals such as `"3,2,1/2"`. `group_cap` bounds Weyl group enumeration; 0 means the default.
///
/// # Safety
/// `rs` must be a live handle, `lambda` a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_compute(
    rs: *const HzRootSystem,
    lambda: *const c_char,
    group_cap: u64,
    out: *mut *mut HzBounds,
) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let rs = rs.as_ref().ok_or_else(|| null("rs"))?;
        let lambda = parse_rational_list(read_str(lambda, "lambda")?)?;
        let opts = HzOptions {
            group_cap: cap_or_default(group_cap),
            ..HzOptions::default()
        };
        let inner = hz_bounds_for(Arc::clone(&rs.rs), RationalVector(lambda), &opts)?;
        *out = Box::into_raw(Box::new(HzBounds { inner }));
        Ok(())
    })
}

/// # Safety
/// `b` must be null or a handle from [`hz_bounds_compute`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_free(b: *mut HzBounds) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

unsafe fn bounds_string(
    b: *const HzBounds,
    out: *mut *mut c_char,
    pick: impl FnOnce(&CapacityBounds) -> Option<String>,
) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let b = b.as_ref().ok_or_else(|| null("bounds"))?;
        if let Some(s) = pick(&b.inner) {
            *out = c_string(s);
        }
        Ok(())
    })
}

/// Lower bound as `"p/q"`.
///
/// # Safety
/// `b` must be a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_lower(b: *const HzBounds, out: *mut *mut c_char) -> HzStatus {
    bounds_string(b, out, |b| Some(to_wire(&b.lower)))
}

/// Upper bound as `"p/q"`.
///
/// # Safety
/// `b` must be a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_upper(b: *const HzBounds, out: *mut *mut c_char) -> HzStatus {
    bounds_string(b, out, |b| Some(to_wire(&b.upper)))
}

/// Exact capacity as `"p/q"` when known; otherwise `*out` is set to null.
///
/// # Safety
/// `b` must be a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_exact(b: *const HzBounds, out: *mut *mut c_char) -> HzStatus {
    bounds_string(b, out, |b| b.exact.as_ref().map(to_wire))
}

/// Full report as JSON.
///
/// # Safety
/// `b` must be a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_to_json(b: *const HzBounds, out: *mut *mut c_char) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let b = b.as_ref().ok_or_else(|| null("bounds"))?;
        let s = serde_json::to_string(&b.inner.report()).map_err(|e| Fail(HzStatus::Parse, e.to_string()))?;
        *out = c_string(s);
        Ok(())
    })
}

/// 1-based index of the simple root attaining the lower bound, and whether every internal check passed.
///
/// # Safety
/// `b` must be a live handle; each out pointer may be null.
#[no_mangle]
pub unsafe extern "C" fn hz_bounds_info(b: *const HzBounds, witness_simple: *mut usize, checks_pass: *mut bool) -> HzStatus {
    guard(|| {
        let b = &b.as_ref().ok_or_else(|| null("bounds"))?.inner;
        if let Some(w) = witness_simple.as_mut() {
            *w = b.witness + 1;
        }
        if let Some(c) = checks_pass.as_mut() {
            *c = b.all_checks_pass();
        }
        Ok(())
    })
}

/// Capacity of the unitary orbit through the sorted spectrum `lambda`.
///
/// # Safety
/// `lambda` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_unitary_capacity(lambda: *const c_char, out: *mut *mut c_char) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let lambda = parse_rational_list(read_str(lambda, "lambda")?)?;
        *out = c_string(to_wire(&unitary_capacity(&lambda)?));
        Ok(())
    })
}

/// Diameter of the weighted Cayley graph of S_n, computed by search. `cap` bounds n; 0 means the default.
///
/// # Safety
/// `lambda` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_cayley_diameter(lambda: *const c_char, cap: usize, out: *mut *mut c_char) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let lambda = parse_rational_list(read_str(lambda, "lambda")?)?;
        let cap = if cap == 0 { DEFAULT_CAYLEY_CAP } else { cap };
        *out = c_string(to_wire(&cayley_diameter(&lambda, cap)?));
        Ok(())
    })
}

/// Weighted Cayley graph of S_n as JSON.
///
/// # Safety
/// `lambda` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_cayley_graph_json(lambda: *const c_char, cap: usize, out: *mut *mut c_char) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let lambda = parse_rational_list(read_str(lambda, "lambda")?)?;
        let cap = if cap == 0 { DEFAULT_CAYLEY_CAP } else { cap };
        *out = c_string(WeightedCayleyGraph::new(&lambda, cap)?.document().sorted().to_json()?);
        Ok(())
    })
}

/// Bruhat or quantum Bruhat graph as JSON. For the Bruhat graph a non-null
/// `lambda` selects the parabolic quotient by its stabilizer and adds edge areas.
///
/// # Safety
/// `rs` must be a live handle, `lambda` null or a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_graph_json(
    rs: *const HzRootSystem,
    kind: HzGraphKind,
    lambda: *const c_char,
    group_cap: u64,
    out: *mut *mut c_char,
) -> HzStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = ptr::null_mut();
        let rs = &rs.as_ref().ok_or_else(|| null("rs"))?.rs;
        let lambda = if lambda.is_null() {
            None
        } else {
            Some(parse_rational_list(read_str(lambda, "lambda")?)?)
        };
        let group = WeylGroup::generate(Arc::clone(rs), cap_or_default(group_cap))?;
        let doc = match (kind, lambda) {
            (HzGraphKind::Quantum, _) => QuantumBruhatGraph::new(&group).document(),
            (HzGraphKind::Bruhat, Some(l)) => {
                let l = WeightLambda::new(rs, RationalVector(l))?;
                let subset = rs.stabilizer_subset(l.coords())?;
                BruhatGraph::new(&group, group.parabolic(&subset)?).document(Some(l.coords()))?
            }
            (HzGraphKind::Bruhat, None) => BruhatGraph::full(&group)?.document(None)?,
        };
        *out = c_string(doc.sorted().to_json()?);
        Ok(())
    })
}
