//! C ABI over `rational-forest`.
//!
//! Fractions and locate results cross the boundary as opaque handles that
//! the caller releases with the matching `*_free` function. Integers that can
//! exceed 64 bits (indices, Fibonacci numbers) and 0-1 paths are returned as
//! NUL-terminated strings released with [`rf_string_free`]. Every function
//! returns an [`RfStatus`]; on failure [`rf_last_error`] describes the cause.
//!
//! The header `include/rational_forest.h` is regenerated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rational_forest::{
    apps, bitpath::BitPath, locate as core_locate, Error, LocateResult, Rational, TreeKind,
};

/// Outcome of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// The fraction does not belong to the requested tree, or is `1/0`/`0/1`.
    OutOfTree = 4,
    /// A level or index outside its range, or a depth over the cap.
    OutOfRange = 5,
    /// Any other rejected argument.
    Domain = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfTree {
    S = 0,
    Sc = 1,
    Sb = 2,
    Cw = 3,
}

impl From<RfTree> for TreeKind {
    fn from(t: RfTree) -> Self {
        match t {
            RfTree::S => TreeKind::S,
            RfTree::Sc => TreeKind::Sc,
            RfTree::Sb => TreeKind::Sb,
            RfTree::Cw => TreeKind::Cw,
        }
    }
}

/// Opaque positive fraction (or one of the pseudo-fractions `1/0`, `0/1`).
pub struct RfRational(Rational);

/// Opaque result of [`rf_locate`].
pub struct RfLocation(LocateResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Fail(RfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => RfStatus::Parse,
            Error::OutOfTree { .. } | Error::PseudoFraction(_) => RfStatus::OutOfTree,
            Error::IndexOutOfRange { .. } | Error::NoPath { .. } | Error::DepthCap { .. } => {
                RfStatus::OutOfRange
            }
            _ => RfStatus::Domain,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(RfStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> RfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            RfStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            RfStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(RfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(RfStatus::Internal, "interior NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_rational(out: *mut *mut RfRational, q: Rational) -> Result<(), Fail> {
    write_out(out, Box::into_raw(Box::new(RfRational(q))))
}

/// Parses `"n/d"` or `"n"`.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_rational_parse(
    text: *const c_char,
    out: *mut *mut RfRational,
) -> RfStatus {
    guard(|| {
        let q: Rational = read_str(text, "text")?.parse()?;
        write_rational(out, q)
    })
}

/// Builds the reduced form of `numer/denom`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_rational_new(
    numer: u64,
    denom: u64,
    out: *mut *mut RfRational,
) -> RfStatus {
    guard(|| write_rational(out, Rational::new(numer, denom)?))
}

/// # Safety
/// `q` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rf_rational_free(q: *mut RfRational) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Writes `"n/d"`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_rational_to_string(
    q: *const RfRational,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| write_string(out, deref(q, "fraction")?.0.to_string()))
}

/// Closed-form position of `q` in `tree`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_locate(
    tree: RfTree,
    q: *const RfRational,
    out: *mut *mut RfLocation,
) -> RfStatus {
    guard(|| {
        let found = core_locate(tree.into(), &deref(q, "fraction")?.0)?;
        write_out(out, Box::into_raw(Box::new(RfLocation(found))))
    })
}

/// # Safety
/// `loc` must come from [`rf_locate`] and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rf_location_free(loc: *mut RfLocation) {
    if !loc.is_null() {
        drop(Box::from_raw(loc));
    }
}

/// # Safety
/// `loc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_location_level(loc: *const RfLocation, out: *mut u64) -> RfStatus {
    guard(|| write_out(out, deref(loc, "location")?.0.address.level))
}

/// 1-based index within the level, as a decimal string.
///
/// # Safety
/// `loc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_location_index(
    loc: *const RfLocation,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| write_string(out, deref(loc, "location")?.0.address.index.to_string()))
}

/// The 0-1 path; empty for vertices above the first path level.
///
/// # Safety
/// `loc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_location_path(
    loc: *const RfLocation,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| write_string(out, deref(loc, "location")?.0.path.to_string()))
}

/// The vertex of `tree` reached by a 0-1 path.
///
/// # Safety
/// `path` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_value_at(
    tree: RfTree,
    path: *const c_char,
    out: *mut *mut RfRational,
) -> RfStatus {
    guard(|| {
        let p: BitPath = read_str(path, "path")?.parse()?;
        write_rational(out, rational_forest::value_at(tree.into(), &p))
    })
}

/// Stern-Brocot path to SC-tree path.
///
/// # Safety
/// `path` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_sb_to_sc(path: *const c_char, out: *mut *mut c_char) -> RfStatus {
    guard(|| {
        let p: BitPath = read_str(path, "path")?.parse()?;
        write_string(out, rational_forest::sb_to_sc(&p)?.to_string())
    })
}

/// SC-tree path to Stern-Brocot path.
///
/// # Safety
/// `path` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_sc_to_sb(path: *const c_char, out: *mut *mut c_char) -> RfStatus {
    guard(|| {
        let p: BitPath = read_str(path, "path")?.parse()?;
        write_string(out, rational_forest::sc_to_sb(&p)?.to_string())
    })
}

/// Index on Calkin-Wilf level `level` of the vertex at S-tree index `index`
/// (decimal strings in and out).
///
/// # Safety
/// `index` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_s_to_cw_index(
    level: u64,
    index: *const c_char,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| {
        let text = read_str(index, "index")?;
        let ns = text.parse().map_err(|_| {
            Fail::from(Error::Parse {
                what: "index",
                input: text.to_owned(),
            })
        })?;
        write_string(out, rational_forest::s_to_cw_index(level, &ns)?.to_string())
    })
}

/// The `n`-th Fibonacci number as a decimal string, `F(1) = F(2) = 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_fibonacci(n: u64, out: *mut *mut c_char) -> RfStatus {
    guard(|| write_string(out, apps::fibonacci(n)?.to_string()))
}

/// Space-separated calculator keys that turn `0` into `q`, checked by exact
/// replay before returning.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_buttons(q: *const RfRational, out: *mut *mut c_char) -> RfStatus {
    guard(|| {
        let q = &deref(q, "fraction")?.0;
        let keys = apps::buttons_for(q)?;
        let end = apps::simulate_buttons(&keys)?;
        if end.exact_value().as_ref() != Some(q) {
            return Err(Fail(
                RfStatus::Internal,
                format!("keys for {q} end at {end:?}"),
            ));
        }
        let names: Vec<&str> = keys.iter().map(|k| k.name()).collect();
        write_string(out, names.join(" "))
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn rf_status_message(status: RfStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        RfStatus::Ok => c"ok",
        RfStatus::NullPointer => c"null pointer argument",
        RfStatus::InvalidUtf8 => c"string argument is not UTF-8",
        RfStatus::Parse => c"malformed input",
        RfStatus::OutOfTree => c"fraction is not a vertex of this tree",
        RfStatus::OutOfRange => c"level or index out of range",
        RfStatus::Domain => c"argument rejected",
        RfStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// Message for the most recent failure on this thread, or `""`. Valid until
/// the next call from the same thread.
#[no_mangle]
pub extern "C" fn rf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
