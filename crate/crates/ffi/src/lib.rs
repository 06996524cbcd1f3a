// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! C ABI over `compass-core`.
//!
//! Every fallible function returns a [`CompassStatus`] and writes its result
//! through an out pointer. On failure, [`compass_last_error`] describes the
//! most recent error on the calling thread. Strings returned by the library
//! are released with [`compass_string_free`]; handles with their own
//! `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use compass_core::constructibility::{gauss_constructible, Refusal};
use compass_core::construct::{construct_polygon, verify_regular, ConstructionTrace, Polygon};
use compass_core::render::{render_svg, RenderConfig};
use compass_core::trig::{exact_sin_cos, ExactAngle};
use compass_core::{Constructible, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompassStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DivisionByZero = 4,
    NegativeSqrt = 5,
    UnsupportedPolygon = 6,
    OffGrid = 7,
    OutOfRange = 8,
    InvalidArgument = 9,
    Geometry = 10,
    Panic = 11,
}

/// An exact constructible real.
pub struct CompassValue(Constructible);

/// A constructed regular polygon together with its trace.
pub struct CompassPolygon {
    polygon: Polygon,
    trace: ConstructionTrace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CompassStatus {
    match e {
        Error::Parse { .. } => CompassStatus::Parse,
        Error::DivisionByZero => CompassStatus::DivisionByZero,
        Error::NegativeSqrt => CompassStatus::NegativeSqrt,
        Error::UnsupportedPolygon(_) => CompassStatus::UnsupportedPolygon,
        Error::OffGrid(_) => CompassStatus::OffGrid,
        Error::TooFewSides(_) | Error::NoPrimeFactor(_) | Error::InvalidArgument(_) | Error::TangentUndefined => {
            CompassStatus::InvalidArgument
        }
        _ => CompassStatus::Geometry,
    }
}

struct Fail(CompassStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(CompassStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CompassStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CompassStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CompassStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(CompassStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn value<'a>(v: *const CompassValue, what: &str) -> Result<&'a Constructible, Fail> {
    v.as_ref().map(|v| &v.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

fn boxed(v: Constructible) -> *mut CompassValue {
    Box::into_raw(Box::new(CompassValue(v)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(CompassStatus::InvalidArgument, "interior nul byte".into()))?;
    put(out, c.into_raw())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn compass_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn compass_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the canonical text form (`p/q`, `(a + b*sqrt(r))`).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_parse(text: *const c_char, out: *mut *mut CompassValue) -> CompassStatus {
    guard(|| {
        let v: Constructible = read_str(text, "text")?.parse()?;
        put(out, boxed(v))
    })
}

/// The rational `numer / denom`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_from_ratio(numer: i64, denom: i64, out: *mut *mut CompassValue) -> CompassStatus {
    guard(|| put(out, boxed(Constructible::from_ratio(numer, denom)?)))
}

/// Releases a value. Null is ignored.
///
/// # Safety
/// `v` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn compass_value_free(v: *mut CompassValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompassOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// `a op b`.
///
/// # Safety
/// `a`, `b` must be live values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_arith(
    op: CompassOp,
    a: *const CompassValue,
    b: *const CompassValue,
    out: *mut *mut CompassValue,
) -> CompassStatus {
    guard(|| {
        let (a, b) = (value(a, "a")?, value(b, "b")?);
        let r = match op {
            CompassOp::Add => a + b,
            CompassOp::Sub => a - b,
            CompassOp::Mul => a * b,
            CompassOp::Div => a.checked_div(b)?,
        };
        put(out, boxed(r))
    })
}

/// Non-negative square root.
///
/// # Safety
/// `a` must be a live value; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_sqrt(a: *const CompassValue, out: *mut *mut CompassValue) -> CompassStatus {
    guard(|| put(out, boxed(value(a, "a")?.sqrt()?)))
}

/// Exact sign: -1, 0 or 1.
///
/// # Safety
/// `a` must be a live value; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_sign(a: *const CompassValue, out: *mut i32) -> CompassStatus {
    guard(|| put(out, value(a, "a")?.signum()))
}

/// Exact comparison: -1, 0 or 1.
///
/// # Safety
/// `a`, `b` must be live values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_compare(
    a: *const CompassValue,
    b: *const CompassValue,
    out: *mut i32,
) -> CompassStatus {
    guard(|| {
        let ord = value(a, "a")?.cmp(value(b, "b")?);
        put(out, ord as i32)
    })
}

/// Canonical text form; release with `compass_string_free`.
///
/// # Safety
/// `a` must be a live value; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_to_string(a: *const CompassValue, out: *mut *mut c_char) -> CompassStatus {
    guard(|| put_string(out, value(a, "a")?.to_string()))
}

/// Radical notation such as `√(10 - 2√5)/4`.
///
/// # Safety
/// `a` must be a live value; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_pretty(a: *const CompassValue, out: *mut *mut c_char) -> CompassStatus {
    guard(|| put_string(out, value(a, "a")?.pretty()))
}

/// Correctly rounded decimal with `digits` places.
///
/// # Safety
/// `a` must be a live value; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_value_approx(
    a: *const CompassValue,
    digits: u32,
    out: *mut *mut c_char,
) -> CompassStatus {
    guard(|| put_string(out, value(a, "a")?.approx(digits)))
}

/// Exact sine and cosine of an angle in degrees given as text (`36`,
/// `7.5`, `15/2`).
///
/// # Safety
/// `angle` must be a nul-terminated string; `sin_out`, `cos_out` writable.
#[no_mangle]
pub unsafe extern "C" fn compass_sin_cos(
    angle: *const c_char,
    sin_out: *mut *mut CompassValue,
    cos_out: *mut *mut CompassValue,
) -> CompassStatus {
    guard(|| {
        let a: ExactAngle = read_str(angle, "angle")?.parse()?;
        if sin_out.is_null() || cos_out.is_null() {
            return Err(null("output pointer"));
        }
        let (s, c) = exact_sin_cos(a);
        put(sin_out, boxed(s))?;
        put(cos_out, boxed(c))
    })
}

/// Gauss-Wantzel verdict. `witness` receives the offending prime, or 0
/// when constructible.
///
/// # Safety
/// `constructible` and `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_gauss_constructible(
    n: u64,
    constructible: *mut bool,
    witness: *mut u64,
) -> CompassStatus {
    guard(|| {
        let v = gauss_constructible(n)?;
        put(constructible, v.constructible)?;
        put(witness, v.refusal.as_ref().map_or(0, Refusal::witness))
    })
}

/// Constructs the regular n-gon for n in {3, 4, 5, 6, 10, 20}.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_construct(n: u64, out: *mut *mut CompassPolygon) -> CompassStatus {
    guard(|| {
        let (polygon, trace) = construct_polygon(n)?;
        put(out, Box::into_raw(Box::new(CompassPolygon { polygon, trace })))
    })
}

/// Releases a polygon. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_free(p: *mut CompassPolygon) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn polygon<'a>(p: *const CompassPolygon) -> Result<&'a CompassPolygon, Fail> {
    p.as_ref().ok_or_else(|| null("polygon"))
}

/// Number of vertices.
///
/// # Safety
/// `p` must be a live polygon; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_vertex_count(p: *const CompassPolygon, out: *mut usize) -> CompassStatus {
    guard(|| put(out, polygon(p)?.polygon.n()))
}

/// Coordinates of vertex `index`, counterclockwise from (1, 0).
///
/// # Safety
/// `p` must be a live polygon; `x_out`, `y_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_vertex(
    p: *const CompassPolygon,
    index: usize,
    x_out: *mut *mut CompassValue,
    y_out: *mut *mut CompassValue,
) -> CompassStatus {
    guard(|| {
        let poly = &polygon(p)?.polygon;
        let v = poly.vertices().get(index).ok_or_else(|| {
            Fail(CompassStatus::OutOfRange, format!("vertex {index} of {}", poly.n()))
        })?;
        if x_out.is_null() || y_out.is_null() {
            return Err(null("output pointer"));
        }
        put(x_out, boxed(v.x.clone()))?;
        put(y_out, boxed(v.y.clone()))
    })
}

/// Whether every exact regularity check passes.
///
/// # Safety
/// `p` must be a live polygon; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_verify(p: *const CompassPolygon, out: *mut bool) -> CompassStatus {
    guard(|| put(out, verify_regular(&polygon(p)?.polygon).all_passed()))
}

/// The construction trace as JSON.
///
/// # Safety
/// `p` must be a live polygon; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_trace_json(p: *const CompassPolygon, out: *mut *mut c_char) -> CompassStatus {
    guard(|| put_string(out, polygon(p)?.trace.to_json_string()))
}

/// The construction diagram as SVG with default settings.
///
/// # Safety
/// `p` must be a live polygon; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compass_polygon_svg(p: *const CompassPolygon, out: *mut *mut c_char) -> CompassStatus {
    guard(|| {
        let svg = render_svg(&polygon(p)?.trace, &RenderConfig::default())?;
        put_string(out, svg)
    })
}
