//! C bindings for the witt12 library: opaque handles, integer status
//! codes, and the design file format as NUL-terminated UTF-8 text. The
//! header `include/witt12.h` is generated from this file at build time.
//!
//! Ownership: every `*_new` hands out a handle the caller releases with
//! the matching `*_free`; exported text is released with
//! [`witt12_string_free`]. Freeing null is a no-op. All other functions
//! report `WITT12_NULL_ARGUMENT` on null pointers, and no panic ever
//! unwinds across the boundary.

#![allow(non_camel_case_types)]

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use witt12::checker::{read_design, verify_steiner, write_design};
use witt12::error::Error;
use witt12::{aut_group_summary, census, Plane, WittDesign};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum witt12_status {
    WITT12_OK = 0,
    /// A required pointer argument was null.
    WITT12_NULL_ARGUMENT = 1,
    /// An argument was out of range or structurally invalid.
    WITT12_INVALID_ARGUMENT = 2,
    /// The operation needs a different plane order (most need q = 3).
    WITT12_UNSUPPORTED_ORDER = 3,
    /// The design file text did not parse.
    WITT12_PARSE_ERROR = 4,
    /// The input is not the required Steiner system.
    WITT12_NOT_STEINER = 5,
    /// The exhaustive scan would exceed the built-in guard.
    WITT12_TOO_LARGE = 6,
    /// An internal invariant failed (a bug; please report).
    WITT12_INTERNAL = 7,
}

use witt12_status::*;

/// Opaque handle to a projective plane PG(2,q).
pub struct witt12_plane {
    inner: Plane,
}

/// Opaque handle to the small Witt design S(5,6,12).
pub struct witt12_design {
    inner: WittDesign,
}

fn status_of(e: &Error) -> witt12_status {
    match e {
        Error::UnsupportedOrder(_) | Error::OrderThreeOnly { .. } => WITT12_UNSUPPORTED_ORDER,
        Error::Parse { .. } => WITT12_PARSE_ERROR,
        Error::NotSteiner(_) | Error::LambdaMismatch { .. } | Error::NonIntegralLambda { .. } => {
            WITT12_NOT_STEINER
        }
        Error::GuardExceeded { .. } => WITT12_TOO_LARGE,
        Error::Invariant(_) => WITT12_INTERNAL,
        _ => WITT12_INVALID_ARGUMENT,
    }
}

/// A panic must not unwind into C; report it as an internal error.
fn guarded(f: impl FnOnce() -> witt12_status + UnwindSafe) -> witt12_status {
    catch_unwind(f).unwrap_or(WITT12_INTERNAL)
}

/// A static description of a status code; never null.
#[no_mangle]
pub extern "C" fn witt12_status_message(status: c_int) -> *const c_char {
    let msg: &CStr = match status {
        0 => c"ok",
        1 => c"a required pointer argument was null",
        2 => c"an argument was out of range or structurally invalid",
        3 => c"the operation needs a different plane order",
        4 => c"the design file text did not parse",
        5 => c"the input is not the required Steiner system",
        6 => c"the exhaustive scan would exceed the built-in guard",
        7 => c"an internal invariant failed",
        _ => c"unknown status code",
    };
    msg.as_ptr()
}

/// Builds PG(2,q) for a prime q <= 7 and stores the handle in `*out`.
#[no_mangle]
pub unsafe extern "C" fn witt12_plane_new(q: u8, out: *mut *mut witt12_plane) -> witt12_status {
    if out.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    guarded(|| match Plane::build(q) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(witt12_plane { inner })) };
            WITT12_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a plane handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn witt12_plane_free(plane: *mut witt12_plane) {
    if !plane.is_null() {
        drop(unsafe { Box::from_raw(plane) });
    }
}

/// The plane order q, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn witt12_plane_order(plane: *const witt12_plane) -> u8 {
    unsafe { plane.as_ref() }.map_or(0, |p| p.inner.order())
}

/// The number of points (= lines) of the plane, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn witt12_plane_point_count(plane: *const witt12_plane) -> u32 {
    unsafe { plane.as_ref() }.map_or(0, |p| p.inner.point_count() as u32)
}

/// Classifies all 1716 six-point subsets of PG(2,3). `counts` must point
/// to four u64 slots, filled with the totals for types 1..4; `total`
/// (optional) receives their sum.
#[no_mangle]
pub unsafe extern "C" fn witt12_census(
    plane: *const witt12_plane,
    counts: *mut u64,
    total: *mut u64,
) -> witt12_status {
    let Some(plane) = (unsafe { plane.as_ref() }) else {
        return WITT12_NULL_ARGUMENT;
    };
    if counts.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    guarded(|| match census(&plane.inner) {
        Ok(report) => {
            for (i, c) in report.counts.iter().enumerate() {
                unsafe { *counts.add(i) = *c };
            }
            if let Some(total) = unsafe { total.as_mut() } {
                *total = report.total;
            }
            WITT12_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Builds S(5,6,12) from the plane (q = 3 only) with distinguished point
/// `u` removed, and stores the handle in `*out`.
#[no_mangle]
pub unsafe extern "C" fn witt12_design_new(
    plane: *const witt12_plane,
    u: u8,
    out: *mut *mut witt12_design,
) -> witt12_status {
    let Some(plane) = (unsafe { plane.as_ref() }) else {
        return WITT12_NULL_ARGUMENT;
    };
    if out.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    guarded(|| match WittDesign::build(&plane.inner, u) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(witt12_design { inner })) };
            WITT12_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a design handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn witt12_design_free(design: *mut witt12_design) {
    if !design.is_null() {
        drop(unsafe { Box::from_raw(design) });
    }
}

/// The number of blocks (132), or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn witt12_design_block_count(design: *const witt12_design) -> u32 {
    unsafe { design.as_ref() }.map_or(0, |d| d.inner.blocks().len() as u32)
}

/// Per-type block counts. `counts` must point to three u32 slots,
/// filled with the A/B/C totals (36, 42, 54).
#[no_mangle]
pub unsafe extern "C" fn witt12_design_type_counts(
    design: *const witt12_design,
    counts: *mut u32,
) -> witt12_status {
    let Some(design) = (unsafe { design.as_ref() }) else {
        return WITT12_NULL_ARGUMENT;
    };
    if counts.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    for (i, c) in design.inner.block_counts().iter().enumerate() {
        unsafe { *counts.add(i) = *c as u32 };
    }
    WITT12_OK
}

/// Serializes the design to the design file format as a NUL-terminated
/// UTF-8 string in `*out`; release it with [`witt12_string_free`].
#[no_mangle]
pub unsafe extern "C" fn witt12_design_export(
    design: *const witt12_design,
    out: *mut *mut c_char,
) -> witt12_status {
    let Some(design) = (unsafe { design.as_ref() }) else {
        return WITT12_NULL_ARGUMENT;
    };
    if out.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    guarded(|| {
        let text = write_design(&design.inner.to_design());
        // the format is pure ASCII: no interior NUL possible
        let c = CString::new(text).expect("design text has no NUL bytes");
        unsafe { *out = c.into_raw() };
        WITT12_OK
    })
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn witt12_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses design file text and exhaustively checks whether every t-set
/// lies in exactly one block. `*is_steiner` receives 1 or 0;
/// `failure_count` (optional) receives the number of offending t-sets.
/// A completed check reports `WITT12_OK` even when the design fails it.
#[no_mangle]
pub unsafe extern "C" fn witt12_verify_text(
    text: *const c_char,
    t: usize,
    is_steiner: *mut c_int,
    failure_count: *mut u64,
) -> witt12_status {
    if text.is_null() || is_steiner.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    let Ok(text) = (unsafe { CStr::from_ptr(text) }).to_str() else {
        return WITT12_PARSE_ERROR;
    };
    guarded(|| {
        let design = match read_design(text) {
            Ok(d) => d,
            Err(e) => return status_of(&e),
        };
        match verify_steiner(&design, t) {
            Ok(report) => {
                unsafe { *is_steiner = report.is_steiner.into() };
                if let Some(failure_count) = unsafe { failure_count.as_mut() } {
                    *failure_count = report.failure_count;
                }
                WITT12_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Enumerates the automorphism group of the design: `*order` receives
/// the group order (95040) and `sharply_5_transitive` (optional)
/// receives 1 iff every ordered 5-tuple pair is linked by exactly one
/// automorphism. Runs the full 95040-tuple search; takes a moment.
#[no_mangle]
pub unsafe extern "C" fn witt12_autgroup(
    design: *const witt12_design,
    order: *mut u64,
    sharply_5_transitive: *mut c_int,
) -> witt12_status {
    let Some(design) = (unsafe { design.as_ref() }) else {
        return WITT12_NULL_ARGUMENT;
    };
    if order.is_null() {
        return WITT12_NULL_ARGUMENT;
    }
    guarded(|| match aut_group_summary(&design.inner.to_design()) {
        Ok(summary) => {
            unsafe { *order = summary.order };
            if let Some(flag) = unsafe { sharply_5_transitive.as_mut() } {
                *flag = summary.sharply_5_transitive.into();
            }
            WITT12_OK
        }
        Err(e) => status_of(&e),
    })
}
