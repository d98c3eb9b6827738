//! C ABI over `toric-bounds`.
//!
//! Polygons cross the boundary as opaque `TbPolygon` handles. Every function
//! returns a `TbStatus`; results come back through out-pointers. Rationals and
//! structured results are returned as NUL-terminated JSON/rational strings that
//! the caller releases with `tb_string_free`. After a non-`TB_STATUS_OK` return,
//! `tb_last_error_message` describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_bounds::{json, Error, Polygon};

/// Result code of every `tb_*` call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DegenerateInput = 4,
    InvalidArgument = 5,
    VerificationFailed = 6,
    Panic = 7,
}

/// Opaque polygon handle.
pub struct TbPolygon {
    inner: Polygon,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(TbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => TbStatus::ParseError,
            Error::DegenerateInput(_) => TbStatus::DegenerateInput,
            e if e.is_verification_failure() => TbStatus::VerificationFailed,
            _ => TbStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(TbStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TbStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            TbStatus::Panic
        }
    }
}

unsafe fn polygon_ref<'a>(p: *const TbPolygon, what: &str) -> Result<&'a Polygon, Failure> {
    // SAFETY: caller passes a live handle from `tb_polygon_*` or null.
    unsafe { p.as_ref() }.map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn write_polygon(out: *mut *mut TbPolygon, p: Polygon) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: checked non-null; caller owns the slot.
    unsafe { *out = Box::into_raw(Box::new(TbPolygon { inner: p })) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(TbStatus::Panic, "interior NUL".into()))?;
    // SAFETY: checked non-null.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from a `tb_*` out-parameter and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tb_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in write_string.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Releases a polygon handle. NULL is ignored.
///
/// # Safety
/// `p` must come from a `tb_polygon_*` constructor and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_free(p: *mut TbPolygon) {
    if !p.is_null() {
        // SAFETY: produced by Box::into_raw in write_polygon.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Parses polygon JSON (`{"vertices": [["p/q", "p/q"], ...]}`) into its
/// canonical convex hull.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_from_json(json: *const c_char, out: *mut *mut TbPolygon) -> TbStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        // SAFETY: caller guarantees NUL termination.
        let text =
            unsafe { CStr::from_ptr(json) }.to_str().map_err(|e| Failure(TbStatus::InvalidUtf8, e.to_string()))?;
        let p = json::polygon_from_json(text)?;
        unsafe { write_polygon(out, p) }
    })
}

/// Convex hull of `len` lattice points `(xs[i], ys[i])`.
///
/// # Safety
/// `xs` and `ys` must point to `len` readable values each.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_from_lattice_points(
    xs: *const i64,
    ys: *const i64,
    len: usize,
    out: *mut *mut TbPolygon,
) -> TbStatus {
    guard(|| {
        if xs.is_null() || ys.is_null() {
            return Err(null("coordinates"));
        }
        // SAFETY: caller guarantees `len` readable elements.
        let (xs, ys) = unsafe { (std::slice::from_raw_parts(xs, len), std::slice::from_raw_parts(ys, len)) };
        let pts: Vec<(i64, i64)> = xs.iter().copied().zip(ys.iter().copied()).collect();
        let p = Polygon::from_integer_points(&pts)?;
        unsafe { write_polygon(out, p) }
    })
}

/// The triangle `P0 = conv{(1,0), (0,1), (-1,-1)}`.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_p0(out: *mut *mut TbPolygon) -> TbStatus {
    guard(|| unsafe { write_polygon(out, toric_bounds::p0()) })
}

/// `Q_k = k·P0 + Q0`, cross-checked against its closed-form vertex list.
///
/// # Safety
/// `out` must be a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_qk(k: u64, out: *mut *mut TbPolygon) -> TbStatus {
    guard(|| {
        let p = toric_bounds::family::qk_polygon(k)?;
        unsafe { write_polygon(out, p) }
    })
}

/// Minkowski sum of two polygons as a new handle.
///
/// # Safety
/// `p`, `q` must be live handles; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_minkowski_sum(
    p: *const TbPolygon,
    q: *const TbPolygon,
    out: *mut *mut TbPolygon,
) -> TbStatus {
    guard(|| {
        let (p, q) = unsafe { (polygon_ref(p, "p")?, polygon_ref(q, "q")?) };
        unsafe { write_polygon(out, p.minkowski_sum(q)) }
    })
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_vertex_count(p: *const TbPolygon, out: *mut usize) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = p.len() };
        Ok(())
    })
}

/// Canonical polygon JSON.
///
/// # Safety
/// `p` must be a live handle; `out` a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_to_json(p: *const TbPolygon, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        unsafe { write_string(out, json::polygon(p).to_string()) }
    })
}

/// Exact area as a rational string.
///
/// # Safety
/// `p` must be a live handle; `out` a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_polygon_area(p: *const TbPolygon, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        unsafe { write_string(out, p.area().to_string()) }
    })
}

/// Width certificate JSON: `{"width":"p/q","direction":[a,b],"search_bound":B,...}`.
///
/// # Safety
/// `p` must be a live handle; `out` a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_lattice_width(p: *const TbPolygon, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        let cert = toric_bounds::lattice_width(p);
        unsafe { write_string(out, json::certificate(&cert).to_string()) }
    })
}

/// Mixed degree `area(P+Q) - area(P) - area(Q)` as a rational string.
///
/// # Safety
/// `p`, `q` must be live handles; `out` a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_mixed_degree(p: *const TbPolygon, q: *const TbPolygon, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let (p, q) = unsafe { (polygon_ref(p, "p")?, polygon_ref(q, "q")?) };
        unsafe { write_string(out, toric_bounds::mixed_degree(p, q).to_string()) }
    })
}

/// Normal fan JSON: `{"rays":[{"normal":[a,b],"support":"p/q"}, ...]}`.
///
/// # Safety
/// `p` must be a live handle; `out` a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_normal_fan(p: *const TbPolygon, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        unsafe { write_string(out, json::fan(&toric_bounds::normal_fan(p)).to_string()) }
    })
}

/// Delzant check. `out_detail` may be NULL; otherwise it receives JSON listing
/// the failing vertices and their determinants.
///
/// # Safety
/// `p` must be a live handle; `out_is_delzant` writable; `out_detail` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tb_delzant_check(
    p: *const TbPolygon,
    out_is_delzant: *mut bool,
    out_detail: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        if out_is_delzant.is_null() {
            return Err(null("out_is_delzant"));
        }
        let report = toric_bounds::delzant_check(p);
        unsafe { *out_is_delzant = report.is_delzant };
        if !out_detail.is_null() {
            unsafe { write_string(out_detail, json::delzant(&report).to_string())? };
        }
        Ok(())
    })
}

/// Equivalence with `t·P0`. On a match `*out_found` is true and `out_witness`
/// (if non-NULL) receives `{"t":..,"matrix":..,"translation":..}`; otherwise it
/// is set to NULL.
///
/// # Safety
/// `p` must be a live handle; `out_found` writable; `out_witness` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tb_equiv_p0(
    p: *const TbPolygon,
    out_found: *mut bool,
    out_witness: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        if out_found.is_null() {
            return Err(null("out_found"));
        }
        let w = toric_bounds::equiv_scaled_p0(p);
        unsafe { *out_found = w.is_some() };
        if !out_witness.is_null() {
            match w {
                Some(w) => unsafe { write_string(out_witness, json::witness(&w).to_string())? },
                None => unsafe { *out_witness = ptr::null_mut() },
            }
        }
        Ok(())
    })
}

/// Full bounds report as JSON.
///
/// # Safety
/// `p` must be a live handle; `out` a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_bounds_report(p: *const TbPolygon, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let p = unsafe { polygon_ref(p, "p")? };
        unsafe { write_string(out, json::report(&toric_bounds::bounds_report(p)).to_string()) }
    })
}

/// Seshadri chain for `Q_k` (`k ≥ 1`) as JSON.
///
/// # Safety
/// `out` must be a writable string slot.
#[no_mangle]
pub unsafe extern "C" fn tb_qk_seshadri_chain(k: u64, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        let chain = toric_bounds::qk_seshadri_chain(k)?;
        unsafe { write_string(out, json::seshadri_chain(&chain).to_string()) }
    })
}
