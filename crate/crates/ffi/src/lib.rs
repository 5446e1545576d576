//! C ABI over `forestpoly`.
//!
//! Graphs and polynomials cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Strings returned
//! through `char **` out-parameters are owned by the caller and released
//! with [`fp_string_free`]. Every fallible call returns an [`FpStatus`];
//! on failure [`fp_last_error_message`] describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use forestpoly::bijection::{phi, psi, PairAFile, PairBFile};
use forestpoly::forest::f_poly;
use forestpoly::oracle::spanning_tree_count;
use forestpoly::reciprocity::{reciprocity_rhs, verify_reciprocity};
use forestpoly::{Graph, Polynomial};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Panic = 4,
}

/// Opaque graph handle.
pub struct FpGraph(Graph);

/// Opaque polynomial handle.
pub struct FpPolynomial(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

struct Failure(FpStatus, String);

impl From<forestpoly::Error> for Failure {
    fn from(e: forestpoly::Error) -> Self {
        Failure(FpStatus::InvalidInput, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(FpStatus::InvalidInput, format!("json: {e}"))
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> FpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FpStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FpStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(FpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a nul-terminated string that outlives the call.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Failure(FpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: out is non-null and points to writable storage for a pointer.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output string pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(FpStatus::InvalidInput, "nul in output".into()))?;
    // SAFETY: out is non-null.
    unsafe { *out = c.into_raw() };
    Ok(())
}

unsafe fn graph_ref<'a>(g: *const FpGraph) -> Result<&'a Graph, Failure> {
    // SAFETY: a non-null handle came from this library and is still live.
    unsafe { g.as_ref() }.map(|h| &h.0).ok_or_else(|| null("graph handle"))
}

unsafe fn poly_ref<'a>(p: *const FpPolynomial) -> Result<&'a Polynomial, Failure> {
    // SAFETY: as for graph_ref.
    unsafe { p.as_ref() }.map(|h| &h.0).ok_or_else(|| null("polynomial handle"))
}

/// Message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: s came from CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses `{"n": ..., "edges": [[u, v], ...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_from_json(json: *const c_char, out: *mut *mut FpGraph) -> FpStatus {
    guard(|| unsafe {
        let g = Graph::from_json(read_str(json, "json")?)?;
        write_out(out, FpGraph(g), "output graph pointer")
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (or may be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut FpGraph,
) -> FpStatus {
    guard(|| unsafe {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        write_out(out, FpGraph(g), "output graph pointer")
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_complement(g: *const FpGraph, out: *mut *mut FpGraph) -> FpStatus {
    guard(|| unsafe {
        let c = graph_ref(g)?.complement();
        write_out(out, FpGraph(c), "output graph pointer")
    })
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_vertex_count(g: *const FpGraph) -> usize {
    // SAFETY: see above.
    unsafe { g.as_ref() }.map_or(0, |h| h.0.n())
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_to_json(g: *const FpGraph, out: *mut *mut c_char) -> FpStatus {
    guard(|| unsafe { write_string(out, graph_ref(g)?.to_json()) })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_free(g: *mut FpGraph) {
    if !g.is_null() {
        // SAFETY: g came from Box::into_raw in this library.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// The spanning rooted forest polynomial of `g`, by exhaustive enumeration.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_forest_polynomial(g: *const FpGraph, out: *mut *mut FpPolynomial) -> FpStatus {
    guard(|| unsafe {
        let f = f_poly(graph_ref(g)?);
        write_out(out, FpPolynomial(f), "output polynomial pointer")
    })
}

/// The right-hand side of the reciprocity identity for `g`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_reciprocity_rhs(g: *const FpGraph, out: *mut *mut FpPolynomial) -> FpStatus {
    guard(|| unsafe {
        let p = reciprocity_rhs(graph_ref(g)?);
        write_out(out, FpPolynomial(p), "output polynomial pointer")
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_verify_reciprocity(g: *const FpGraph, out: *mut bool) -> FpStatus {
    guard(|| unsafe {
        let pass = verify_reciprocity(graph_ref(g)?);
        *out.as_mut().ok_or_else(|| null("output flag"))? = pass;
        Ok(())
    })
}

/// Spanning tree count of `g` itself as a decimal string.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_spanning_tree_count(g: *const FpGraph, out: *mut *mut c_char) -> FpStatus {
    guard(|| unsafe { write_string(out, spanning_tree_count(graph_ref(g)?).to_string()) })
}

/// Canonical text form, e.g. `x + x1 + x2`.
///
/// # Safety
/// `p` must be a live polynomial handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_polynomial_to_string(p: *const FpPolynomial, out: *mut *mut c_char) -> FpStatus {
    guard(|| unsafe { write_string(out, poly_ref(p)?.to_string()) })
}

/// Evaluates at `values[0..len]` (`x` first) and writes the exact value as
/// a decimal string.
///
/// # Safety
/// `p` must be a live polynomial handle, `values` must point to `len`
/// integers, `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_polynomial_evaluate(
    p: *const FpPolynomial,
    values: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> FpStatus {
    guard(|| unsafe {
        let poly = poly_ref(p)?;
        if values.is_null() && len > 0 {
            return Err(null("values"));
        }
        let point = if len == 0 { &[][..] } else { std::slice::from_raw_parts(values, len) };
        write_string(out, poly.evaluate(point)?.to_string())
    })
}

/// # Safety
/// `a` and `b` must be live polynomial handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_polynomial_equal(
    a: *const FpPolynomial,
    b: *const FpPolynomial,
    out: *mut bool,
) -> FpStatus {
    guard(|| unsafe {
        let eq = poly_ref(a)? == poly_ref(b)?;
        *out.as_mut().ok_or_else(|| null("output flag"))? = eq;
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_polynomial_free(p: *mut FpPolynomial) {
    if !p.is_null() {
        // SAFETY: p came from Box::into_raw in this library.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Applies `phi` to an A pair document and writes the B pair document.
///
/// # Safety
/// `pair_a_json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_phi_json(pair_a_json: *const c_char, out: *mut *mut c_char) -> FpStatus {
    guard(|| unsafe {
        let file: PairAFile = serde_json::from_str(read_str(pair_a_json, "pair json")?)?;
        let (g, a) = file.into_pair()?;
        let b = phi(&g, &a)?;
        write_string(out, serde_json::to_string(&PairBFile::new(&g, &b))?)
    })
}

/// Applies `psi` to a B pair document and writes the A pair document.
///
/// # Safety
/// `pair_b_json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_psi_json(pair_b_json: *const c_char, out: *mut *mut c_char) -> FpStatus {
    guard(|| unsafe {
        let file: PairBFile = serde_json::from_str(read_str(pair_b_json, "pair json")?)?;
        let (g, b) = file.into_pair()?;
        let a = psi(&g, &b)?;
        write_string(out, serde_json::to_string(&PairAFile::new(&g, &a))?)
    })
}
