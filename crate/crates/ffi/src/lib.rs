//! C ABI over the oddcolor library.
//!
//! Graphs and colorings are opaque handles; every fallible call returns an
//! [`OcStatus`] and writes its result through an out-pointer.  On failure the
//! message is kept in thread-local storage and can be read back with
//! [`oc_last_error_message`] until the next failing call on the same thread.
//!
//! The matching header is generated into `include/oddcolor.h` at build time.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use oddcolor::chord::generate_gn;
use oddcolor::exact::{exact_chi_io, exact_chi_o, SearchBudget};
use oddcolor::graph::Graph;
use oddcolor::odd_color::{greedy_proper_color, improper_odd_color, product_odd_color};
use oddcolor::Error;

/// Result code of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Resource = 4,
    Budget = 5,
    Method = 6,
    Infeasible = 7,
    Internal = 8,
}

/// An undirected simple graph.
pub struct OcGraph {
    graph: Graph,
}

/// A vertex coloring; colors are 1-based, 0 means uncolored.
pub struct OcColoring {
    colors: Vec<u32>,
    num_colors: u32,
    proper: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(err: &Error) -> OcStatus {
    let text = err.to_string();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(text.replace('\0', "?")).unwrap();
    });
    match err {
        Error::InvalidInput(_) => OcStatus::InvalidInput,
        Error::Parse(_) => OcStatus::Parse,
        Error::Resource(_) => OcStatus::Resource,
        Error::Budget { .. } => OcStatus::Budget,
        Error::Method(_) => OcStatus::Method,
        Error::Infeasible(_) => OcStatus::Infeasible,
        Error::Internal(_) | Error::Io(_) => OcStatus::Internal,
    }
}

fn fail_null() -> OcStatus {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new("null pointer argument").unwrap();
    });
    OcStatus::NullPointer
}

/// Runs `body`, converting panics into `Internal` so they never unwind
/// across the C boundary.
fn guarded(body: impl FnOnce() -> OcStatus) -> OcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(&Error::Internal("caught panic".into())),
    }
}

fn budget_from(max_nodes: u64) -> SearchBudget {
    let mut budget = SearchBudget::default();
    if max_nodes > 0 {
        budget.max_nodes = max_nodes;
    }
    budget
}

/// Message of the most recent failure on this thread, as a NUL-terminated
/// string.  The pointer stays valid until the next failing call here.
#[no_mangle]
pub extern "C" fn oc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `m` edges given as `2*m` endpoints
/// `(u0, v0, u1, v1, ...)`.  Loops and repeated edges are rejected.
///
/// # Safety
/// `endpoints` must point to `2*m` readable values (or be unused when
/// `m == 0`), and `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut OcGraph,
) -> OcStatus {
    if out.is_null() || (endpoints.is_null() && m > 0) {
        return fail_null();
    }
    let ends = if m == 0 { &[][..] } else { std::slice::from_raw_parts(endpoints, 2 * m) };
    guarded(|| {
        let edges: Vec<(usize, usize)> = ends.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::from_edges(n, &edges) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(OcGraph { graph }));
                OcStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds the circle graph of the n-cluster chord construction.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_gn(n: usize, out: *mut *mut OcGraph) -> OcStatus {
    if out.is_null() {
        return fail_null();
    }
    guarded(|| match generate_gn(n) {
        Ok(instance) => {
            *out = Box::into_raw(Box::new(OcGraph { graph: instance.graph().clone() }));
            OcStatus::Ok
        }
        Err(e) => fail(&e),
    })
}

/// # Safety
/// `g` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_free(g: *mut OcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_vertex_count(g: *const OcGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).graph.n()
}

/// # Safety
/// `g` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_graph_edge_count(g: *const OcGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).graph.m()
}

unsafe fn exact_value(
    g: *const OcGraph,
    max_nodes: u64,
    out: *mut u32,
    run: impl Fn(&Graph, SearchBudget) -> oddcolor::Result<u32>,
) -> OcStatus {
    if g.is_null() || out.is_null() {
        return fail_null();
    }
    let graph = &(*g).graph;
    guarded(|| match run(graph, budget_from(max_nodes)) {
        Ok(value) => {
            *out = value;
            OcStatus::Ok
        }
        Err(e) => fail(&e),
    })
}

/// Exact proper odd chromatic number.  `max_nodes` limits the search
/// (0 means the default limit); an exhausted budget reports `Budget`.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_exact_chi_o(
    g: *const OcGraph,
    max_nodes: u64,
    out: *mut u32,
) -> OcStatus {
    exact_value(g, max_nodes, out, |graph, budget| Ok(exact_chi_o(graph, budget)?.value))
}

/// Exact improper odd chromatic number (isolated vertices exempt).
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_exact_chi_io(
    g: *const OcGraph,
    max_nodes: u64,
    out: *mut u32,
) -> OcStatus {
    exact_value(g, max_nodes, out, |graph, budget| Ok(exact_chi_io(graph, budget)?.value))
}

/// Improper odd coloring: every vertex with a neighbor sees some color an
/// odd number of times, monochromatic edges allowed.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_improper_odd_color(
    g: *const OcGraph,
    out: *mut *mut OcColoring,
) -> OcStatus {
    if g.is_null() || out.is_null() {
        return fail_null();
    }
    let graph = &(*g).graph;
    guarded(|| match improper_odd_color(graph) {
        Ok(res) => {
            *out = Box::into_raw(Box::new(OcColoring {
                colors: res.colors,
                num_colors: res.num_colors,
                proper: false,
            }));
            OcStatus::Ok
        }
        Err(e) => fail(&e),
    })
}

/// Proper odd coloring, built as the product of a greedy proper coloring
/// and an improper odd coloring.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_proper_odd_color(
    g: *const OcGraph,
    out: *mut *mut OcColoring,
) -> OcStatus {
    if g.is_null() || out.is_null() {
        return fail_null();
    }
    let graph = &(*g).graph;
    guarded(|| {
        let attempt = improper_odd_color(graph)
            .and_then(|imp| product_odd_color(graph, &greedy_proper_color(graph), &imp.colors));
        match attempt {
            Ok(res) => {
                *out = Box::into_raw(Box::new(OcColoring {
                    colors: res.colors,
                    num_colors: res.num_colors,
                    proper: true,
                }));
                OcStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `c` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_free(c: *mut OcColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of vertices the coloring covers.
///
/// # Safety
/// `c` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_len(c: *const OcColoring) -> usize {
    if c.is_null() {
        return 0;
    }
    (*c).colors.len()
}

/// Number of distinct colors used.
///
/// # Safety
/// `c` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_num_colors(c: *const OcColoring) -> u32 {
    if c.is_null() {
        return 0;
    }
    (*c).num_colors
}

/// 1 when no edge is monochromatic, 0 otherwise.
///
/// # Safety
/// `c` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_is_proper(c: *const OcColoring) -> i32 {
    if c.is_null() {
        return 0;
    }
    (*c).proper as i32
}

/// Color of vertex `v`, or 0 when `v` is out of range or uncolored.
///
/// # Safety
/// `c` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_get(c: *const OcColoring, v: usize) -> u32 {
    if c.is_null() {
        return 0;
    }
    let coloring = &*c;
    coloring.colors.get(v).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;
    use std::ptr;

    fn last_error() -> String {
        unsafe { CStr::from_ptr(oc_last_error_message()) }.to_string_lossy().into_owned()
    }

    fn c4() -> *mut OcGraph {
        let ends = [0usize, 1, 1, 2, 2, 3, 3, 0];
        let mut g = ptr::null_mut();
        let status = unsafe { oc_graph_from_edges(4, ends.as_ptr(), 4, &mut g) };
        assert_eq!(status, OcStatus::Ok);
        g
    }

    #[test]
    fn build_query_and_free_a_graph() {
        let g = c4();
        unsafe {
            assert_eq!(oc_graph_vertex_count(g), 4);
            assert_eq!(oc_graph_edge_count(g), 4);
            oc_graph_free(g);
            oc_graph_free(ptr::null_mut());
        }
    }

    #[test]
    fn exact_values_on_c4() {
        let g = c4();
        let mut v = 0u32;
        unsafe {
            assert_eq!(oc_exact_chi_o(g, 0, &mut v), OcStatus::Ok);
            assert_eq!(v, 4);
            assert_eq!(oc_exact_chi_io(g, 0, &mut v), OcStatus::Ok);
            assert_eq!(v, 2);
            oc_graph_free(g);
        }
    }

    #[test]
    fn budget_exhaustion_maps_to_its_own_status() {
        let g = c4();
        let mut v = 0u32;
        let status = unsafe { oc_exact_chi_o(g, 1, &mut v) };
        assert_eq!(status, OcStatus::Budget);
        assert!(last_error().contains("budget"), "{}", last_error());
        unsafe { oc_graph_free(g) };
    }

    #[test]
    fn colorings_verify_against_the_library() {
        let g = c4();
        unsafe {
            let mut c = ptr::null_mut();
            assert_eq!(oc_improper_odd_color(g, &mut c), OcStatus::Ok);
            let colors: Vec<u32> = (0..oc_coloring_len(c)).map(|v| oc_coloring_get(c, v)).collect();
            let (ok, _) =
                oddcolor::exact::is_odd_coloring(&(*g).graph, &colors, false).unwrap();
            assert!(ok);
            assert_eq!(oc_coloring_is_proper(c), 0);
            oc_coloring_free(c);

            let mut c = ptr::null_mut();
            assert_eq!(oc_proper_odd_color(g, &mut c), OcStatus::Ok);
            let colors: Vec<u32> = (0..oc_coloring_len(c)).map(|v| oc_coloring_get(c, v)).collect();
            let (ok, _) =
                oddcolor::exact::is_odd_coloring(&(*g).graph, &colors, true).unwrap();
            assert!(ok);
            assert_eq!(oc_coloring_is_proper(c), 1);
            assert!(oc_coloring_num_colors(c) >= 4);
            assert_eq!(oc_coloring_get(c, 99), 0);
            oc_coloring_free(c);
            oc_graph_free(g);
        }
    }

    #[test]
    fn gn_handles_expose_the_published_shape() {
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(oc_gn(4, &mut g), OcStatus::Ok);
            assert_eq!(oc_graph_vertex_count(g), 6);
            assert_eq!(oc_graph_edge_count(g), 1);
            oc_graph_free(g);
            assert_eq!(oc_gn(0, &mut g), OcStatus::InvalidInput);
        }
    }

    #[test]
    fn error_paths_report_status_and_message() {
        unsafe {
            let mut g = ptr::null_mut();
            let ends = [0usize, 0];
            assert_eq!(oc_graph_from_edges(1, ends.as_ptr(), 1, &mut g), OcStatus::InvalidInput);
            assert!(!last_error().is_empty());

            assert_eq!(oc_graph_from_edges(1, ends.as_ptr(), 1, ptr::null_mut()), OcStatus::NullPointer);
            assert_eq!(oc_graph_from_edges(3, ptr::null(), 2, &mut g), OcStatus::NullPointer);
            assert_eq!(last_error(), "null pointer argument");

            let mut v = 0u32;
            assert_eq!(oc_exact_chi_o(ptr::null(), 0, &mut v), OcStatus::NullPointer);
        }
    }
}
