//! C ABI over the ramseylab library.
//!
//! Every constructor hands back an opaque handle that must be released with
//! the matching `rl_*_free` call, and every fallible function returns an
//! [`RlStatus`]. On failure the thread-local message behind
//! [`rl_last_error_message`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ramseylab::num::ToPrimitive;
use ramseylab::{
    arrows, balance_report, expected_mono_copies, product_coloring, ramsey_number,
    random_coloring, turan_coloring, verify_free, EdgeColoring, Graph, PatternSpec, SearchError,
    SearchLimits,
};

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RlStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was outside the supported domain.
    InvalidArgument = 2,
    /// A pattern spec, graph, or coloring failed to parse.
    ParseError = 3,
    /// The search gave up because it reached the configured order limit.
    LimitExceeded = 4,
    /// A file read failed.
    IoError = 5,
    /// The library panicked; treat the handle state as poisoned.
    InternalError = 6,
}

/// Opaque simple graph handle.
pub struct RlGraph {
    inner: Graph,
}

/// Opaque edge-coloring handle.
pub struct RlColoring {
    inner: EdgeColoring,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: RlStatus, message: &str) -> RlStatus {
    set_error(message);
    status
}

fn guard(body: impl FnOnce() -> RlStatus) -> RlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(RlStatus::InternalError, "internal panic"),
    }
}

unsafe fn str_arg<'a>(ptr: *const c_char) -> Result<&'a str, RlStatus> {
    if ptr.is_null() {
        return Err(fail(RlStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(RlStatus::InvalidArgument, "string argument is not utf-8"))
}

fn limits_from(max_n: usize, workers: usize) -> SearchLimits {
    let default = SearchLimits::default();
    SearchLimits {
        max_n: if max_n == 0 { default.max_n } else { max_n },
        workers: if workers == 0 {
            default.workers
        } else {
            workers
        },
    }
}

fn search_status(err: &SearchError) -> RlStatus {
    match err {
        SearchError::LimitExceeded { .. } | SearchError::NoArrowingWithinLimit { .. } => {
            RlStatus::LimitExceeded
        }
        _ => RlStatus::InvalidArgument,
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread. Never free it.
#[no_mangle]
pub extern "C" fn rl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a graph from a pattern spec such as "clique:3", "path:4",
/// "cycle:5", "hkn:2,3", "gkn:2,3", "hprime:2,6", or "file:PATH".
#[no_mangle]
pub unsafe extern "C" fn rl_graph_from_pattern(
    spec: *const c_char,
    out: *mut *mut RlGraph,
) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return fail(RlStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        let text = match str_arg(spec) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let parsed: PatternSpec = match text.parse() {
            Ok(p) => p,
            Err(e) => return fail(RlStatus::ParseError, &format!("{e}")),
        };
        match parsed.build() {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(RlGraph { inner: graph }));
                RlStatus::Ok
            }
            Err(e) => fail(RlStatus::ParseError, &format!("{e}")),
        }
    })
}

/// Parse a graph from its text format.
#[no_mangle]
pub unsafe extern "C" fn rl_graph_parse(text: *const c_char, out: *mut *mut RlGraph) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return fail(RlStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        let text = match str_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Graph::parse(text) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(RlGraph { inner: graph }));
                RlStatus::Ok
            }
            Err(e) => fail(RlStatus::ParseError, &format!("{e}")),
        }
    })
}

/// Render a graph to its text format. Free the result with rl_string_free.
#[no_mangle]
pub unsafe extern "C" fn rl_graph_to_text(
    graph: *const RlGraph,
    out: *mut *mut c_char,
) -> RlStatus {
    guard(|| {
        if graph.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "graph or out pointer is null");
        }
        let text = (*graph).inner.to_text();
        match CString::new(text) {
            Ok(c) => {
                *out = c.into_raw();
                RlStatus::Ok
            }
            Err(_) => fail(RlStatus::InternalError, "text contained a nul byte"),
        }
    })
}

/// Number of vertices; 0 when the handle is null.
#[no_mangle]
pub unsafe extern "C" fn rl_graph_vertex_count(graph: *const RlGraph) -> usize {
    if graph.is_null() {
        0
    } else {
        (*graph).inner.vertex_count()
    }
}

/// Number of edges; 0 when the handle is null.
#[no_mangle]
pub unsafe extern "C" fn rl_graph_edge_count(graph: *const RlGraph) -> usize {
    if graph.is_null() {
        0
    } else {
        (*graph).inner.edge_count()
    }
}

/// Degeneracy of the graph; 0 when the handle is null.
#[no_mangle]
pub unsafe extern "C" fn rl_graph_degeneracy(graph: *const RlGraph) -> usize {
    if graph.is_null() {
        0
    } else {
        (*graph).inner.degeneracy()
    }
}

/// Release a graph handle.
#[no_mangle]
pub unsafe extern "C" fn rl_graph_free(graph: *mut RlGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

fn coloring_out(
    out: *mut *mut RlColoring,
    result: Result<EdgeColoring, impl std::fmt::Display>,
    status: RlStatus,
) -> RlStatus {
    match result {
        Ok(coloring) => {
            unsafe { *out = Box::into_raw(Box::new(RlColoring { inner: coloring })) };
            RlStatus::Ok
        }
        Err(e) => fail(status, &format!("{e}")),
    }
}

/// Two-colored Turan witness on k*n vertices: color 0 inside the k blocks
/// of size n, color 1 across blocks.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_turan(
    k: usize,
    n: usize,
    out: *mut *mut RlColoring,
) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return fail(RlStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        coloring_out(out, turan_coloring(k, n), RlStatus::InvalidArgument)
    })
}

/// Product coloring: n blocks per base vertex, a fresh color inside blocks,
/// base colors across them.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_product(
    base: *const RlColoring,
    n: usize,
    out: *mut *mut RlColoring,
) -> RlStatus {
    guard(|| {
        if base.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "base or out pointer is null");
        }
        *out = std::ptr::null_mut();
        coloring_out(
            out,
            product_coloring(&(*base).inner, n),
            RlStatus::InvalidArgument,
        )
    })
}

/// Seeded uniform random q-coloring of the complete graph on n vertices.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_random(
    n: usize,
    q: u8,
    seed: u64,
    out: *mut *mut RlColoring,
) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return fail(RlStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        coloring_out(out, random_coloring(n, q, seed), RlStatus::InvalidArgument)
    })
}

/// Parse a coloring from its text format.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_parse(
    text: *const c_char,
    out: *mut *mut RlColoring,
) -> RlStatus {
    guard(|| {
        if out.is_null() {
            return fail(RlStatus::NullPointer, "out pointer is null");
        }
        *out = std::ptr::null_mut();
        let text = match str_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        coloring_out(out, EdgeColoring::parse(text), RlStatus::ParseError)
    })
}

/// Render a coloring to its text format. Free the result with
/// rl_string_free.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_to_text(
    coloring: *const RlColoring,
    out: *mut *mut c_char,
) -> RlStatus {
    guard(|| {
        if coloring.is_null() || out.is_null() {
            return fail(RlStatus::NullPointer, "coloring or out pointer is null");
        }
        match CString::new((*coloring).inner.to_text()) {
            Ok(c) => {
                *out = c.into_raw();
                RlStatus::Ok
            }
            Err(_) => fail(RlStatus::InternalError, "text contained a nul byte"),
        }
    })
}

/// Number of vertices; 0 when the handle is null.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_vertex_count(coloring: *const RlColoring) -> usize {
    if coloring.is_null() {
        0
    } else {
        (*coloring).inner.vertex_count()
    }
}

/// Number of colors; 0 when the handle is null.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_color_count(coloring: *const RlColoring) -> u8 {
    if coloring.is_null() {
        0
    } else {
        (*coloring).inner.color_count()
    }
}

/// Color of edge {u, v}, or -1 when the handle is null, u equals v, or a
/// vertex is out of range.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_edge_color(
    coloring: *const RlColoring,
    u: usize,
    v: usize,
) -> i32 {
    if coloring.is_null() {
        return -1;
    }
    let c = &(*coloring).inner;
    if u == v || u >= c.vertex_count() || v >= c.vertex_count() {
        return -1;
    }
    i32::from(c.color(u, v))
}

/// Release a coloring handle.
#[no_mangle]
pub unsafe extern "C" fn rl_coloring_free(coloring: *mut RlColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// Check whether the coloring has no monochromatic copy of the pattern in
/// any color. Writes true into out_is_free when it is copy-free.
#[no_mangle]
pub unsafe extern "C" fn rl_verify_free(
    coloring: *const RlColoring,
    pattern: *const RlGraph,
    out_is_free: *mut bool,
) -> RlStatus {
    guard(|| {
        if coloring.is_null() || pattern.is_null() || out_is_free.is_null() {
            return fail(RlStatus::NullPointer, "argument pointer is null");
        }
        let transcript = verify_free(&(*coloring).inner, &(*pattern).inner);
        *out_is_free = transcript.free();
        RlStatus::Ok
    })
}

/// Decide whether every q-coloring of the complete graph on n vertices
/// contains a monochromatic copy of the pattern. Pass 0 for max_n or
/// workers to use the defaults.
#[no_mangle]
pub unsafe extern "C" fn rl_arrows(
    n: usize,
    pattern: *const RlGraph,
    q: u8,
    max_n: usize,
    workers: usize,
    out_arrows: *mut bool,
) -> RlStatus {
    guard(|| {
        if pattern.is_null() || out_arrows.is_null() {
            return fail(RlStatus::NullPointer, "argument pointer is null");
        }
        let limits = limits_from(max_n, workers);
        match arrows(n, &(*pattern).inner, q, &limits) {
            Ok(outcome) => {
                *out_arrows = outcome.arrows();
                RlStatus::Ok
            }
            Err(e) => fail(search_status(&e), &format!("{e}")),
        }
    })
}

/// Smallest N whose complete graph arrows the pattern in q colors. Returns
/// RL_STATUS_LIMIT_EXCEEDED when no such N at or below the limit exists.
/// Pass 0 for max_n or workers to use the defaults.
#[no_mangle]
pub unsafe extern "C" fn rl_ramsey_number(
    pattern: *const RlGraph,
    q: u8,
    max_n: usize,
    workers: usize,
    out_value: *mut usize,
) -> RlStatus {
    guard(|| {
        if pattern.is_null() || out_value.is_null() {
            return fail(RlStatus::NullPointer, "argument pointer is null");
        }
        let limits = limits_from(max_n, workers);
        match ramsey_number(&(*pattern).inner, q, &limits) {
            Ok(cert) => {
                *out_value = cert.value;
                RlStatus::Ok
            }
            Err(e) => fail(search_status(&e), &format!("{e}")),
        }
    })
}

/// First-moment bound k! C(N,k) 2^(1 - d k / 2) on monochromatic copies of
/// a k-vertex d-regular pattern, evaluated to double precision.
#[no_mangle]
pub unsafe extern "C" fn rl_expected_mono_copies(
    k: u64,
    d: u64,
    n: u64,
    out_value: *mut f64,
) -> RlStatus {
    guard(|| {
        if out_value.is_null() {
            return fail(RlStatus::NullPointer, "out pointer is null");
        }
        match expected_mono_copies(k, d, n) {
            Ok(bound) => {
                *out_value = bound.value_f64();
                RlStatus::Ok
            }
            Err(e) => fail(RlStatus::InvalidArgument, &format!("{e}")),
        }
    })
}

/// Largest epsilon for which a two-coloring is epsilon-balanced, evaluated
/// to double precision.
#[no_mangle]
pub unsafe extern "C" fn rl_balance_epsilon_star(
    coloring: *const RlColoring,
    out_value: *mut f64,
) -> RlStatus {
    guard(|| {
        if coloring.is_null() || out_value.is_null() {
            return fail(RlStatus::NullPointer, "argument pointer is null");
        }
        match balance_report(&(*coloring).inner) {
            Ok(report) => {
                *out_value = report.epsilon_star.to_f64().unwrap_or(f64::NAN);
                RlStatus::Ok
            }
            Err(e) => fail(RlStatus::InvalidArgument, &format!("{e}")),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn graph(spec: &str) -> *mut RlGraph {
        let c = CString::new(spec).unwrap();
        let mut out = ptr::null_mut();
        let status = unsafe { rl_graph_from_pattern(c.as_ptr(), &mut out) };
        assert_eq!(status, RlStatus::Ok);
        assert!(!out.is_null());
        out
    }

    fn last_error() -> String {
        unsafe {
            CStr::from_ptr(rl_last_error_message())
                .to_string_lossy()
                .into_owned()
        }
    }

    #[test]
    fn graph_round_trip_through_text() {
        let g = graph("hkn:2,3");
        unsafe {
            assert_eq!(rl_graph_vertex_count(g), 3);
            assert_eq!(rl_graph_edge_count(g), 1);
            let mut text = ptr::null_mut();
            assert_eq!(rl_graph_to_text(g, &mut text), RlStatus::Ok);
            let mut back = ptr::null_mut();
            assert_eq!(rl_graph_parse(text, &mut back), RlStatus::Ok);
            assert_eq!(rl_graph_vertex_count(back), 3);
            rl_string_free(text);
            rl_graph_free(back);
            rl_graph_free(g);
        }
    }

    #[test]
    fn pattern_errors_are_reported() {
        let c = CString::new("klique:3").unwrap();
        let mut out = ptr::null_mut();
        let status = unsafe { rl_graph_from_pattern(c.as_ptr(), &mut out) };
        assert_eq!(status, RlStatus::ParseError);
        assert!(out.is_null());
        assert!(!last_error().is_empty());

        let status = unsafe { rl_graph_from_pattern(ptr::null(), &mut out) };
        assert_eq!(status, RlStatus::NullPointer);
        let g = graph("clique:3");
        let status = unsafe { rl_graph_to_text(g, ptr::null_mut()) };
        assert_eq!(status, RlStatus::NullPointer);
        unsafe { rl_graph_free(g) };
    }

    #[test]
    fn ramsey_number_of_triangle() {
        let g = graph("clique:3");
        let mut value = 0usize;
        let status = unsafe { rl_ramsey_number(g, 2, 0, 0, &mut value) };
        assert_eq!(status, RlStatus::Ok);
        assert_eq!(value, 6);

        let mut arrows_out = false;
        assert_eq!(
            unsafe { rl_arrows(5, g, 2, 0, 0, &mut arrows_out) },
            RlStatus::Ok
        );
        assert!(!arrows_out);
        assert_eq!(
            unsafe { rl_arrows(6, g, 2, 0, 0, &mut arrows_out) },
            RlStatus::Ok
        );
        assert!(arrows_out);
        unsafe { rl_graph_free(g) };
    }

    #[test]
    fn ramsey_limit_is_reported() {
        let g = graph("clique:4");
        let mut value = 0usize;
        let status = unsafe { rl_ramsey_number(g, 2, 6, 0, &mut value) };
        assert_eq!(status, RlStatus::LimitExceeded);
        assert!(last_error().contains("6"));
        unsafe { rl_graph_free(g) };
    }

    #[test]
    fn turan_coloring_verifies_free() {
        let mut coloring = ptr::null_mut();
        assert_eq!(
            unsafe { rl_coloring_turan(3, 6, &mut coloring) },
            RlStatus::Ok
        );
        unsafe {
            assert_eq!(rl_coloring_vertex_count(coloring), 18);
            assert_eq!(rl_coloring_color_count(coloring), 2);
            assert_eq!(rl_coloring_edge_color(coloring, 0, 1), 0);
            assert_eq!(rl_coloring_edge_color(coloring, 0, 6), 1);
            assert_eq!(rl_coloring_edge_color(coloring, 0, 0), -1);
        }
        let gkn = graph("gkn:3,6");
        let k3 = graph("clique:3");
        let mut free = false;
        assert_eq!(
            unsafe { rl_verify_free(coloring, gkn, &mut free) },
            RlStatus::Ok
        );
        assert!(free);
        assert_eq!(
            unsafe { rl_verify_free(coloring, k3, &mut free) },
            RlStatus::Ok
        );
        assert!(!free);
        unsafe {
            rl_graph_free(gkn);
            rl_graph_free(k3);
            rl_coloring_free(coloring);
        }
    }

    #[test]
    fn coloring_text_round_trip_and_product() {
        let mut random = ptr::null_mut();
        assert_eq!(
            unsafe { rl_coloring_random(10, 2, 42, &mut random) },
            RlStatus::Ok
        );
        let mut text = ptr::null_mut();
        assert_eq!(
            unsafe { rl_coloring_to_text(random, &mut text) },
            RlStatus::Ok
        );
        let mut back = ptr::null_mut();
        assert_eq!(unsafe { rl_coloring_parse(text, &mut back) }, RlStatus::Ok);
        assert_eq!(unsafe { rl_coloring_vertex_count(back) }, 10);

        let mut product = ptr::null_mut();
        assert_eq!(
            unsafe { rl_coloring_product(back, 3, &mut product) },
            RlStatus::Ok
        );
        assert_eq!(unsafe { rl_coloring_vertex_count(product) }, 30);
        assert_eq!(unsafe { rl_coloring_color_count(product) }, 3);
        unsafe {
            rl_string_free(text);
            rl_coloring_free(random);
            rl_coloring_free(back);
            rl_coloring_free(product);
        }
    }

    #[test]
    fn numeric_helpers() {
        let mut value = 0.0f64;
        assert_eq!(
            unsafe { rl_expected_mono_copies(7, 6, 8, &mut value) },
            RlStatus::Ok
        );
        assert!((value - 315.0 / 8192.0).abs() < 1e-12);
        assert_eq!(
            unsafe { rl_expected_mono_copies(1, 6, 8, &mut value) },
            RlStatus::InvalidArgument
        );

        let mut coloring = ptr::null_mut();
        assert_eq!(
            unsafe { rl_coloring_turan(2, 3, &mut coloring) },
            RlStatus::Ok
        );
        let mut eps = 0.0f64;
        assert_eq!(
            unsafe { rl_balance_epsilon_star(coloring, &mut eps) },
            RlStatus::Ok
        );
        assert!((eps - 0.4).abs() < 1e-12);
        unsafe { rl_coloring_free(coloring) };
    }

    #[test]
    fn generated_header_covers_the_surface() {
        let header = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ramseylab.h"));
        for needle in [
            "RAMSEYLAB_H",
            "typedef struct RlGraph RlGraph;",
            "typedef struct RlColoring RlColoring;",
            "rl_last_error_message",
            "rl_ramsey_number",
            "rl_verify_free",
            "RL_STATUS_LIMIT_EXCEEDED",
        ] {
            assert!(header.contains(needle), "header is missing {needle}");
        }
    }
}
