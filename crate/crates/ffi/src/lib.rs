//! C ABI over `turan-core`.
//!
//! Graphs cross the boundary as opaque `TuranGraph` handles owned by the
//! caller and released with `turan_graph_free`. Every fallible function
//! returns a `TuranStatus`; on failure `turan_last_error` describes it.
//! Strings returned through out-pointers are released with
//! `turan_string_free`. Vertices are 0-indexed here, unlike the file format.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use turan_core::graph::{parse_graph, write_graph};
use turan_core::matching::{max_edges_bounded_degree, max_matching};
use turan_core::oracle::{exact_ex_with, OracleConfig, OracleError};
use turan_core::pattern::{count_copies, hom_exists, is_family_free, parse_pattern};
use turan_core::pipeline::approx_ex;
use turan_core::rational::parse_rational;
use turan_core::{ForbiddenFamily, Graph, PatternSpec};

/// Opaque graph handle.
pub struct TuranGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuranStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BudgetExhausted = 4,
    ComputeFailed = 5,
    Panic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

struct Failure(TuranStatus, String);

type FfiResult = Result<(), Failure>;

fn fail(status: TuranStatus, msg: impl std::fmt::Display) -> Failure {
    Failure(status, msg.to_string())
}

/// Runs `body`, turning errors and panics into a status plus a stored message.
fn guard(body: impl FnOnce() -> FfiResult) -> TuranStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TuranStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TuranStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const TuranGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| fail(TuranStatus::NullPointer, "null graph handle"))
}

unsafe fn text_arg<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(TuranStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(TuranStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| fail(TuranStatus::NullPointer, "null output pointer"))
}

unsafe fn family_arg(members: *const *const TuranGraph, len: usize) -> Result<ForbiddenFamily, Failure> {
    if members.is_null() {
        return Err(fail(TuranStatus::NullPointer, "null family array"));
    }
    let graphs = std::slice::from_raw_parts(members, len)
        .iter()
        .map(|&m| graph_ref(m).cloned())
        .collect::<Result<Vec<_>, _>>()?;
    ForbiddenFamily::new(graphs).map_err(|e| fail(TuranStatus::InvalidArgument, e))
}

fn boxed(g: Graph) -> *mut TuranGraph {
    Box::into_raw(Box::new(TuranGraph(g)))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("reports contain no nul bytes").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn turan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses the `p edge` / `e u v` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_parse(text: *const c_char, out: *mut *mut TuranGraph) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        let g = parse_graph(text_arg(text)?).map_err(|e| fail(TuranStatus::ParseError, e))?;
        *out = boxed(g);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` pairs `(us[i], vs[i])`.
///
/// # Safety
/// `us` and `vs` must each point to `m` readable values (or be NULL when
/// `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_from_edges(
    n: usize,
    us: *const usize,
    vs: *const usize,
    m: usize,
    out: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        let (us, vs) = if m == 0 {
            (&[][..], &[][..])
        } else {
            if us.is_null() || vs.is_null() {
                return Err(fail(TuranStatus::NullPointer, "null edge array"));
            }
            (std::slice::from_raw_parts(us, m), std::slice::from_raw_parts(vs, m))
        };
        let g = Graph::from_edges(n, us.iter().copied().zip(vs.iter().copied()))
            .map_err(|e| fail(TuranStatus::InvalidArgument, e))?;
        *out = boxed(g);
        Ok(())
    })
}

/// Builds a pattern from shorthand (`K4`, `C5`, `P3`, `S3`, `M2`, `@file`).
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_pattern(spec: *const c_char, out: *mut *mut TuranGraph) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        let g = parse_pattern(text_arg(spec)?).map_err(|e| fail(TuranStatus::ParseError, e))?;
        *out = boxed(g);
        Ok(())
    })
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_free(g: *mut TuranGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_vertex_count(g: *const TuranGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_edge_count(g: *const TuranGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Writes the graph in the text format; free the result with `turan_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_write(g: *const TuranGraph, out: *mut *mut c_char) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = c_string(write_graph(graph_ref(g)?));
        Ok(())
    })
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn turan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of copies of `t` in `g`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_count_copies(g: *const TuranGraph, t: *const TuranGraph, out: *mut u64) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = count_copies(graph_ref(g)?, &PatternSpec::new(graph_ref(t)?.clone()));
        Ok(())
    })
}

/// Whether `g` contains no member of the family as a subgraph.
///
/// # Safety
/// `members` must point to `len` live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_is_family_free(
    g: *const TuranGraph,
    members: *const *const TuranGraph,
    len: usize,
    out: *mut bool,
) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = is_family_free(graph_ref(g)?, &family_arg(members, len)?);
        Ok(())
    })
}

/// Whether some homomorphism maps `f` into `g`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_hom_exists(f: *const TuranGraph, g: *const TuranGraph, out: *mut bool) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = hom_exists(graph_ref(f)?, graph_ref(g)?);
        Ok(())
    })
}

/// `ex(G, T, F)`. `witness` may be NULL; otherwise it receives a new handle.
/// A `node_budget` of 0 selects the default.
///
/// # Safety
/// Handles must be live; `members` must point to `len` live handles;
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_exact_ex(
    g: *const TuranGraph,
    t: *const TuranGraph,
    members: *const *const TuranGraph,
    len: usize,
    node_budget: u64,
    threads: usize,
    value: *mut u64,
    witness: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        let value = out_arg(value)?;
        let mut config = OracleConfig { threads: threads.max(1), ..OracleConfig::default() };
        if node_budget > 0 {
            config.node_budget = node_budget;
        }
        let t = PatternSpec::new(graph_ref(t)?.clone());
        let found = exact_ex_with(graph_ref(g)?, &t, &family_arg(members, len)?, &config).map_err(|e| match e {
            OracleError::Incomplete { .. } => fail(TuranStatus::BudgetExhausted, e),
        })?;
        *value = found.value;
        if let Some(w) = witness.as_mut() {
            *w = boxed(found.witness);
        }
        Ok(())
    })
}

/// Size of a maximum matching.
///
/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_max_matching(g: *const TuranGraph, out: *mut usize) -> TuranStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = max_matching(graph_ref(g)?).len();
        Ok(())
    })
}

/// Most edges in a subgraph of maximum degree at most `t`. `witness` may be NULL.
///
/// # Safety
/// `g` must be live; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_max_edges_bounded_degree(
    g: *const TuranGraph,
    t: usize,
    value: *mut u64,
    witness: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        let value = out_arg(value)?;
        let found = max_edges_bounded_degree(graph_ref(g)?, t).map_err(|e| fail(TuranStatus::InvalidArgument, e))?;
        *value = found.value;
        if let Some(w) = witness.as_mut() {
            *w = boxed(found.witness);
        }
        Ok(())
    })
}

/// Runs the approximation pipeline with default settings and returns its
/// report as JSON (free with `turan_string_free`). `eps` is `"a/b"` or a decimal.
///
/// # Safety
/// Handles must be live; `members` must point to `len` live handles;
/// `eps` must be NUL-terminated; `json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn turan_approx_ex(
    g: *const TuranGraph,
    t: *const TuranGraph,
    members: *const *const TuranGraph,
    len: usize,
    eps: *const c_char,
    json: *mut *mut c_char,
) -> TuranStatus {
    guard(|| {
        let json = out_arg(json)?;
        let eps = parse_rational(text_arg(eps)?).map_err(|e| fail(TuranStatus::InvalidArgument, e))?;
        let t = PatternSpec::new(graph_ref(t)?.clone());
        let report = approx_ex(graph_ref(g)?, &t, &family_arg(members, len)?, &eps)
            .map_err(|e| fail(TuranStatus::ComputeFailed, e))?;
        *json = c_string(serde_json::to_string(&report).expect("serialisable"));
        Ok(())
    })
}
