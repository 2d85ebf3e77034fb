//! C ABI over `diamond-core`.
//!
//! Every fallible function returns a [`DgStatus`] and writes its result through
//! an out-pointer. On failure a message is available from
//! [`dg_last_error`] until the next call on the same thread. Strings returned
//! through out-pointers are owned by the caller and released with
//! [`dg_string_free`]; handles are released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use diamond_core::group::{classify_group, Classification};
use diamond_core::{
    all_generators, boolean_lattice, count_paths, ideal_lattice, pascal_interval, young_interval, Error, FinitePoset,
    GradedGraph, GraphError, Limits, PathTable, Permutation, YoungDiagram,
};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DgStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    InvalidArgument = 1,
    /// A diagram, poset or JSON document did not parse.
    ParseError = 2,
    /// A size budget was exceeded.
    BudgetExceeded = 3,
    /// The graph is valid but some 2-interval has more than two middle vertices.
    NotDiamond = 4,
    /// Any other failure, including a caught panic.
    Internal = 5,
}

/// Size budgets; pass a null pointer for the defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct DgLimits {
    pub vertices: usize,
    pub paths: usize,
    pub poset_elements: usize,
}

/// A graded graph together with the budgets it was built under.
pub struct DgGraph {
    graph: GradedGraph,
    limits: Limits,
}

/// The path group of a graph.
pub struct DgGroup {
    generators: Vec<Permutation>,
    degree: usize,
    classification: Option<Classification>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(DgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_budget() {
            DgStatus::BudgetExceeded
        } else {
            match &e {
                Error::Diagram(_) | Error::Graph(GraphError::ParseError { .. }) => DgStatus::ParseError,
                Error::Involution(_) => DgStatus::NotDiamond,
                Error::Graph(_) => DgStatus::ParseError,
                _ => DgStatus::Internal,
            }
        };
        Failure(status, e.to_string())
    }
}

fn fail<E: Into<Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

fn invalid(msg: &str) -> Failure {
    Failure(DgStatus::InvalidArgument, msg.to_string())
}

/// Runs `f`, records any error and converts panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DgStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DgStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{name} is not UTF-8")))
}

unsafe fn limits_arg(p: *const DgLimits) -> Limits {
    let mut limits = Limits::default();
    if let Some(l) = p.as_ref() {
        limits.vertices = l.vertices;
        limits.paths = l.paths;
        limits.poset_elements = l.poset_elements;
    }
    limits
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(DgStatus::Internal, "string has a nul byte".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_graph(out: *mut *mut DgGraph, graph: GradedGraph, limits: Limits) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(DgGraph { graph, limits })))
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn dg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Hasse diagram of the Boolean lattice on `n` atoms.
///
/// # Safety
/// `limits` may be null; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_boolean(n: u32, limits: *const DgLimits, out: *mut *mut DgGraph) -> DgStatus {
    guard(|| {
        let limits = limits_arg(limits);
        let g = boolean_lattice(n, &limits).map_err(fail)?;
        put_graph(out, g, limits)
    })
}

/// Interval from the origin to `target[0..len]` in the Pascal graph of dimension `len >= 2`.
///
/// # Safety
/// `target` must point to `len` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_pascal(
    target: *const u32,
    len: usize,
    limits: *const DgLimits,
    out: *mut *mut DgGraph,
) -> DgStatus {
    guard(|| {
        if target.is_null() {
            return Err(invalid("target is null"));
        }
        if len < 2 {
            return Err(invalid("target needs at least 2 coordinates"));
        }
        let target = std::slice::from_raw_parts(target, len);
        let limits = limits_arg(limits);
        let g = pascal_interval(target, &limits).map_err(fail)?;
        put_graph(out, g, limits)
    })
}

/// Young interval `[mu, lambda]`, both given as comma-separated parts such as
/// `"4,2,2"`. A null `mu` means the empty diagram.
///
/// # Safety
/// `lambda` must be a valid C string, `mu` null or a valid C string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_young(
    lambda: *const c_char,
    mu: *const c_char,
    limits: *const DgLimits,
    out: *mut *mut DgGraph,
) -> DgStatus {
    guard(|| {
        let lambda = YoungDiagram::parse(str_arg(lambda, "lambda")?).map_err(fail)?;
        let mu = if mu.is_null() {
            YoungDiagram::empty()
        } else {
            YoungDiagram::parse(str_arg(mu, "mu")?).map_err(fail)?
        };
        let limits = limits_arg(limits);
        let g = young_interval(&lambda, &mu, &limits).map_err(fail)?;
        put_graph(out, g, limits)
    })
}

/// Lattice of order ideals of a poset given as relations, e.g. `"a<c,b<c"`.
///
/// # Safety
/// `relations` must be a valid C string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_ideals(
    relations: *const c_char,
    limits: *const DgLimits,
    out: *mut *mut DgGraph,
) -> DgStatus {
    guard(|| {
        let poset = FinitePoset::parse(str_arg(relations, "relations")?).map_err(fail)?;
        let limits = limits_arg(limits);
        let g = ideal_lattice(&poset, &limits).map_err(fail)?;
        put_graph(out, g, limits)
    })
}

/// Parses the JSON form `{"n", "levels", "edges"}`.
///
/// # Safety
/// `json` must be a valid C string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_from_json(
    json: *const c_char,
    limits: *const DgLimits,
    out: *mut *mut DgGraph,
) -> DgStatus {
    guard(|| {
        let g = GradedGraph::from_json(str_arg(json, "json")?).map_err(fail)?;
        let limits = limits_arg(limits);
        if g.vertex_count() > limits.vertices {
            return Err(Failure(
                DgStatus::BudgetExceeded,
                format!("{} vertices exceed the budget of {}", g.vertex_count(), limits.vertices),
            ));
        }
        put_graph(out, g, limits)
    })
}

/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_free(g: *mut DgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn graph_ref<'a>(g: *const DgGraph) -> Result<&'a DgGraph, Failure> {
    g.as_ref().ok_or_else(|| invalid("graph handle is null"))
}

/// Number of levels minus one.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_rank(g: *const DgGraph, out: *mut usize) -> DgStatus {
    guard(|| put(out, graph_ref(g)?.graph.n()))
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_vertex_count(g: *const DgGraph, out: *mut usize) -> DgStatus {
    guard(|| put(out, graph_ref(g)?.graph.vertex_count()))
}

/// Number of maximal paths as a decimal string.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_path_count(g: *const DgGraph, out: *mut *mut c_char) -> DgStatus {
    guard(|| put_string(out, count_paths(&graph_ref(g)?.graph).to_string()))
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_graph_to_json(g: *const DgGraph, out: *mut *mut c_char) -> DgStatus {
    guard(|| put_string(out, graph_ref(g)?.graph.to_json()))
}

/// Enumerates the maximal paths and builds the group generated by the
/// combinatorial involutions.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_group_new(g: *const DgGraph, out: *mut *mut DgGroup) -> DgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let pt = PathTable::enumerate(&g.graph, &g.limits).map_err(fail)?;
        let generators = all_generators(&g.graph, &pt).map_err(fail)?;
        let group = DgGroup {
            generators,
            degree: pt.len(),
            classification: None,
        };
        put(out, Box::into_raw(Box::new(group)))
    })
}

/// # Safety
/// `grp` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn dg_group_free(grp: *mut DgGroup) {
    if !grp.is_null() {
        drop(Box::from_raw(grp));
    }
}

unsafe fn classified<'a>(grp: *mut DgGroup) -> Result<&'a Classification, Failure> {
    let grp = grp.as_mut().ok_or_else(|| invalid("group handle is null"))?;
    if grp.classification.is_none() {
        grp.classification = Some(classify_group(&grp.generators, grp.degree).map_err(fail)?);
    }
    Ok(grp.classification.as_ref().expect("just set"))
}

/// Number of maximal paths the group acts on.
///
/// # Safety
/// `grp` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_group_degree(grp: *const DgGroup, out: *mut usize) -> DgStatus {
    guard(|| {
        let grp = grp.as_ref().ok_or_else(|| invalid("group handle is null"))?;
        put(out, grp.degree)
    })
}

/// Exact group order as a decimal string.
///
/// # Safety
/// `grp` must be a live handle not used concurrently; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_group_order(grp: *mut DgGroup, out: *mut *mut c_char) -> DgStatus {
    guard(|| put_string(out, classified(grp)?.order.to_string()))
}

/// Classification as JSON: tag, N, k, order, transitivity flags,
/// generators_even, d_verified and blocks.
///
/// # Safety
/// `grp` must be a live handle not used concurrently; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dg_group_classify_json(grp: *mut DgGroup, out: *mut *mut c_char) -> DgStatus {
    guard(|| {
        let c = classified(grp)?;
        let mut doc = c.to_json_value(true);
        doc["label"] = c.label().into();
        put_string(out, doc.to_string())
    })
}
