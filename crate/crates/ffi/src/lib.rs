//! C ABI for hamlab-core.
//!
//! Graphs are opaque `HamlabGraph` handles owned by the caller and released
//! with `hamlab_graph_free`. Every fallible call returns a `HamlabStatus`;
//! on failure `hamlab_last_error` describes it (per thread). Strings handed
//! out by this library must be released with `hamlab_string_free`.
//! Vertex buffers are caller-allocated; `cap` is their length in elements.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hamlab_core::coloring::{chromatic_number, criticality_report};
use hamlab_core::constructions::{iterated_mycielski, mycielski};
use hamlab_core::graph6::{emit_graph6, parse_graph6};
use hamlab_core::hamiltonian::{closure, hamiltonian_cycle, hamiltonian_path_between, is_hamiltonian_connected};
use hamlab_core::iso::is_self_complementary;
use hamlab_core::lift::mycielski_hc_certificate;
use hamlab_core::{Error, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Graph6 = 3,
    InvalidArgument = 4,
    OrderTooLarge = 5,
    VertexOutOfRange = 6,
    /// A caller buffer is shorter than the result.
    BufferTooSmall = 7,
    /// The operation's graph precondition does not hold.
    Precondition = 8,
    Panic = 99,
}

/// Opaque graph handle.
pub struct HamlabGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HamlabStatus {
    match e {
        Error::OrderTooLarge { .. } => HamlabStatus::OrderTooLarge,
        Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => HamlabStatus::VertexOutOfRange,
        Error::Graph6(_) => HamlabStatus::Graph6,
        Error::InvalidArgument(_) => HamlabStatus::InvalidArgument,
        Error::NotHamiltonianConnected { .. } | Error::Precondition(_) => HamlabStatus::Precondition,
    }
}

struct Fail(HamlabStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(HamlabStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HamlabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HamlabStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            HamlabStatus::Panic
        }
    }
}

unsafe fn graph<'a>(g: *const HamlabGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn give(g: Graph, dst: *mut *mut HamlabGraph) -> Result<(), Fail> {
    *out(dst, "out")? = Box::into_raw(Box::new(HamlabGraph { inner: g }));
    Ok(())
}

unsafe fn give_string(s: String, dst: *mut *mut c_char) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(HamlabStatus::InvalidArgument, "interior NUL".into()))?;
    *out(dst, "out")? = c.into_raw();
    Ok(())
}

unsafe fn fill(src: &[usize], buf: *mut usize, cap: usize) -> Result<(), Fail> {
    if src.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(null("buffer"));
    }
    if cap < src.len() {
        return Err(Fail(HamlabStatus::BufferTooSmall, format!("buffer holds {cap}, need {}", src.len())));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hamlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn hamlab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edgeless graph on `n` vertices.
#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_new(n: usize, out_graph: *mut *mut HamlabGraph) -> HamlabStatus {
    guard(|| give(Graph::empty(n)?, out_graph))
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_from_graph6(
    text: *const c_char,
    out_graph: *mut *mut HamlabGraph,
) -> HamlabStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s =
            CStr::from_ptr(text).to_str().map_err(|_| Fail(HamlabStatus::InvalidUtf8, "text is not UTF-8".into()))?;
        give(parse_graph6(s.trim_end())?, out_graph)
    })
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_free(g: *mut HamlabGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_clone(g: *const HamlabGraph, out_graph: *mut *mut HamlabGraph) -> HamlabStatus {
    guard(|| give(graph(g)?.clone(), out_graph))
}

/// Number of vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_order(g: *const HamlabGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.order())
}

/// Number of edges; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_size(g: *const HamlabGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.size())
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_add_edge(g: *mut HamlabGraph, u: usize, v: usize) -> HamlabStatus {
    guard(|| {
        let h = out(g, "graph")?;
        h.inner.add_edge(u, v)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_has_edge(
    g: *const HamlabGraph,
    u: usize,
    v: usize,
    out_has: *mut bool,
) -> HamlabStatus {
    guard(|| {
        let g = graph(g)?;
        let n = g.order();
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex, order: n }.into());
        }
        *out(out_has, "out_has")? = g.has_edge(u, v);
        Ok(())
    })
}

/// graph6 encoding; release with `hamlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hamlab_graph_to_graph6(g: *const HamlabGraph, out_text: *mut *mut c_char) -> HamlabStatus {
    guard(|| give_string(emit_graph6(graph(g)?)?, out_text))
}

/// Mycielskian: vertices `0..n` are the originals, `n..2n` their shadows,
/// `2n` the apex.
#[no_mangle]
pub unsafe extern "C" fn hamlab_mycielski(g: *const HamlabGraph, out_graph: *mut *mut HamlabGraph) -> HamlabStatus {
    guard(|| give(mycielski(graph(g)?)?.0, out_graph))
}

/// `M_k`, with `M_2 = K_2`.
#[no_mangle]
pub unsafe extern "C" fn hamlab_iterated_mycielski(k: usize, out_graph: *mut *mut HamlabGraph) -> HamlabStatus {
    guard(|| give(iterated_mycielski(k)?, out_graph))
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_complement(g: *const HamlabGraph, out_graph: *mut *mut HamlabGraph) -> HamlabStatus {
    guard(|| give(graph(g)?.complement(), out_graph))
}

#[no_mangle]
pub unsafe extern "C" fn hamlab_power(
    g: *const HamlabGraph,
    k: usize,
    out_graph: *mut *mut HamlabGraph,
) -> HamlabStatus {
    guard(|| give(graph(g)?.power(k)?, out_graph))
}

/// Degree-sum closure.
#[no_mangle]
pub unsafe extern "C" fn hamlab_closure(g: *const HamlabGraph, out_graph: *mut *mut HamlabGraph) -> HamlabStatus {
    guard(|| give(closure(graph(g)?), out_graph))
}

/// Writes a Hamiltonian cycle (n vertices, closing edge implied) into `buf`
/// when one exists. `out_found` is false for graphs of order below 3.
#[no_mangle]
pub unsafe extern "C" fn hamlab_hamiltonian_cycle(
    g: *const HamlabGraph,
    buf: *mut usize,
    cap: usize,
    out_found: *mut bool,
) -> HamlabStatus {
    guard(|| {
        let found = out(out_found, "out_found")?;
        let c = hamiltonian_cycle(graph(g)?)?;
        if let Some(c) = &c {
            fill(c.vertices(), buf, cap)?;
        }
        *found = c.is_some();
        Ok(())
    })
}

/// Hamiltonian path from `u` to `v`, written into `buf` when found.
#[no_mangle]
pub unsafe extern "C" fn hamlab_hamiltonian_path(
    g: *const HamlabGraph,
    u: usize,
    v: usize,
    buf: *mut usize,
    cap: usize,
    out_found: *mut bool,
) -> HamlabStatus {
    guard(|| {
        let found = out(out_found, "out_found")?;
        let p = hamiltonian_path_between(graph(g)?, u, v)?;
        if let Some(p) = &p {
            fill(p.vertices(), buf, cap)?;
        }
        *found = p.is_some();
        Ok(())
    })
}

/// On false, `out_bad_u`/`out_bad_v` (either may be null) receive the first
/// pair with no Hamiltonian path, or `SIZE_MAX` for graphs below order 2.
#[no_mangle]
pub unsafe extern "C" fn hamlab_is_hamiltonian_connected(
    g: *const HamlabGraph,
    out_connected: *mut bool,
    out_bad_u: *mut usize,
    out_bad_v: *mut usize,
) -> HamlabStatus {
    guard(|| {
        let connected = out(out_connected, "out_connected")?;
        let hc = is_hamiltonian_connected(graph(g)?)?;
        *connected = hc.is_connected();
        let (bu, bv) = hc.bad_pair.unwrap_or((usize::MAX, usize::MAX));
        if let Some(p) = out_bad_u.as_mut() {
            *p = bu;
        }
        if let Some(p) = out_bad_v.as_mut() {
            *p = bv;
        }
        Ok(())
    })
}

/// Exact chromatic number; an optimal coloring goes to `colors` if non-null.
#[no_mangle]
pub unsafe extern "C" fn hamlab_chromatic_number(
    g: *const HamlabGraph,
    out_k: *mut usize,
    colors: *mut usize,
    cap: usize,
) -> HamlabStatus {
    guard(|| {
        let k = out(out_k, "out_k")?;
        let c = chromatic_number(graph(g)?);
        if !colors.is_null() {
            fill(&c.colors, colors, cap)?;
        }
        *k = c.k;
        Ok(())
    })
}

/// Vertex- and edge-criticality: every deletion lowers the chromatic number.
#[no_mangle]
pub unsafe extern "C" fn hamlab_is_critical(
    g: *const HamlabGraph,
    out_critical: *mut bool,
    out_chi: *mut usize,
) -> HamlabStatus {
    guard(|| {
        let critical = out(out_critical, "out_critical")?;
        let r = criticality_report(graph(g)?)?;
        *critical = r.critical;
        if let Some(p) = out_chi.as_mut() {
            *p = r.chi;
        }
        Ok(())
    })
}

/// On true, `perm` (if non-null) receives an isomorphism onto the complement.
#[no_mangle]
pub unsafe extern "C" fn hamlab_is_self_complementary(
    g: *const HamlabGraph,
    out_sc: *mut bool,
    perm: *mut usize,
    cap: usize,
) -> HamlabStatus {
    guard(|| {
        let sc = out(out_sc, "out_sc")?;
        let c = is_self_complementary(graph(g)?);
        if let (Some(c), false) = (&c, perm.is_null()) {
            fill(&c.perm, perm, cap)?;
        }
        *sc = c.is_some();
        Ok(())
    })
}

/// All-pairs Hamiltonian paths of the Mycielskian of a Hamiltonian-connected
/// graph, as JSON. Release with `hamlab_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hamlab_mycielski_hc_certificate_json(
    g: *const HamlabGraph,
    out_json: *mut *mut c_char,
) -> HamlabStatus {
    guard(|| {
        let cert = mycielski_hc_certificate(graph(g)?)?;
        give_string(serde_json::to_string(&cert).expect("plain data"), out_json)
    })
}
